#pragma once

#include "frey/field.hpp"
#include "frey/frey_curve.hpp"
#include "frey/primes.hpp"
#include "frey/sunit.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace frey {

enum class CriterionId {
    Thm32Hypothesis,
    Thm41Hypothesis,
    Thm51Hypothesis,
    Prop33,
    Prop42,
    Prop52,
    PropQuadraticWK,
    PropQuadraticK,
    PropOddDegreeWK,
    PropOddDegreeK,
};

const char* criterion_name(CriterionId id);

enum class Verdict { Satisfied, Failed, SatisfiedModuloBoundedSearch };

struct ConditionEntry {
    std::string name;
    bool ok = false;
    std::string witness;
    bool attested = false;
};

struct CriterionReport {
    CriterionId id = CriterionId::Thm32Hypothesis;
    std::vector<ConditionEntry> conditions;
    Verdict verdict = Verdict::Failed;
    bool es_flag = false; // degree odd: (ES) holds unconditionally
    std::vector<std::string> attestations;
    std::vector<std::string> caveats;
};

struct ExceptionalSet {
    Int B = 1;
    int r = 1;
    std::vector<std::array<FieldElement, 3>> members;
};

/// S_r: triples (a, b, c) with b, c in {+-1} and a = sqrt of the matching
/// radicand, kept only when that root is integral.
ExceptionalSet exceptional_set(const FieldPtr& field, const Int& B, int r);

/// Every prime above 2 divides bc (then necessarily exactly one of b, c).
bool wk_membership(const FieldPtr& field, const FieldElement& a, const FieldElement& b,
                   const FieldElement& c, const Int& B, const CSpec& C, Family family, int p);

enum class QuadraticVariant { WK, K };

CriterionReport check_quadratic_criterion(const Int& d, const Int& B, const CSpec& C,
                                          Family family, QuadraticVariant variant,
                                          long height = 10);

enum class OddDegreeVariant { WK, K };

CriterionReport check_odd_degree_criterion(const FieldPtr& field, const Int& q, const Int& h_supplied,
                                           const std::optional<Int>& narrow_h_supplied,
                                           OddDegreeVariant variant, bool principal_attested = false);

enum class Theorem { Thm32, Thm41, Thm51 };

/// Hypothesis check for the asymptotic theorems, routed through the
/// normalized equation alpha + 1 = gamma^2. id_as_proposition switches the
/// reported criterion id to the proposition family.
CriterionReport check_theorem_hypothesis(const FieldPtr& field, const Int& B, const CSpec& C,
                                         Theorem theorem, long height,
                                         bool id_as_proposition = false,
                                         const Int& disc_ceiling = Int(1000000));

} // namespace frey
