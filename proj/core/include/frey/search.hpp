#pragma once

#include "frey/field.hpp"
#include "frey/frey_curve.hpp"

#include <vector>

namespace frey {

struct SearchTask {
    FieldPtr field;
    Family family = Family::SquareEq;
    Int B = 1;
    CSpec C;
    int p = 7;
    long height = 100;
    int parallel_chunks = 1;
    long prune_modulus = 97;
};

enum class SolutionClass { ExceptionalSr, WKMember, OtherNontrivialPrimitive };

struct SolutionRecord {
    FieldElement a, b, c;
    SolutionClass cls = SolutionClass::OtherNontrivialPrimitive;
    Int residual = 0; // re-validated defining relation; always 0
};

/// All elements with integral-basis coordinates in [-H, H], odometer order.
std::vector<FieldElement> enumerate_bounded(const FieldPtr& field, long height);

/// Pairwise ideal coprimality (integer gcd over Q, lattice HNF otherwise).
bool is_primitive(const FieldPtr& field, const FieldElement& a, const FieldElement& b,
                  const FieldElement& c);

/// Exhaustive primitive-solution scan in the coordinate box, classified and
/// canonically sorted; output is independent of the chunk count.
std::vector<SolutionRecord> run_search(const SearchTask& task);

} // namespace frey
