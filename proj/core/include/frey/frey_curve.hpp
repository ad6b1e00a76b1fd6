#pragma once

#include "frey/field.hpp"
#include "frey/primes.hpp"

#include <vector>

namespace frey {

enum class Family { SquareEq, TwistedEq };

/// The even coefficient: an odd integer C or a power of two 2^r.
struct CSpec {
    bool power_of_two = false;
    Int odd_c = 1;
    int r = 0;

    static CSpec odd(const Int& c);
    static CSpec two_power(int r);

    Int value() const { return power_of_two ? pow2(static_cast<unsigned long>(r)) : odd_c; }
    std::string display() const
    {
        return power_of_two ? "2^" + std::to_string(r) : to_string(odd_c);
    }
};

/// Curve attached to a solution of x^2 = B y^p + C z^p (SquareEq, model
/// Y^2 = X(X^2 + 2aX + B b^p)) or 2x^2 = B y^p + C z^p (TwistedEq, model
/// Y^2 = X(X^2 - 4aX + 2B b^p)).
struct FreyCurve {
    Family family = Family::SquareEq;
    FieldElement a, b, c;
    Int B = 1;
    CSpec C;
    int p = 3;
};

struct CurveInvariants {
    FieldElement c4, delta, j;
};

enum class ReductionType { Good, Multiplicative, AdditivePotentiallyMultiplicative, AdditivePotentiallyGood };

struct ReductionReport {
    PrimeIdeal prime;
    long v_c4 = 0;
    long v_delta = 0;
    long v_j = 0;
    ReductionType type = ReductionType::Good;
    long conductor_exponent_upper = 0;
    bool p_divides_v_delta = false;
    bool in_s_prime = false;
};

enum class InertiaBasis { PotMultCriterion, PotGoodCriterion, NotApplicable };

struct InertiaFlags {
    bool p_divides = false;
    bool three_divides = false;
    InertiaBasis basis = InertiaBasis::NotApplicable;
};

FreyCurve build_frey(Family family, const FieldElement& a, const FieldElement& b,
                     const FieldElement& c, const Int& B, const CSpec& C, int p);

/// Closed-form c4, Delta, j, cross-checked against the generic Weierstrass
/// quantities of the model.
CurveInvariants invariants(const FreyCurve& E);

ReductionReport reduction_type(const FreyCurve& E, const PrimeIdeal& P);

/// Divisibility of the inertia image order, by the valuation criteria. The
/// exponent hypothesis of the relevant lemma is enforced (HypothesisUnmet).
InertiaFlags inertia_flags(const FreyCurve& E, const PrimeIdeal& P, int p);

/// v_P(2^8 (mu+1)^3 / mu) = 8 v_P(2) + 3 v_P(mu+1) - v_P(mu).
long jprime_valuation(const FieldElement& mu, const PrimeIdeal& P);

} // namespace frey
