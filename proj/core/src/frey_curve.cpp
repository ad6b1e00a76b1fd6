#include "frey/frey_curve.hpp"

#include "frey/errors.hpp"

#include <cassert>

namespace frey {

CSpec CSpec::odd(const Int& c)
{
    if (c == 0 || c % 2 == 0) throw Error(Errc::EvenB, "C must be odd or a power of two, got " + to_string(c));
    return CSpec{false, c, 0};
}

CSpec CSpec::two_power(int r)
{
    if (r < 1) throw Error(Errc::EvenB, "2^r needs r >= 1");
    return CSpec{true, 1, r};
}

namespace {

bool small_prime(int p)
{
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FieldElement relation_residual(const FreyCurve& E)
{
    FieldElement bp = E.b.pow(E.p);
    FieldElement cp = E.c.pow(E.p);
    FieldElement rhs = bp * Rat(E.B) + cp * Rat(E.C.value());
    FieldElement lhs = E.a * E.a;
    if (E.family == Family::TwistedEq) lhs = lhs * Rat(2);
    return lhs - rhs;
}

// generic Weierstrass quantities for [a1,a2,a3,a4,a6]
struct ModelQuantities {
    FieldElement c4, delta;
};

ModelQuantities model_quantities(const FieldElement& a2, const FieldElement& a4)
{
    const FieldPtr& K = a2.field();
    FieldElement zero = FieldElement::zero(K);
    FieldElement b2 = a2 * Rat(4);
    FieldElement b4 = a4 * Rat(2);
    FieldElement b6 = zero;
    FieldElement b8 = -(a4 * a4);
    FieldElement c4 = b2 * b2 - b4 * Rat(24);
    FieldElement delta = -(b2 * b2 * b8) - (b4 * b4 * b4) * Rat(8);
    return {c4, delta};
}

} // namespace

FreyCurve build_frey(Family family, const FieldElement& a, const FieldElement& b,
                     const FieldElement& c, const Int& B, const CSpec& C, int p)
{
    if (B == 0 || B % 2 == 0) throw Error(Errc::EvenB, "B must be odd, got " + to_string(B));
    if (p < 3 || !small_prime(p)) throw Error(Errc::RelationViolated, "exponent must be a prime >= 3");
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw Error(Errc::TrivialSolution, "abc = 0");
    FreyCurve E{family, a, b, c, B, C, p};
    if (!relation_residual(E).is_zero()) {
        throw Error(Errc::RelationViolated, "a^2 != B b^p + C c^p for the given data");
    }
    return E;
}

CurveInvariants invariants(const FreyCurve& E)
{
    const FieldPtr& K = E.a.field();
    FieldElement bp = E.b.pow(E.p);
    FieldElement cp = E.c.pow(E.p);
    Int Cv = E.C.value();
    FieldElement inner = bp * Rat(E.B) + cp * Rat(4 * Cv);
    FieldElement b2c = E.b * E.b * E.c;
    FieldElement b2cp = b2c.pow(E.p);
    FieldElement c4, delta;
    if (E.family == Family::SquareEq) {
        c4 = inner * Rat(16);
        delta = b2cp * Rat(Int(64) * E.B * E.B * Cv);
    } else {
        c4 = inner * Rat(32);
        delta = b2cp * Rat(Int(512) * E.B * E.B * Cv);
    }
    // cross-check against the generic quantities of the model
    FieldElement a2 = E.family == Family::SquareEq ? E.a * Rat(2) : E.a * Rat(-4);
    FieldElement a4 = E.family == Family::SquareEq ? bp * Rat(E.B) : bp * Rat(2 * E.B);
    ModelQuantities mq = model_quantities(a2, a4);
    if (!(mq.c4 == c4) || !(mq.delta == delta))
        throw std::logic_error("closed-form invariants disagree with the Weierstrass model");
    CurveInvariants inv{c4, delta, (c4 * c4 * c4) / delta};
    assert(inv.j * delta == c4 * c4 * c4);
    return inv;
}

namespace {

bool divides_2bc_data(const FreyCurve& E, const Int& q)
{
    if (q == 2) return true;
    if (E.B % q == 0) return true;
    if (!E.C.power_of_two && E.C.odd_c % q == 0) return true;
    return false;
}

} // namespace

ReductionReport reduction_type(const FreyCurve& E, const PrimeIdeal& P)
{
    CurveInvariants inv = invariants(E);
    ReductionReport rep;
    rep.prime = P;
    rep.v_c4 = valuation(P, inv.c4);
    rep.v_delta = valuation(P, inv.delta);
    rep.v_j = 3 * rep.v_c4 - rep.v_delta;
    rep.p_divides_v_delta = (rep.v_delta % E.p) == 0;
    rep.in_s_prime = divides_2bc_data(E, P.q);
    long e = P.e;
    if (!rep.in_s_prime) {
        if (rep.v_delta == 0) {
            rep.type = ReductionType::Good;
            rep.conductor_exponent_upper = 0;
        } else if (rep.v_c4 == 0) {
            rep.type = ReductionType::Multiplicative;
            rep.conductor_exponent_upper = 1;
        } else {
            // additive; primitive solutions never land here away from 2BC
            rep.type = rep.v_j < 0 ? ReductionType::AdditivePotentiallyMultiplicative
                                   : ReductionType::AdditivePotentiallyGood;
            rep.conductor_exponent_upper = P.q == 3 ? 2 + 3 * e : 2;
        }
    } else {
        rep.type = rep.v_j < 0 ? ReductionType::AdditivePotentiallyMultiplicative
                               : ReductionType::AdditivePotentiallyGood;
        if (P.q == 2)
            rep.conductor_exponent_upper = 2 + 6 * e;
        else if (P.q == 3)
            rep.conductor_exponent_upper = 2 + 3 * e;
        else
            rep.conductor_exponent_upper = 2;
    }
    return rep;
}

InertiaFlags inertia_flags(const FreyCurve& E, const PrimeIdeal& P, int p)
{
    if (p != E.p) throw std::invalid_argument("exponent disagrees with the curve");
    const Int& q = P.q;
    bool away = q != 2 && q != Int(p) && E.B % q != 0 &&
                (E.C.power_of_two || E.C.odd_c % q != 0);
    if (away) {
        if (p <= 5)
            throw Error(Errc::HypothesisUnmet, "the away-prime criterion needs p > 5");
        return {false, false, InertiaBasis::PotMultCriterion};
    }
    if (q == 2) {
        long v2 = P.e;
        long vC = E.C.power_of_two ? static_cast<long>(E.C.r) * v2 : 0;
        long threshold = 6 * v2 + vC;
        bool div_b = prime_divides(P, E.b);
        bool div_c = prime_divides(P, E.c);
        if (E.family == Family::TwistedEq) {
            if (!E.C.power_of_two || !div_b) return {false, false, InertiaBasis::NotApplicable};
            long deg = E.a.field()->degree();
            if (p <= std::max(threshold, deg))
                throw Error(Errc::HypothesisUnmet,
                            "need p > max(" + std::to_string(threshold) + ", [K:Q]) here");
            return {true, false, InertiaBasis::PotMultCriterion};
        }
        if (div_b || div_c) {
            if (p <= threshold)
                throw Error(Errc::HypothesisUnmet, "need p > " + std::to_string(threshold) + " here");
            return {true, false, InertiaBasis::PotMultCriterion};
        }
        // P does not divide bc
        if (E.C.power_of_two && (E.C.r == 1 || E.C.r == 2 || E.C.r == 4 || E.C.r == 5) &&
            gcd(Int(3), Int(v2)) == 1) {
            if (p <= threshold)
                throw Error(Errc::HypothesisUnmet, "need p > " + std::to_string(threshold) + " here");
            // v_P(Delta) = (6+r) v_P(2), not divisible by 3
            return {false, true, InertiaBasis::PotGoodCriterion};
        }
        return {false, false, InertiaBasis::NotApplicable};
    }
    return {false, false, InertiaBasis::NotApplicable};
}

long jprime_valuation(const FieldElement& mu, const PrimeIdeal& P)
{
    const FieldPtr& K = mu.field();
    FieldElement one = FieldElement::one(K);
    if (mu.is_zero() || (mu + one).is_zero())
        throw Error(Errc::DegenerateMu, "mu in {0,-1} is degenerate");
    long v2 = P.v_of_rational_prime(2);
    return 8 * v2 + 3 * valuation(P, mu + one) - valuation(P, mu);
}

} // namespace frey
