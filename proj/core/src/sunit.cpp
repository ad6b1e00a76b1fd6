#include "frey/sunit.hpp"

#include "frey/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace frey {

namespace {

bool on_complete_list(const FieldPtr& field, const std::vector<PrimeIdeal>& S)
{
    // Verified solution lists exist for Q and for real quadratic prime
    // d = 5 mod 8, in both cases with S exactly the primes above 2.
    for (const auto& P : S)
        if (P.q != 2) return false;
    if (field->kind() == Field::Kind::Rational) return true;
    if (field->kind() != Field::Kind::RealQuadratic) return false;
    const Int& d = field->d();
    return d % 8 == 5 && is_probable_prime(d);
}

std::vector<Int> rational_primes_of(const std::vector<PrimeIdeal>& S)
{
    std::vector<Int> qs;
    for (const auto& P : S) qs.push_back(P.q);
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    return qs;
}

bool in_S(const PrimeIdeal& P, const std::vector<PrimeIdeal>& S)
{
    return std::any_of(S.begin(), S.end(), [&](const PrimeIdeal& Q) { return P.same_prime(Q); });
}

std::vector<long> valuation_vector(const FieldElement& x, const std::vector<PrimeIdeal>& S)
{
    std::vector<long> v;
    v.reserve(S.size());
    for (const auto& P : S) v.push_back(valuation(P, x));
    return v;
}

bool lambda_less(const LambdaMuSolution& a, const LambdaMuSolution& b,
                 const std::vector<PrimeIdeal>& S)
{
    auto va = valuation_vector(a.lambda, S);
    auto vb = valuation_vector(b.lambda, S);
    if (va != vb) return va < vb;
    return a.lambda.compare(b.lambda) < 0;
}

} // namespace

bool is_s_unit(const FieldElement& x, const std::vector<PrimeIdeal>& S)
{
    if (x.is_zero()) return false;
    Rat n = x.norm();
    Int num = abs(Int(n.get_num()));
    Int den = Int(n.get_den());
    auto qs = rational_primes_of(S);
    for (const Int& q : qs) {
        while (num % q == 0) num /= q;
        while (den % q == 0) den /= q;
    }
    if (num != 1 || den != 1) return false;
    // exact check for non-saturated S: primes above the S-rationals that are
    // not themselves in S must not divide x
    for (const Int& q : qs) {
        auto rep = factor_rational_prime(x.field(), q);
        if (rep.primes_above.size() == 1) continue; // saturated at q automatically
        for (const auto& P : rep.primes_above) {
            if (in_S(P, S)) continue;
            if (valuation(P, x) != 0) return false;
        }
    }
    return true;
}

SUnitBasis sunit_basis(const FieldPtr& field, const std::vector<PrimeIdeal>& S, long height)
{
    if (field->kind() == Field::Kind::MonogenicOdd)
        throw Error(Errc::UnsupportedField, "S-unit bases cover rational and quadratic fields");
    SUnitBasis basis;
    basis.field = field;
    basis.s = S;
    basis.height = height;
    if (field->kind() == Field::Kind::RealQuadratic) basis.eps = fundamental_unit(field).first;
    for (const auto& P : S) {
        auto res = principal_generator(P);
        if (res.status != PrincipalStatus::Found)
            throw Error(Errc::NonPrincipalPrime,
                        "prime " + P.display() +
                            (res.status == PrincipalStatus::NonPrincipal ? " is not principal"
                                                                         : ": no generator found in the search box"));
        basis.prime_generators.push_back(*res.generator);
    }
    return basis;
}

LambdaMuSolutions solve_lambda_mu(const SUnitBasis& basis)
{
    const FieldPtr& K = basis.field;
    const long H = basis.height;
    LambdaMuSolutions out;
    out.completeness = on_complete_list(K, basis.s) ? Completeness::CompleteKnown
                                                    : Completeness::BoundedSearchOnly;
    // cache generator powers
    std::vector<std::vector<FieldElement>> powers; // powers[g][i] = g^(i-H)
    std::vector<FieldElement> gens;
    if (basis.eps) gens.push_back(*basis.eps);
    for (const auto& g : basis.prime_generators) gens.push_back(g);
    for (const auto& g : gens) {
        std::vector<FieldElement> row;
        row.reserve(static_cast<size_t>(2 * H + 1));
        for (long e = -H; e <= H; ++e) row.push_back(g.pow(e));
        powers.push_back(std::move(row));
    }
    const FieldElement one = FieldElement::one(K);
    std::vector<LambdaMuSolution> found;
    std::vector<size_t> idx(gens.size(), 0);
    // odometer over exponent vectors and both signs
    while (true) {
        FieldElement lam = one;
        for (size_t g = 0; g < gens.size(); ++g) lam = lam * powers[g][idx[g]];
        for (int sign = 0; sign < 2; ++sign) {
            FieldElement l = sign == 0 ? lam : -lam;
            if (l.is_one()) continue;
            FieldElement mu = one - l;
            if (is_s_unit(mu, basis.s)) found.push_back({l, mu});
        }
        size_t g = 0;
        for (; g < gens.size(); ++g) {
            if (++idx[g] <= static_cast<size_t>(2 * H)) break;
            idx[g] = 0;
        }
        if (g == gens.size()) break;
    }
    // dedup on lambda and canonical sort
    std::sort(found.begin(), found.end(),
              [&](const LambdaMuSolution& a, const LambdaMuSolution& b) { return lambda_less(a, b, basis.s); });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const LambdaMuSolution& a, const LambdaMuSolution& b) {
                                return a.lambda == b.lambda;
                            }),
                found.end());
    out.items = std::move(found);
    return out;
}

std::vector<LambdaMuSolution> s3_orbit(const LambdaMuSolution& sol)
{
    const FieldElement& l = sol.lambda;
    const FieldPtr& K = l.field();
    FieldElement one = FieldElement::one(K);
    if (l.is_zero() || l.is_one())
        throw Error(Errc::DegenerateLambda, "lambda in {0,1} has no S3 orbit");
    std::vector<FieldElement> images = {
        l,
        one - l,
        l.inverse(),
        one - l.inverse(),
        (one - l).inverse(),
        l * (l - one).inverse(),
    };
    std::vector<LambdaMuSolution> orbit;
    for (auto& im : images) orbit.push_back({im, one - im});
    std::sort(orbit.begin(), orbit.end(), [](const LambdaMuSolution& a, const LambdaMuSolution& b) {
        return a.lambda.compare(b.lambda) < 0;
    });
    orbit.erase(std::unique(orbit.begin(), orbit.end(),
                            [](const LambdaMuSolution& a, const LambdaMuSolution& b) {
                                return a.lambda == b.lambda;
                            }),
                orbit.end());
    return orbit;
}

long orbit_max_valuation(const LambdaMuSolution& sol, const PrimeIdeal& P)
{
    long vl = valuation(P, sol.lambda);
    long vm = valuation(P, sol.mu);
    return std::max(std::abs(vl), std::abs(vm));
}

AlphaGammaSolutions solve_alpha_gamma(const SUnitBasis& basis, long scale_height)
{
    auto lm = solve_lambda_mu(basis);
    AlphaGammaSolutions out;
    out.completeness = lm.completeness;
    const FieldPtr& K = basis.field;
    const FieldElement one = FieldElement::one(K);
    std::vector<AlphaGammaSolution> items;
    for (const auto& sol : lm.items) {
        FieldElement alpha = -(sol.lambda * sol.mu * Rat(4));
        FieldElement gamma = sol.lambda - sol.mu;
        // canonical gamma sign: first nonzero coordinate positive
        if (!gamma.is_zero() && gamma.compare(-gamma) < 0) gamma = -gamma;
        items.push_back({alpha, one, gamma});
    }
    std::sort(items.begin(), items.end(), [](const AlphaGammaSolution& a, const AlphaGammaSolution& b) {
        int c = a.alpha.compare(b.alpha);
        if (c != 0) return c < 0;
        return a.gamma.compare(b.gamma) < 0;
    });
    items.erase(std::unique(items.begin(), items.end(),
                            [](const AlphaGammaSolution& a, const AlphaGammaSolution& b) {
                                return a.alpha == b.alpha && a.gamma == b.gamma;
                            }),
                items.end());
    if (scale_height > 0) {
        // unit-square scalings: (alpha s^2, s^2, gamma s)
        std::vector<FieldElement> gens;
        if (basis.eps) gens.push_back(*basis.eps);
        for (const auto& g : basis.prime_generators) gens.push_back(g);
        std::vector<AlphaGammaSolution> scaled;
        for (const auto& base : items) {
            std::vector<size_t> idx(gens.size(), 0);
            while (true) {
                FieldElement s = FieldElement::one(K);
                bool trivial = true;
                for (size_t g = 0; g < gens.size(); ++g) {
                    long e = static_cast<long>(idx[g]) - scale_height;
                    if (e != 0) trivial = false;
                    s = s * gens[g].pow(e);
                }
                if (!trivial) {
                    FieldElement s2 = s * s;
                    scaled.push_back({base.alpha * s2, s2, base.gamma * s});
                }
                size_t g = 0;
                for (; g < gens.size(); ++g) {
                    if (++idx[g] <= static_cast<size_t>(2 * scale_height)) break;
                    idx[g] = 0;
                }
                if (g == gens.size()) break;
            }
        }
        for (auto& sc : scaled) items.push_back(std::move(sc));
    }
    out.items = std::move(items);
    return out;
}

HypothesisCertificate certify_hypothesis(const AlphaGammaSolutions& solutions,
                                         const std::vector<PrimeIdeal>& primes,
                                         long bound_multiplier, bool require_mod3)
{
    if (primes.empty()) throw Error(Errc::EmptyPrimeList, "no witness primes supplied");
    HypothesisCertificate cert;
    cert.caveat = solutions.completeness;
    cert.verdict = true;
    for (const auto& sol : solutions.items) {
        FieldElement ratio = sol.alpha / sol.beta;
        WitnessRecord rec;
        rec.solution = sol;
        for (const auto& P : primes) {
            long v = valuation(P, ratio);
            long bound = bound_multiplier * P.e * (P.q == 2 ? 1 : 0);
            bool bound_ok = std::abs(v) <= bound;
            bool mod3_ok = !require_mod3 || ((v % 3) + 3) % 3 == 0;
            if (!rec.witness || (bound_ok && mod3_ok)) {
                rec.witness = P;
                rec.valuation = v;
                rec.bound_ok = bound_ok;
                rec.mod3_ok = mod3_ok;
            }
            if (bound_ok && mod3_ok) break;
        }
        if (!(rec.bound_ok && rec.mod3_ok)) cert.verdict = false;
        cert.records.push_back(std::move(rec));
    }
    return cert;
}

} // namespace frey
