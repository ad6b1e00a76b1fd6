#pragma once

#include "frey/field.hpp"
#include "frey/primes.hpp"

#include <optional>
#include <vector>

namespace frey {

enum class Completeness { CompleteKnown, BoundedSearchOnly };

/// Generators of the S-unit group modulo torsion plus -1: the fundamental
/// unit (quadratic case) and a principal generator for every prime of S.
struct SUnitBasis {
    FieldPtr field;
    std::vector<PrimeIdeal> s;
    std::vector<FieldElement> prime_generators;
    std::optional<FieldElement> eps;
    long height = 10;
};

struct LambdaMuSolution {
    FieldElement lambda, mu;
};

struct LambdaMuSolutions {
    std::vector<LambdaMuSolution> items;
    Completeness completeness = Completeness::BoundedSearchOnly;
};

struct AlphaGammaSolution {
    FieldElement alpha, beta, gamma;
};

struct AlphaGammaSolutions {
    std::vector<AlphaGammaSolution> items;
    Completeness completeness = Completeness::BoundedSearchOnly;
};

struct WitnessRecord {
    AlphaGammaSolution solution;
    std::optional<PrimeIdeal> witness;
    long valuation = 0; // v_P(alpha/beta) at the recorded prime
    bool bound_ok = false;
    bool mod3_ok = false;
};

struct HypothesisCertificate {
    std::vector<WitnessRecord> records;
    bool verdict = false;
    Completeness caveat = Completeness::BoundedSearchOnly;
};

SUnitBasis sunit_basis(const FieldPtr& field, const std::vector<PrimeIdeal>& S, long height);

/// Is x an S-unit? Exact: the norm must be supported under S and every prime
/// above those rational primes outside S must have valuation 0.
bool is_s_unit(const FieldElement& x, const std::vector<PrimeIdeal>& S);

/// All lambda = +-eps^a * prod pi^b with exponents bounded by the basis
/// height such that mu = 1 - lambda is an S-unit. Deduplicated, canonically
/// ordered (valuation vector, then coordinates).
LambdaMuSolutions solve_lambda_mu(const SUnitBasis& basis);

/// Orbit of (lambda, mu) under the six fractional-linear symmetries.
std::vector<LambdaMuSolution> s3_orbit(const LambdaMuSolution& sol);

/// max(|v_P(lambda)|, |v_P(mu)|), the orbit invariant.
long orbit_max_valuation(const LambdaMuSolution& sol, const PrimeIdeal& P);

/// Normalized solutions of alpha + 1 = gamma^2: alpha = -4*lambda*mu,
/// gamma = lambda - mu. scale_height > 0 additionally emits the families
/// (alpha s^2, s^2, gamma s) for S-unit scalings s within that exponent
/// bound.
AlphaGammaSolutions solve_alpha_gamma(const SUnitBasis& basis, long scale_height = 0);

HypothesisCertificate certify_hypothesis(const AlphaGammaSolutions& solutions,
                                         const std::vector<PrimeIdeal>& primes,
                                         long bound_multiplier, bool require_mod3);

} // namespace frey
