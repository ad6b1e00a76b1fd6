#pragma once

#include "frey/field.hpp"
#include "frey/poly.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace frey {

/// Prime of O_K above the rational prime q, with ramification index e and
/// residue degree f. two_elem holds (q, g(theta) mod q): g is empty when the
/// prime is (q) itself.
struct PrimeIdeal {
    FieldPtr field;
    Int q;
    int e = 1;
    int f = 1;
    poly::ZPoly two_elem_g;
    std::optional<FieldElement> principal_gen;

    /// Root of the minimal polynomial mod q for degree-1 two-element
    /// generators (split/ramified quadratic primes); -1 otherwise.
    Int root() const { return two_elem_g.size() == 2 ? ((-two_elem_g[0]) % q + q) % q : Int(-1); }

    bool same_prime(const PrimeIdeal& other) const
    {
        return q == other.q && e == other.e && f == other.f && two_elem_g == other.two_elem_g;
    }

    /// v_P(q) = e; v_P(2) in particular.
    long v_of_rational_prime(const Int& p) const { return p == q ? e : 0; }

    std::string display() const;
};

enum class SplitPattern { Inert, Split, Ramified, Mixed };

struct SplittingReport {
    Int q;
    std::vector<PrimeIdeal> primes_above;
    SplitPattern pattern = SplitPattern::Inert;
};

SplittingReport factor_rational_prime(const FieldPtr& field, const Int& q);

/// Exact P-adic valuation, extended to K^* by multiplicativity; returns
/// kValuationInfinity for 0. Split quadratic primes use Hensel lifting of the
/// basis root with precision doubling.
long valuation(const PrimeIdeal& P, const FieldElement& x);

/// Does P divide the (integral) element x?
bool prime_divides(const PrimeIdeal& P, const FieldElement& x);

/// S_K(n): all primes dividing 2n.
std::vector<PrimeIdeal> s_set(const FieldPtr& field, const Int& n);

/// U_K: primes above 2 with gcd(3, v_P(2)) = 1.
std::vector<PrimeIdeal> u_set(const FieldPtr& field);

enum class PrincipalStatus { Found, NonPrincipal, SearchExhausted };

struct PrincipalResult {
    PrincipalStatus status = PrincipalStatus::SearchExhausted;
    std::optional<FieldElement> generator;
};

/// Searches a coordinate box for a generator; disproof is by the form-class
/// argument when the field's class data is available.
PrincipalResult principal_generator(const PrimeIdeal& P);

} // namespace frey
