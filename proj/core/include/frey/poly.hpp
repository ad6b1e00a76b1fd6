#pragma once

#include "frey/intutil.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace frey::poly {

// Polynomials are coefficient vectors in ascending degree order with no
// trailing zero; the empty vector is the zero polynomial.
using ZPoly = std::vector<Int>;
using QPoly = std::vector<Rat>;

inline int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }
inline int degree(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

void normalize(ZPoly& f);
void normalize(QPoly& f);

QPoly to_q(const ZPoly& f);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rat& s);
QPoly derivative(const QPoly& f);
Rat eval(const QPoly& f, const Rat& x);

ZPoly mul(const ZPoly& a, const ZPoly& b);
Int eval(const ZPoly& f, const Int& x);

// Euclidean division in Q[x]; returns (quotient, remainder).
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);

// Inverse of g modulo f in Q[x] (f irreducible, g != 0 mod f).
QPoly mod_inverse(const QPoly& g, const QPoly& f);

// Exact division test in Z[x] for monic divisor candidates.
bool divides_exactly(const ZPoly& f, const ZPoly& g);

// Number of distinct real roots (Sturm).
int count_real_roots(const ZPoly& f);

// Number of distinct real roots in (a, b].
int count_real_roots_in(const ZPoly& f, const Rat& a, const Rat& b);

// Resultant of f and g over Q (Sylvester determinant).
Rat resultant(const QPoly& f, const QPoly& g);

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') for monic f.
Int discriminant(const ZPoly& f);

// --- arithmetic mod a word-sized prime -------------------------------------

struct FpPoly {
    long p = 0;
    std::vector<long> c; // ascending, reduced mod p, no trailing zero
};

FpPoly to_fp(const ZPoly& f, long p);
ZPoly lift_fp(const FpPoly& f); // coefficients in [0, p)
bool fp_is_irreducible(const FpPoly& f);

struct FpFactor {
    FpPoly g;
    int multiplicity = 1;
};

// Full factorization into monic irreducibles (squarefree decomposition,
// distinct-degree, Cantor-Zassenhaus with a fixed seed).
std::vector<FpFactor> fp_factor(const FpPoly& f);

// --- number-field helpers ---------------------------------------------------

struct DedekindFactor {
    ZPoly g; // monic lift of an irreducible factor mod q
    int e = 1;
    int f_deg = 1;
};

// Dedekind's criterion at q for a monic f; nullopt means q divides the index
// of Z[theta] and the factorization of f mod q does not describe the primes.
std::optional<std::vector<DedekindFactor>> dedekind_factor(const ZPoly& f, const Int& q);

// Irreducibility over Q for monic integer polynomials (root test, mod-p
// certificates, Zassenhaus recombination as a fallback).
bool is_irreducible_over_q(const ZPoly& f);

// Rational approximations of all real roots, each within 2^-prec_bits, in
// increasing order. Requires squarefree f with all roots real.
std::vector<Rat> real_root_approximations(const ZPoly& f, unsigned prec_bits);

} // namespace frey::poly
