#pragma once

#include <gmpxx.h>

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace frey {

using Int = mpz_class;
using Rat = mpq_class;

// Sentinel for v(0); valuations of nonzero elements are tiny by comparison.
inline constexpr long kValuationInfinity = std::numeric_limits<long>::max();

inline Rat make_rat(const Int& num, const Int& den)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int isqrt(const Int& n)
{
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline std::optional<Int> sqrt_exact(const Int& n)
{
    if (!is_perfect_square(n)) return std::nullopt;
    return isqrt(n);
}

inline std::optional<Rat> sqrt_exact(const Rat& r)
{
    if (r < 0) return std::nullopt;
    auto sn = sqrt_exact(Int(r.get_num()));
    auto sd = sqrt_exact(Int(r.get_den()));
    if (!sn || !sd) return std::nullopt;
    return make_rat(*sn, *sd);
}

inline Int pow_int(const Int& base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow2(unsigned long e) { return pow_int(2, e); }

inline bool is_probable_prime(const Int& n)
{
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// q-adic valuation of a nonzero integer.
inline long val_int(const Int& n, const Int& q)
{
    if (n == 0) return kValuationInfinity;
    Int m = abs(n);
    long v = 0;
    Int r;
    while (true) {
        Int quo;
        mpz_fdiv_qr(quo.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t());
        if (r != 0) break;
        m = quo;
        ++v;
    }
    return v;
}

inline long val_rat(const Rat& x, const Int& q)
{
    if (x == 0) return kValuationInfinity;
    return val_int(Int(x.get_num()), q) - val_int(Int(x.get_den()), q);
}

// Distinct prime divisors by trial division; fine at desk scale (|n| < ~10^14).
inline std::vector<Int> prime_divisors(Int n)
{
    std::vector<Int> out;
    n = abs(n);
    if (n <= 1) return out;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline bool is_squarefree(const Int& n)
{
    Int m = abs(n);
    if (m == 0) return false;
    for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    return true;
}

// Nearest integer (ties toward +infinity; exact inputs never tie in our uses).
inline Int round_to_int(const Rat& r)
{
    Rat shifted = r + make_rat(1, 2);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return q;
}

inline std::string to_string(const Int& n) { return n.get_str(); }

inline std::string to_string(const Rat& r) { return r.get_str(); }

} // namespace frey
