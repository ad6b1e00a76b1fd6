#pragma once

// Test-side oracles, kept independent of the implementation paths they check.

#include "frey/field.hpp"
#include "frey/frey_curve.hpp"

#include <optional>
#include <random>
#include <vector>

namespace oracles {

using frey::FieldElement;
using frey::FieldPtr;
using frey::Int;
using frey::Rat;

// Exact sign of u + v*sqrt(d) computed from scratch.
inline int sign_uv(const Rat& u, const Rat& v, const Int& d)
{
    if (v == 0) return sgn(u);
    if (u == 0) return sgn(v);
    if (sgn(u) == sgn(v)) return sgn(u);
    Rat uu = u * u, vv = v * v * Rat(d);
    return cmp(uu, vv) > 0 ? sgn(u) : sgn(v);
}

// Smallest unit > 1 of Z[basis] with coordinates in [-box, box], by brute
// force over the integral basis.
inline std::optional<std::pair<Rat, Rat>> brute_force_unit(long d, long box)
{
    // returns (x, y) with the unit x + y*sqrt(d), half-coordinates allowed
    bool one_mod_4 = (d % 4) == 1;
    std::optional<std::pair<Rat, Rat>> best;
    for (long a = -box; a <= box; ++a) {
        for (long b = -box; b <= box; ++b) {
            // element a + b*w; as x + y*sqrt(d):
            Rat x = one_mod_4 ? Rat(a) + Rat(b) / 2 : Rat(a);
            Rat y = one_mod_4 ? Rat(b) / 2 : Rat(b);
            Rat norm = x * x - y * y * Rat(d);
            if (norm != 1 && norm != -1) continue;
            if (sign_uv(x - 1, y, d) <= 0) continue; // need > 1
            if (!best) {
                best = {x, y};
                continue;
            }
            if (sign_uv(x - best->first, y - best->second, d) < 0) best = {x, y};
        }
    }
    return best;
}

// Full Weierstrass quantities from [a1, a2, a3, a4, a6].
struct WeierstrassData {
    FieldElement c4, c6, delta;
};

inline WeierstrassData weierstrass(const FieldElement& a1, const FieldElement& a2,
                                   const FieldElement& a3, const FieldElement& a4,
                                   const FieldElement& a6)
{
    FieldElement b2 = a1 * a1 + a2 * Rat(4);
    FieldElement b4 = a4 * Rat(2) + a1 * a3;
    FieldElement b6 = a3 * a3 + a6 * Rat(4);
    FieldElement b8 = a1 * a1 * a6 + a2 * a6 * Rat(4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    FieldElement c4 = b2 * b2 - b4 * Rat(24);
    FieldElement c6 = -(b2 * b2 * b2) + b2 * b4 * Rat(36) - b6 * Rat(216);
    FieldElement delta =
        -(b2 * b2 * b8) - (b4 * b4 * b4) * Rat(8) - (b6 * b6) * Rat(27) + b2 * b4 * b6 * Rat(9);
    return {c4, c6, delta};
}

// Exhaustive solution scan over Q by direct triple classification.
struct Triple {
    Int a, b, c;
    bool operator==(const Triple& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const Triple& o) const
    {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

inline std::vector<Triple> exhaustive_search_q(bool twisted, const Int& B, const Int& C, int p, long H)
{
    std::vector<Triple> out;
    for (long a = -H; a <= H; ++a) {
        if (a == 0) continue;
        for (long b = -H; b <= H; ++b) {
            if (b == 0) continue;
            for (long c = -H; c <= H; ++c) {
                if (c == 0) continue;
                Int lhs = Int(a) * a * (twisted ? 2 : 1);
                Int bp = 1, cp = 1;
                for (int i = 0; i < p; ++i) {
                    bp *= b;
                    cp *= c;
                }
                if (lhs != B * bp + C * cp) continue;
                if (gcd(gcd(Int(a), Int(b)), Int(c)) != 1) continue;
                if (gcd(Int(a), Int(b)) != 1 || gcd(Int(a), Int(c)) != 1 || gcd(Int(b), Int(c)) != 1)
                    continue;
                out.push_back({Int(a), Int(b), Int(c)});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// lambda + mu = 1 over Q with S = {2}: lambda = +-2^k, mu must be +-2^m.
inline std::vector<std::pair<Rat, Rat>> lambda_mu_oracle_q(long H)
{
    std::vector<std::pair<Rat, Rat>> out;
    auto pow2_signed = [](long k, int sign) {
        Rat r = 1;
        for (long i = 0; i < (k >= 0 ? k : -k); ++i) r *= 2;
        if (k < 0) r = 1 / r;
        return sign * r;
    };
    for (long k = -H; k <= H; ++k) {
        for (int sign : {1, -1}) {
            Rat lam = pow2_signed(k, sign);
            Rat mu = 1 - lam;
            if (mu == 0) continue;
            Int num = abs(Int(mu.get_num())), den = Int(mu.get_den());
            while (num % 2 == 0) num /= 2;
            while (den % 2 == 0) den /= 2;
            if (num == 1 && den == 1) out.emplace_back(lam, mu);
        }
    }
    return out;
}

inline std::mt19937_64 test_rng(unsigned long long seed = 0xfe1d5eedULL) { return std::mt19937_64(seed); }

} // namespace oracles
