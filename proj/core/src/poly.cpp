#include "frey/poly.hpp"

#include "frey/errors.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace frey::poly {

namespace {

long mulmod(long a, long b, long p)
{
    return static_cast<long>(static_cast<__int128>(a) * b % p);
}

long powmod(long a, Int e, long p)
{
    long r = 1 % p;
    a %= p;
    if (a < 0) a += p;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

long invmod(long a, long p) { return powmod(a, Int(p) - 2, p); }

} // namespace

void normalize(ZPoly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

void normalize(QPoly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly to_q(const ZPoly& f)
{
    QPoly g(f.size());
    for (size_t i = 0; i < f.size(); ++i) g[i] = Rat(f[i]);
    return g;
}

QPoly add(const QPoly& a, const QPoly& b)
{
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    normalize(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b)
{
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    normalize(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    normalize(r);
    return r;
}

QPoly scale(const QPoly& a, const Rat& s)
{
    if (s == 0) return {};
    QPoly r = a;
    for (auto& c : r) c *= s;
    return r;
}

QPoly derivative(const QPoly& f)
{
    if (f.size() <= 1) return {};
    QPoly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * Rat(static_cast<long>(i));
    return r;
}

Rat eval(const QPoly& f, const Rat& x)
{
    Rat r(0);
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    normalize(r);
    return r;
}

Int eval(const ZPoly& f, const Int& x)
{
    Int r(0);
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b)
{
    if (b.empty()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    QPoly rem = a;
    QPoly quo;
    if (a.size() >= b.size()) quo.assign(a.size() - b.size() + 1, Rat(0));
    const Rat lead = b.back();
    while (rem.size() >= b.size() && !rem.empty()) {
        Rat coef = rem.back() / lead;
        size_t shift = rem.size() - b.size();
        quo[shift] = coef;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= coef * b[i];
        normalize(rem);
        if (rem.size() < b.size()) break;
    }
    normalize(quo);
    return {quo, rem};
}

QPoly mod_inverse(const QPoly& g, const QPoly& f)
{
    // extended Euclid: s*g + t*f = r with r the gcd
    QPoly r0 = f, r1 = divrem(g, f).second;
    if (r1.empty()) throw Error(Errc::DivisionByZero, "element is zero mod f");
    QPoly s0, s1 = {Rat(1)};
    while (true) {
        auto [q, r] = divrem(r0, r1);
        if (r.empty()) break;
        QPoly s2 = sub(s0, mul(q, s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    if (degree(r1) != 0)
        throw Error(Errc::DivisionByZero, "modulus not coprime to element");
    return divrem(scale(s1, 1 / r1[0]), f).second;
}

bool divides_exactly(const ZPoly& f, const ZPoly& g)
{
    if (g.empty()) return false;
    auto [q, r] = divrem(to_q(f), to_q(g));
    if (!r.empty()) return false;
    for (const auto& c : q)
        if (!is_integer(c)) return false;
    return true;
}

namespace {

QPoly q_gcd_monic(QPoly a, QPoly b)
{
    while (!b.empty()) {
        auto [q, r] = divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

int sign_at_neg_infinity(const QPoly& f)
{
    if (f.empty()) return 0;
    int s = sgn(f.back());
    return (degree(f) % 2 == 0) ? s : -s;
}

int sign_at_pos_infinity(const QPoly& f)
{
    if (f.empty()) return 0;
    return sgn(f.back());
}

std::vector<QPoly> sturm_chain(const QPoly& f)
{
    std::vector<QPoly> chain;
    chain.push_back(f);
    QPoly d = derivative(f);
    if (!d.empty()) chain.push_back(d);
    while (chain.back().size() > 1) {
        auto [q, r] = divrem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        chain.push_back(scale(r, Rat(-1)));
    }
    return chain;
}

int sign_variations(const std::vector<int>& signs)
{
    int v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int variations_at(const std::vector<QPoly>& chain, const Rat& x)
{
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& g : chain) signs.push_back(sgn(eval(g, x)));
    return sign_variations(signs);
}

} // namespace

int count_real_roots(const ZPoly& f)
{
    QPoly g = to_q(f);
    // Sturm needs a squarefree polynomial.
    QPoly sq = q_gcd_monic(g, derivative(g));
    if (degree(sq) > 0) {
        auto [q, r] = divrem(g, sq);
        assert(r.empty());
        g = q;
    }
    auto chain = sturm_chain(g);
    std::vector<int> at_minus, at_plus;
    for (const auto& h : chain) {
        at_minus.push_back(sign_at_neg_infinity(h));
        at_plus.push_back(sign_at_pos_infinity(h));
    }
    return sign_variations(at_minus) - sign_variations(at_plus);
}

int count_real_roots_in(const ZPoly& f, const Rat& a, const Rat& b)
{
    QPoly g = to_q(f);
    QPoly sq = q_gcd_monic(g, derivative(g));
    if (degree(sq) > 0) {
        auto [q, r] = divrem(g, sq);
        g = q;
    }
    auto chain = sturm_chain(g);
    return variations_at(chain, a) - variations_at(chain, b);
}

Rat resultant(const QPoly& f, const QPoly& g)
{
    int n = degree(f), m = degree(g);
    if (n < 0 || m < 0) return Rat(0);
    if (n == 0) {
        Rat r;
        mpq_class base = f[0];
        r = 1;
        for (int i = 0; i < m; ++i) r *= base;
        return r;
    }
    if (m == 0) {
        Rat r = 1;
        for (int i = 0; i < n; ++i) r *= g[0];
        return r;
    }
    // Sylvester matrix, straightforward fraction Gaussian elimination.
    int size = n + m;
    std::vector<std::vector<Rat>> a(size, std::vector<Rat>(size, Rat(0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) a[i][i + j] = f[n - j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) a[m + i][i + j] = g[m - j];
    Rat det = 1;
    for (int col = 0; col < size; ++col) {
        int pivot = -1;
        for (int row = col; row < size; ++row)
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rat inv = 1 / a[col][col];
        for (int row = col + 1; row < size; ++row) {
            if (a[row][col] == 0) continue;
            Rat factor = a[row][col] * inv;
            for (int j = col; j < size; ++j) a[row][j] -= factor * a[col][j];
        }
    }
    return det;
}

Int discriminant(const ZPoly& f)
{
    int n = degree(f);
    if (n < 1) return 0;
    QPoly fq = to_q(f);
    Rat res = resultant(fq, derivative(fq));
    // monic f: disc = (-1)^{n(n-1)/2} * Res(f, f')
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) res = -res;
    assert(is_integer(res));
    return Int(res.get_num());
}

// --- F_p arithmetic ----------------------------------------------------------

namespace {

void fp_normalize(FpPoly& f)
{
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

FpPoly fp_make(long p, std::vector<long> c)
{
    FpPoly f{p, std::move(c)};
    for (auto& x : f.c) {
        x %= p;
        if (x < 0) x += p;
    }
    fp_normalize(f);
    return f;
}

int fp_deg(const FpPoly& f) { return static_cast<int>(f.c.size()) - 1; }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b)
{
    if (a.c.empty() || b.c.empty()) return {a.p, {}};
    std::vector<long> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(a.c[i], b.c[j], a.p)) % a.p;
    return fp_make(a.p, std::move(r));
}

// remainder of a by monic-ized b
FpPoly fp_rem(FpPoly a, const FpPoly& b)
{
    long p = b.p;
    long lead_inv = invmod(b.c.back(), p);
    while (static_cast<int>(a.c.size()) >= static_cast<int>(b.c.size()) && !a.c.empty()) {
        long coef = mulmod(a.c.back(), lead_inv, p);
        size_t shift = a.c.size() - b.c.size();
        for (size_t i = 0; i < b.c.size(); ++i) {
            long t = a.c[shift + i] - mulmod(coef, b.c[i], p);
            t %= p;
            if (t < 0) t += p;
            a.c[shift + i] = t;
        }
        fp_normalize(a);
    }
    return a;
}

std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b)
{
    long p = b.p;
    FpPoly rem = a;
    std::vector<long> quo(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0, 0);
    long lead_inv = invmod(b.c.back(), p);
    while (static_cast<int>(rem.c.size()) >= static_cast<int>(b.c.size()) && !rem.c.empty()) {
        long coef = mulmod(rem.c.back(), lead_inv, p);
        size_t shift = rem.c.size() - b.c.size();
        quo[shift] = coef;
        for (size_t i = 0; i < b.c.size(); ++i) {
            long t = rem.c[shift + i] - mulmod(coef, b.c[i], p);
            t %= p;
            if (t < 0) t += p;
            rem.c[shift + i] = t;
        }
        fp_normalize(rem);
    }
    return {fp_make(p, std::move(quo)), rem};
}

FpPoly fp_divexact(const FpPoly& a, const FpPoly& b)
{
    auto [q, r] = fp_divrem(a, b);
    assert(r.c.empty());
    return q;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b)
{
    long p = a.p != 0 ? a.p : b.p;
    std::vector<long> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] = (c[i] + b.c[i]) % p;
    return fp_make(p, std::move(c));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b)
{
    long p = a.p != 0 ? a.p : b.p;
    std::vector<long> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) {
        c[i] = (c[i] - b.c[i]) % p;
        if (c[i] < 0) c[i] += p;
    }
    return fp_make(p, std::move(c));
}

FpPoly fp_gcd(FpPoly a, FpPoly b)
{
    while (!b.c.empty()) {
        FpPoly r = fp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.c.empty()) {
        long inv = invmod(a.c.back(), a.p);
        for (auto& x : a.c) x = mulmod(x, inv, a.p);
    }
    return a;
}

FpPoly fp_monic(FpPoly a)
{
    if (a.c.empty()) return a;
    long inv = invmod(a.c.back(), a.p);
    for (auto& x : a.c) x = mulmod(x, inv, a.p);
    return a;
}

FpPoly fp_powmod(const FpPoly& base, Int e, const FpPoly& mod)
{
    FpPoly r = fp_make(mod.p, {1});
    FpPoly b = fp_rem(base, mod);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fp_rem(fp_mul(r, b), mod);
        b = fp_rem(fp_mul(b, b), mod);
        e >>= 1;
    }
    return r;
}

FpPoly fp_derivative(const FpPoly& f)
{
    if (f.c.size() <= 1) return {f.p, {}};
    std::vector<long> r(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) r[i - 1] = mulmod(f.c[i], static_cast<long>(i % f.p), f.p);
    return fp_make(f.p, std::move(r));
}

// f = g(x^p) -> g, valid because coefficients are in F_p (Frobenius fixes them).
FpPoly fp_pth_root(const FpPoly& f)
{
    std::vector<long> c;
    for (size_t i = 0; i < f.c.size(); i += static_cast<size_t>(f.p)) c.push_back(f.c[i]);
    return fp_make(f.p, std::move(c));
}

// squarefree decomposition, characteristic p
void fp_squarefree(const FpPoly& f, int mult, std::vector<std::pair<FpPoly, int>>& out)
{
    FpPoly fp = fp_derivative(f);
    if (fp.c.empty()) {
        if (fp_deg(f) == 0) return;
        fp_squarefree(fp_pth_root(f), mult * static_cast<int>(f.p), out);
        return;
    }
    FpPoly c = fp_gcd(f, fp);
    FpPoly w = fp_divexact(f, c);
    int i = 1;
    while (fp_deg(w) > 0) {
        FpPoly y = fp_gcd(w, c);
        FpPoly z = fp_divexact(w, y);
        if (fp_deg(z) > 0) out.emplace_back(fp_monic(z), mult * i);
        w = std::move(y);
        c = fp_divexact(c, w);
        ++i;
    }
    if (fp_deg(c) > 0) fp_squarefree(fp_pth_root(c), mult * static_cast<int>(f.p), out);
}

// equal-degree splitting (Cantor-Zassenhaus), f squarefree product of
// irreducibles of degree d
void fp_equal_degree(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out)
{
    if (fp_deg(f) == d) {
        out.push_back(fp_monic(f));
        return;
    }
    long p = f.p;
    while (true) {
        std::vector<long> rc(static_cast<size_t>(fp_deg(f)), 0);
        for (auto& x : rc) x = static_cast<long>(rng() % static_cast<unsigned long>(p));
        FpPoly r = fp_make(p, std::move(rc));
        if (fp_deg(r) < 1) continue;
        FpPoly g = fp_gcd(r, f);
        if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(f)) {
            fp_equal_degree(g, d, rng, out);
            fp_equal_degree(fp_divexact(f, g), d, rng, out);
            return;
        }
        FpPoly s;
        if (p == 2) {
            // trace map over F_{2^d}
            FpPoly t = fp_rem(r, f);
            FpPoly acc = t;
            for (int i = 1; i < d; ++i) {
                t = fp_rem(fp_mul(t, t), f);
                std::vector<long> sum(std::max(acc.c.size(), t.c.size()), 0);
                for (size_t j = 0; j < acc.c.size(); ++j) sum[j] ^= acc.c[j];
                for (size_t j = 0; j < t.c.size(); ++j) sum[j] ^= t.c[j];
                acc = fp_make(2, std::move(sum));
            }
            s = acc;
        } else {
            Int e = (pow_int(Int(p), static_cast<unsigned long>(d)) - 1) / 2;
            s = fp_powmod(r, e, f);
            if (s.c.empty())
                continue;
            s.c[0] = (s.c[0] - 1 + p) % p;
            fp_normalize(s);
        }
        FpPoly h = fp_gcd(s, f);
        if (fp_deg(h) > 0 && fp_deg(h) < fp_deg(f)) {
            fp_equal_degree(h, d, rng, out);
            fp_equal_degree(fp_divexact(f, h), d, rng, out);
            return;
        }
    }
}

std::vector<FpPoly> fp_factor_squarefree(const FpPoly& f)
{
    std::vector<FpPoly> out;
    std::mt19937_64 rng(0x5eed1234abcdefULL);
    FpPoly rest = fp_monic(f);
    FpPoly h = fp_make(f.p, {0, 1}); // x
    FpPoly xpoly = h;
    int d = 0;
    while (fp_deg(rest) > 0) {
        ++d;
        if (2 * d > fp_deg(rest)) {
            out.push_back(fp_monic(rest));
            break;
        }
        h = fp_powmod(h, Int(f.p), rest);
        FpPoly diff = h;
        // h - x
        std::vector<long> dc = diff.c;
        if (dc.size() < 2) dc.resize(2, 0);
        dc[1] = (dc[1] - 1 + f.p) % f.p;
        diff = fp_make(f.p, std::move(dc));
        FpPoly g = fp_gcd(diff, rest);
        if (fp_deg(g) > 0) {
            fp_equal_degree(g, d, rng, out);
            rest = fp_divexact(rest, g);
            h = fp_rem(h, rest);
        }
    }
    return out;
}

} // namespace

FpPoly to_fp(const ZPoly& f, long p)
{
    std::vector<long> c(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        Int r = f[i] % p;
        if (r < 0) r += p;
        c[i] = r.get_si();
    }
    return fp_make(p, std::move(c));
}

ZPoly lift_fp(const FpPoly& f)
{
    ZPoly g(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) g[i] = f.c[i];
    return g;
}

std::vector<FpFactor> fp_factor(const FpPoly& f)
{
    std::vector<FpFactor> out;
    if (fp_deg(f) < 1) return out;
    std::vector<std::pair<FpPoly, int>> sqf;
    fp_squarefree(fp_monic(f), 1, sqf);
    for (auto& [g, m] : sqf) {
        for (auto& irr : fp_factor_squarefree(g)) out.push_back({irr, m});
    }
    std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
        if (a.g.c.size() != b.g.c.size()) return a.g.c.size() < b.g.c.size();
        return a.g.c < b.g.c;
    });
    return out;
}

bool fp_is_irreducible(const FpPoly& f)
{
    if (fp_deg(f) < 1) return false;
    auto fac = fp_factor(f);
    return fac.size() == 1 && fac[0].multiplicity == 1;
}

std::optional<std::vector<DedekindFactor>> dedekind_factor(const ZPoly& f, const Int& q)
{
    long p = q.get_si();
    auto factors = fp_factor(to_fp(f, p));
    // radical g and cofactor h with f = g*h mod q
    FpPoly g = fp_make(p, {1});
    FpPoly h = fp_make(p, {1});
    for (const auto& fac : factors) {
        g = fp_mul(g, fac.g);
        for (int i = 1; i < fac.multiplicity; ++i) h = fp_mul(h, fac.g);
    }
    // T = (g*h - f)/q; criterion: gcd(T, g, h) = 1 in F_q[x]
    ZPoly gh = mul(lift_fp(g), lift_fp(h));
    ZPoly diff(std::max(gh.size(), f.size()), Int(0));
    for (size_t i = 0; i < gh.size(); ++i) diff[i] += gh[i];
    for (size_t i = 0; i < f.size(); ++i) diff[i] -= f[i];
    for (auto& c : diff) {
        assert(c % q == 0);
        c /= q;
    }
    normalize(diff);
    FpPoly t = to_fp(diff, p);
    FpPoly u = fp_gcd(t, fp_gcd(g, h));
    if (fp_deg(u) > 0) return std::nullopt;
    std::vector<DedekindFactor> out;
    for (const auto& fac : factors)
        out.push_back({lift_fp(fac.g), fac.multiplicity, fp_deg(fac.g)});
    return out;
}

// --- irreducibility over Q ---------------------------------------------------

namespace {

bool has_integer_root(const ZPoly& f)
{
    // monic f: integer roots divide the constant term
    if (f[0] == 0) return true;
    Int a0 = abs(f[0]);
    std::vector<Int> divisors;
    for (Int d = 1; d * d <= a0; ++d) {
        if (a0 % d == 0) {
            divisors.push_back(d);
            divisors.push_back(a0 / d);
        }
    }
    for (const auto& d : divisors) {
        if (eval(f, d) == 0 || eval(f, -d) == 0) return true;
    }
    return false;
}

// linear Hensel lift of f = g*h (mod p) to mod p^k_target (target modulus
// returned); f, g, h monic, gcd(g, h) = 1 mod p
struct HenselPair {
    ZPoly g, h;
    Int modulus;
};

ZPoly zmod(const ZPoly& f, const Int& m)
{
    ZPoly r = f;
    for (auto& c : r) {
        c %= m;
        if (c < 0) c += m;
    }
    normalize(r);
    return r;
}

// extended gcd in F_p[x]: u*a + v*b = 1
void fp_gcdext(const FpPoly& a, const FpPoly& b, FpPoly& u, FpPoly& v)
{
    long p = a.p != 0 ? a.p : b.p;
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = fp_make(p, {1}), s1 = fp_make(p, {});
    FpPoly t0 = fp_make(p, {}), t1 = fp_make(p, {1});
    while (!r1.c.empty()) {
        auto [quo, rem] = fp_divrem(r0, r1);
        r0 = r1;
        r1 = rem;
        FpPoly ns = fp_sub(s0, fp_mul(quo, s1));
        FpPoly nt = fp_sub(t0, fp_mul(quo, t1));
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    long inv = invmod(r0.c.back(), p);
    for (auto& x : s0.c) x = mulmod(x, inv, p);
    for (auto& x : t0.c) x = mulmod(x, inv, p);
    u = s0;
    v = t0;
}

HenselPair hensel_lift_pair(const ZPoly& f, ZPoly g, ZPoly h, long p, const Int& target)
{
    FpPoly u, v;
    fp_gcdext(to_fp(g, p), to_fp(h, p), u, v);
    ZPoly ulift = lift_fp(u), vlift = lift_fp(v);
    Int modulus = p;
    while (modulus < target) {
        Int next = modulus * p;
        // delta = (f - g*h)/modulus mod p
        ZPoly gh = mul(g, h);
        ZPoly diff(std::max(gh.size(), f.size()), Int(0));
        for (size_t i = 0; i < f.size(); ++i) diff[i] += f[i];
        for (size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
        for (auto& c : diff) c /= modulus;
        normalize(diff);
        FpPoly delta = to_fp(diff, p);
        // a = v*delta mod g ; b = u*delta + ((v*delta) div g)*h, so that
        // a*h + b*g = delta mod p with deg a < deg g
        FpPoly gp = to_fp(g, p), hp = to_fp(h, p);
        FpPoly vd = fp_mul(to_fp(vlift, p), delta);
        auto [quo, a] = fp_divrem(vd, gp);
        FpPoly b = fp_add(fp_mul(to_fp(ulift, p), delta), fp_mul(quo, hp));
        ZPoly alift = lift_fp(a), blift = lift_fp(b);
        ZPoly gnew = g, hnew = h;
        gnew.resize(std::max(gnew.size(), alift.size()), Int(0));
        for (size_t i = 0; i < alift.size(); ++i) gnew[i] += modulus * alift[i];
        hnew.resize(std::max(hnew.size(), blift.size()), Int(0));
        for (size_t i = 0; i < blift.size(); ++i) hnew[i] += modulus * blift[i];
        g = zmod(gnew, next);
        h = zmod(hnew, next);
        modulus = next;
    }
    return {g, h, modulus};
}

std::vector<ZPoly> hensel_lift_list(const ZPoly& f, const std::vector<ZPoly>& factors, long p,
                                    const Int& target)
{
    if (factors.size() == 1) return {zmod(f, target)};
    ZPoly h0 = factors[1];
    for (size_t i = 2; i < factors.size(); ++i) h0 = lift_fp(to_fp(mul(h0, factors[i]), p));
    HenselPair pair = hensel_lift_pair(f, zmod(factors[0], p), h0, p, target);
    std::vector<ZPoly> rest(factors.begin() + 1, factors.end());
    std::vector<ZPoly> lifted_rest = hensel_lift_list(pair.h, rest, p, target);
    std::vector<ZPoly> out;
    out.push_back(pair.g);
    for (auto& x : lifted_rest) out.push_back(std::move(x));
    return out;
}

Int landau_mignotte_bound(const ZPoly& f)
{
    Int norm2_sq = 0;
    for (const auto& c : f) norm2_sq += c * c;
    Int norm2 = isqrt(norm2_sq) + 1;
    return pow2(static_cast<unsigned long>(degree(f))) * norm2;
}

Int balanced(const Int& c, const Int& m)
{
    Int r = c % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

bool zassenhaus_has_factor(const ZPoly& f, long p)
{
    auto factors_fp = fp_factor(to_fp(f, p));
    std::vector<ZPoly> lifts0;
    for (const auto& fac : factors_fp) lifts0.push_back(lift_fp(fac.g));
    size_t m = lifts0.size();
    if (m <= 1) return false;
    Int bound = 2 * landau_mignotte_bound(f) + 1;
    Int target = p;
    while (target < bound) target *= p;
    auto lifted = hensel_lift_list(zmod(f, target), lifts0, p, target);
    // try all subsets of size <= m/2
    for (unsigned mask = 1; mask < (1u << m) - 1; ++mask) {
        size_t bits = static_cast<size_t>(__builtin_popcount(mask));
        if (bits > m / 2 || (bits == m - bits && (mask & 1u) == 0)) continue;
        ZPoly cand = {Int(1)};
        for (size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) cand = zmod(mul(cand, lifted[i]), target);
        for (auto& c : cand) c = balanced(c, target);
        normalize(cand);
        if (degree(cand) == 0 || degree(cand) >= degree(f)) continue;
        if (divides_exactly(f, cand)) return true;
    }
    return false;
}

} // namespace

bool is_irreducible_over_q(const ZPoly& f)
{
    int n = degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    assert(f.back() == 1);
    if (has_integer_root(f)) return false;
    if (n <= 3) return true;
    Int disc = discriminant(f);
    if (disc == 0) return false;
    static const long probes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                  43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    long good_p = 0;
    for (long p : probes) {
        if (disc % p == 0) continue;
        if (good_p == 0) good_p = p;
        if (fp_is_irreducible(to_fp(f, p))) return true;
    }
    if (good_p == 0) good_p = 101; // all probes divided disc; extremely unlikely at desk scale
    while (disc % good_p == 0) ++good_p;
    return !zassenhaus_has_factor(f, good_p);
}

std::vector<Rat> real_root_approximations(const ZPoly& f, unsigned prec_bits)
{
    QPoly fq = to_q(f);
    auto chain = sturm_chain(fq);
    auto count_in = [&](const Rat& a, const Rat& b) {
        return variations_at(chain, a) - variations_at(chain, b);
    };
    // Cauchy bound
    Int m = 1;
    for (const auto& c : f) m = std::max(m, Int(abs(c)));
    Rat bound = Rat(m + 1);
    struct Interval {
        Rat lo, hi;
        int count;
    };
    std::vector<Interval> stack{{-bound, bound, count_in(-bound, bound)}};
    std::vector<std::pair<Rat, Rat>> isolated;
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        if (iv.count == 0) continue;
        if (iv.count == 1) {
            isolated.emplace_back(iv.lo, iv.hi);
            continue;
        }
        Rat mid = (iv.lo + iv.hi) / 2;
        if (eval(fq, mid) == 0) {
            // nudge the split point off the root
            mid += make_rat(1, 3) * (iv.hi - iv.lo) / 2;
        }
        int left = count_in(iv.lo, mid);
        stack.push_back({iv.lo, mid, left});
        stack.push_back({mid, iv.hi, iv.count - left});
    }
    std::sort(isolated.begin(), isolated.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Rat> roots;
    Rat tol = make_rat(1, pow2(prec_bits));
    for (auto& [lo, hi] : isolated) {
        // bisection on the exact sign of f
        Rat a = lo, b = hi;
        int sa = sgn(eval(fq, a));
        if (sa == 0) {
            roots.push_back(a);
            continue;
        }
        while (b - a > tol) {
            Rat mid = (a + b) / 2;
            int sm = sgn(eval(fq, mid));
            if (sm == 0) {
                a = mid;
                b = mid;
                break;
            }
            if (sm == sa)
                a = mid;
            else
                b = mid;
        }
        roots.push_back((a + b) / 2);
    }
    return roots;
}

} // namespace frey::poly
