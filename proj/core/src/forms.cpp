#include "frey/forms.hpp"

#include "frey/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace frey::forms {

Int disc(const Form& f) { return f.b * f.b - 4 * f.a * f.c; }

bool is_reduced(const Form& f, const Int& D)
{
    // 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b
    if (f.b <= 0) return false;
    if (f.b * f.b >= D) return false;
    Int twoa = 2 * abs(f.a);
    // sqrt(D) < 2|a| + b
    if ((twoa + f.b) * (twoa + f.b) <= D) return false;
    // 2|a| < sqrt(D) + b  <=>  (2|a| - b)^2 < D when 2|a| >= b
    if (twoa >= f.b && (twoa - f.b) * (twoa - f.b) >= D) return false;
    return true;
}

namespace {

// unique b' = -b (mod 2|c|) in the window (sqrt(D) - 2|c|, sqrt(D))
Int rho_target_b(const Int& b, const Int& c, const Int& D)
{
    Int m = 2 * abs(c);
    Int s = isqrt(D);
    Int r = (s + b) % m;
    if (r < 0) r += m;
    return s - r;
}

} // namespace

Form rho(const Form& f, const Int& D)
{
    Int bp = rho_target_b(f.b, f.c, D);
    Int cp = (bp * bp - D) / (4 * f.c);
    return Form{f.c, bp, cp};
}

Form reduce(Form f, const Int& D)
{
    assert(disc(f) == D);
    int guard = 0;
    while (!is_reduced(f, D)) {
        Int bp;
        Int abs_c = abs(f.c);
        if (abs_c * abs_c > D) {
            // normalize: b' = -b mod 2|c| in (-|c|, |c|]
            Int m = 2 * abs_c;
            Int r = ((-f.b) % m + m) % m;
            if (r > abs_c) r -= m;
            bp = r;
        } else {
            bp = rho_target_b(f.b, f.c, D);
        }
        Int cp = (bp * bp - D) / (4 * f.c);
        f = Form{f.c, bp, cp};
        if (++guard > 100000) throw std::logic_error("form reduction did not terminate");
    }
    return f;
}

std::vector<Form> reduced_forms(const Int& D)
{
    std::vector<Form> out;
    Int s = isqrt(D);
    for (Int b = (D % 2 == 0) ? 2 : 1; b <= s; b += 2) {
        Int prod4 = b * b - D; // = 4ac < 0
        assert(prod4 % 4 == 0);
        Int prod = -prod4 / 4; // = |a c| with opposite signs
        for (Int a = 1; a * a <= prod; ++a) {
            if (prod % a != 0) continue;
            Int c = prod / a;
            const std::pair<Int, Int> sign_pairs[] = {{a, -c}, {c, -a}, {-a, c}, {-c, a}};
            for (const auto& [aa, cc] : sign_pairs) {
                Form f{aa, b, cc};
                if (gcd(gcd(abs(f.a), f.b), abs(f.c)) != 1) continue; // primitive only
                if (is_reduced(f, D)) out.push_back(f);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long cycle_count(const Int& D)
{
    auto forms = reduced_forms(D);
    std::set<Form> remaining(forms.begin(), forms.end());
    long cycles = 0;
    while (!remaining.empty()) {
        ++cycles;
        Form start = *remaining.begin();
        Form f = start;
        do {
            remaining.erase(f);
            f = rho(f, D);
        } while (!(f == start));
    }
    return cycles;
}

std::vector<Form> cycle_of(Form reduced, const Int& D)
{
    std::vector<Form> cyc;
    Form start = reduced;
    Form f = start;
    do {
        cyc.push_back(f);
        f = rho(f, D);
    } while (!(f == start));
    return cyc;
}

Form principal_form(const Int& D)
{
    Int s = isqrt(D);
    Int b = (s % 2 == D % 2) ? s : s - 1;
    return Form{Int(1), b, (b * b - D) / 4};
}

Form class_key(const Form& f, const Int& D)
{
    auto cyc = cycle_of(reduce(f, D), D);
    return *std::min_element(cyc.begin(), cyc.end());
}

bool same_class(const Form& f, const Form& g, const Int& D)
{
    return class_key(f, D) == class_key(g, D);
}

// --- composition via ideal multiplication in HNF -------------------------------

namespace {

// Ideals are Z-modules Z*x + Z*y with x, y in Z + Z*rho, where rho = sqrt(D)/2
// for even D and (1+sqrt(D))/2 for odd D. rho^2 = D/4 resp. rho + (D-1)/4.
struct Vec2 {
    Int u, v; // u + v*rho
};

Vec2 mul_basis(const Vec2& x, const Vec2& y, const Int& D)
{
    // (u1 + v1 r)(u2 + v2 r) = u1u2 + (u1v2 + u2v1) r + v1v2 r^2
    Int uu = x.u * y.u;
    Int cross = x.u * y.v + x.v * y.u;
    Int vv = x.v * y.v;
    if (D % 2 == 0) return Vec2{uu + vv * (D / 4), cross};
    return Vec2{uu + vv * (D - 1) / 4, cross + vv};
}

// Hermite form of the module spanned by the rows; returns (n, (m, k)) with
// module = Z*(n, 0) + Z*(m, k), 0 <= m < n... here we only need n, m, k.
void hnf_2col(std::vector<Vec2> rows, Int& n, Int& m, Int& k)
{
    // eliminate the rho-column via gcds
    k = 0;
    Vec2 pivot{Int(0), Int(0)};
    for (auto& r : rows) {
        if (r.v == 0) continue;
        if (k == 0) {
            pivot = r;
            k = abs(r.v);
            if (r.v < 0) {
                pivot.u = -pivot.u;
                pivot.v = -pivot.v;
            }
            continue;
        }
        // gcd step
        while (r.v != 0) {
            Int q = pivot.v / r.v;
            pivot.u -= q * r.u;
            pivot.v -= q * r.v;
            std::swap(pivot, r);
        }
        k = abs(pivot.v);
        if (pivot.v < 0) {
            pivot.u = -pivot.u;
            pivot.v = -pivot.v;
        }
    }
    // remaining rows are rational multiples of 1
    n = 0;
    for (const auto& r : rows) {
        if (r.v == 0) n = gcd(n, abs(r.u));
    }
    m = pivot.u;
    if (n != 0) {
        m %= n;
        if (m < 0) m += n;
    }
}

Form ideal_to_form(const Int& nrm, const Int& m, const Int& k, const Int& D)
{
    // module k*(Z*(nrm/k) + Z*(m/k + rho)); primitive part has a = nrm/k
    assert(k != 0 && nrm % k == 0 && m % k == 0);
    Int A = nrm / k;
    Int beta = m / k;
    Int B;
    if (D % 2 == 0)
        B = -2 * beta; // beta + rho = (2beta + sqrt D)/2 = (-B + sqrt D)/2
    else
        B = -(2 * beta + 1);
    Int C4 = B * B - D;
    assert(C4 % (4 * A) == 0);
    return Form{A, B, C4 / (4 * A)};
}

Vec2 tau_of_form(const Form& f, const Int& D)
{
    // second basis vector (-b + sqrt(D))/2 of the ideal [a, (-b+sqrt D)/2]
    if (D % 2 == 0) return Vec2{-f.b / 2, Int(1)};
    return Vec2{(-f.b - 1) / 2, Int(1)};
}

} // namespace

Form compose(const Form& f, const Form& g, const Int& D)
{
    // The ideal dictionary [a, (-b+sqrt D)/2] needs a > 0; rho flips the sign
    // of the leading coefficient inside the class.
    Form fp = reduce(f, D);
    if (fp.a < 0) fp = rho(fp, D);
    Form gp = reduce(g, D);
    if (gp.a < 0) gp = rho(gp, D);
    Vec2 tf = tau_of_form(fp, D), tg = tau_of_form(gp, D);
    std::vector<Vec2> rows = {
        Vec2{fp.a * gp.a, Int(0)},
        mul_basis(Vec2{fp.a, Int(0)}, tg, D),
        mul_basis(tf, Vec2{gp.a, Int(0)}, D),
        mul_basis(tf, tg, D),
    };
    Int n, m, k;
    hnf_2col(rows, n, m, k);
    return reduce(ideal_to_form(n, m, k, D), D);
}

std::optional<Form> prime_form(const Int& D, const Int& q)
{
    // need b^2 = D (mod 4q)
    if (q == 2) {
        Int r = ((D % 8) + 8) % 8;
        if (r == 1) return reduce(Form{Int(2), Int(1), (1 - D) / 8}, D);
        if (r == 0 || r == 4) {
            // ramified, D = 4d
            Int d = D / 4;
            if (d % 2 == 0) return reduce(Form{Int(2), Int(0), -d / 2}, D);
            return reduce(Form{Int(2), Int(2), (1 - d) / 2}, D);
        }
        return std::nullopt; // inert
    }
    // odd q: solve b^2 = D mod q by scan (desk scale), adjust parity mod 2q
    Int rem = D % q;
    if (rem < 0) rem += q;
    std::optional<Int> root;
    for (Int b = 0; b < q; ++b) {
        if ((b * b) % q == rem) {
            root = b;
            break;
        }
    }
    if (!root) return std::nullopt; // inert
    Int b = *root;
    if ((b - D) % 2 != 0) b = b + q; // fix parity: b = D mod 2
    b %= 2 * q;
    Int c4 = b * b - D;
    assert(c4 % (4 * q) == 0);
    return reduce(Form{q, b, c4 / (4 * q)}, D);
}

Form sqrt_d_form(const Int& D, const Int& d)
{
    if (D % 2 == 0) return reduce(Form{d, Int(0), Int(-1)}, D);
    return reduce(Form{d, d, (d - 1) / 4}, D);
}

long subgroup_order(const Int& D, const std::vector<Form>& generators)
{
    std::set<Form> elements;
    Form id = class_key(principal_form(D), D);
    elements.insert(id);
    std::vector<Form> frontier{id};
    while (!frontier.empty()) {
        std::vector<Form> next;
        for (const auto& e : frontier) {
            for (const auto& g : generators) {
                Form prod = class_key(compose(e, g, D), D);
                if (elements.insert(prod).second) next.push_back(prod);
            }
        }
        frontier = std::move(next);
    }
    return static_cast<long>(elements.size());
}

} // namespace frey::forms
