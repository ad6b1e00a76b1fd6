#include "frey/primes.hpp"

#include "frey/errors.hpp"
#include "frey/forms.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace frey {

using poly::ZPoly;

std::string PrimeIdeal::display() const
{
    std::ostringstream os;
    os << "(" << to_string(q);
    if (!two_elem_g.empty() && two_elem_g.size() <= 2 && field->kind() != Field::Kind::Rational) {
        if (two_elem_g.size() == 2)
            os << ", w-" << to_string(root());
        else
            os << ", g";
    } else if (field->kind() == Field::Kind::MonogenicOdd && !two_elem_g.empty()) {
        os << ", deg " << poly::degree(two_elem_g) << " generator";
    }
    os << ")[e=" << e << ",f=" << f << "]";
    return os.str();
}

SplittingReport factor_rational_prime(const FieldPtr& field, const Int& q)
{
    if (!is_probable_prime(q)) throw Error(Errc::ZeroModulus, "q = " + to_string(q) + " is not prime");
    SplittingReport rep;
    rep.q = q;
    if (field->kind() == Field::Kind::Rational) {
        PrimeIdeal P{field, q, 1, 1, {}, FieldElement::from_rational(field, Rat(q))};
        rep.primes_above.push_back(P);
        rep.pattern = SplitPattern::Inert;
        return rep;
    }
    if (!q.fits_slong_p() || q > 2147483647)
        throw Error(Errc::UnsupportedField, "prime too large for factorization routines");
    auto dedekind = poly::dedekind_factor(field->min_poly(), q);
    if (!dedekind)
        throw Error(Errc::DedekindInapplicable,
                    "q = " + to_string(q) + " divides the index; supply the factorization externally");
    int n = field->degree();
    int sum_ef = 0;
    for (const auto& fac : *dedekind) {
        PrimeIdeal P;
        P.field = field;
        P.q = q;
        P.e = fac.e;
        P.f = fac.f_deg;
        P.two_elem_g = fac.g;
        sum_ef += fac.e * fac.f_deg;
        // inert prime: generated by q alone
        if (fac.e == 1 && fac.f_deg == n) P.two_elem_g.clear();
        rep.primes_above.push_back(P);
    }
    assert(sum_ef == n);
    std::sort(rep.primes_above.begin(), rep.primes_above.end(),
              [](const PrimeIdeal& a, const PrimeIdeal& b) { return a.two_elem_g < b.two_elem_g; });
    const auto& primes = rep.primes_above;
    if (primes.size() == 1 && primes[0].e == 1)
        rep.pattern = SplitPattern::Inert;
    else if (primes.size() == 1 && primes[0].e == n)
        rep.pattern = SplitPattern::Ramified;
    else if (static_cast<int>(primes.size()) == n)
        rep.pattern = SplitPattern::Split;
    else if (std::any_of(primes.begin(), primes.end(), [](const PrimeIdeal& p) { return p.e > 1; }))
        rep.pattern = SplitPattern::Ramified;
    else
        rep.pattern = SplitPattern::Mixed;
    return rep;
}

namespace {

// Newton lift of the simple root r0 of f mod q to a root mod q^target_exp.
Int hensel_root(const ZPoly& f, const Int& q, const Int& r0, unsigned long target_exp)
{
    Int r = r0 % q;
    if (r < 0) r += q;
    unsigned long have = 1;
    while (have < target_exp) {
        unsigned long next = std::min(2 * have, target_exp);
        Int next_mod = pow_int(q, next);
        Int fr = poly::eval(f, r) % next_mod;
        Int fpr = 0; // f'(r), Horner
        for (size_t i = f.size(); i-- > 1;) fpr = fpr * r + Int(static_cast<long>(i)) * f[i];
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), fpr.get_mpz_t(), next_mod.get_mpz_t()) == 0)
            throw std::logic_error("non-simple root in Hensel lift");
        r = (r - fr * inv) % next_mod;
        if (r < 0) r += next_mod;
        have = next;
    }
    return r;
}

long valuation_integral(const PrimeIdeal& P, const FieldElement& x)
{
    const FieldPtr& K = P.field;
    switch (K->kind()) {
    case Field::Kind::Rational:
        return val_rat(x.coords()[0], P.q);
    case Field::Kind::RealQuadratic: {
        Rat n = x.norm();
        long vn = val_rat(n, P.q);
        if (P.f == 2) {
            assert(vn % 2 == 0);
            return vn / 2; // inert
        }
        if (P.e == 2) return vn; // ramified
        // split: Hensel-lift the basis root with doubling precision
        unsigned long prec = 8;
        const Int u(x.coords()[0].get_num());
        const Int v(x.coords()[1].get_num());
        assert(x.is_integral());
        while (true) {
            Int r = hensel_root(K->min_poly(), P.q, P.root(), prec);
            Int modulus = pow_int(P.q, prec);
            Int image = (u + v * r) % modulus;
            if (image < 0) image += modulus;
            if (image != 0) {
                long val = val_int(image, P.q);
                if (val < static_cast<long>(prec)) return val;
            }
            prec *= 2;
            if (prec > 4 * static_cast<unsigned long>(std::max(vn, 2L)) + 64)
                throw std::logic_error("split-prime valuation failed to stabilize");
        }
    }
    case Field::Kind::MonogenicOdd:
        throw Error(Errc::UnsupportedField,
                    "valuations of elements are exposed for rational and quadratic fields only");
    }
    throw std::logic_error("unreachable");
}

} // namespace

long valuation(const PrimeIdeal& P, const FieldElement& x)
{
    if (x.is_zero()) return kValuationInfinity;
    // clear denominators: x = y / m with y integral
    Int m = 1;
    for (const Rat& c : x.coords()) m = lcm(m, Int(c.get_den()));
    if (m == 1) return valuation_integral(P, x);
    FieldElement y = x * Rat(m);
    return valuation_integral(P, y) - P.e * val_int(m, P.q);
}

bool prime_divides(const PrimeIdeal& P, const FieldElement& x)
{
    if (x.is_zero()) return true;
    if (P.field->kind() == Field::Kind::MonogenicOdd) {
        // residue test: reduce the element polynomial mod (q, g)
        if (!x.is_integral()) throw Error(Errc::UnsupportedField, "membership test needs an integral element");
        if (P.two_elem_g.empty()) {
            // inert: P = (q)
            for (const Rat& c : x.coords())
                if (Int(c.get_num()) % P.q != 0) return false;
            return true;
        }
        poly::ZPoly xc(x.coords().size());
        for (size_t i = 0; i < xc.size(); ++i) xc[i] = Int(x.coords()[i].get_num());
        poly::normalize(xc);
        // remainder by the monic g stays integral; x lies in (q, g) iff every
        // remainder coefficient vanishes mod q
        auto rem = poly::divrem(poly::to_q(xc), poly::to_q(P.two_elem_g)).second;
        for (const Rat& c : rem) {
            if (Int(c.get_num()) % P.q != 0) return false;
        }
        return true;
    }
    return valuation(P, x) >= 1;
}

std::vector<PrimeIdeal> s_set(const FieldPtr& field, const Int& n)
{
    if (n == 0) throw Error(Errc::ZeroModulus, "S_K(0) is undefined");
    std::vector<PrimeIdeal> out;
    for (const Int& q : prime_divisors(2 * n)) {
        auto rep = factor_rational_prime(field, q);
        for (auto& P : rep.primes_above) out.push_back(std::move(P));
    }
    std::sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
        if (a.q != b.q) return a.q < b.q;
        return a.two_elem_g < b.two_elem_g;
    });
    return out;
}

std::vector<PrimeIdeal> u_set(const FieldPtr& field)
{
    std::vector<PrimeIdeal> out;
    for (auto& P : s_set(field, 1)) {
        if (gcd(Int(3), Int(P.e)) == 1) out.push_back(std::move(P));
    }
    return out;
}

PrincipalResult principal_generator(const PrimeIdeal& P)
{
    const FieldPtr& K = P.field;
    if (K->kind() == Field::Kind::MonogenicOdd)
        throw Error(Errc::UnsupportedField, "principality search covers rational and quadratic fields");
    if (K->kind() == Field::Kind::Rational)
        return {PrincipalStatus::Found, FieldElement::from_rational(K, Rat(P.q))};
    if (P.two_elem_g.empty()) {
        // inert prime (q)
        return {PrincipalStatus::Found, FieldElement::from_rational(K, Rat(P.q))};
    }
    // box search: |coords| <= 4*sqrt(N(P)*sqrt(disc))
    Int normP = pow_int(P.q, static_cast<unsigned long>(P.f));
    Int bound = 4 * (isqrt(normP * (isqrt(K->discriminant()) + 1)) + 1);
    Int target = normP;
    for (Int u = -bound; u <= bound; ++u) {
        for (Int v = -bound; v <= bound; ++v) {
            if (u == 0 && v == 0) continue;
            FieldElement cand(K, {Rat(u), Rat(v)});
            Rat n = cand.norm();
            if (n != Rat(target) && n != -Rat(target)) continue;
            if (valuation(P, cand) >= 1) return {PrincipalStatus::Found, cand};
        }
    }
    // disproof via the narrow class group when it is reachable
    const Int D = K->discriminant();
    auto pf = forms::prime_form(D, P.q);
    if (pf) {
        auto [eps, neps] = fundamental_unit(K);
        (void)eps;
        bool principal = forms::same_class(*pf, forms::principal_form(D), D);
        if (!principal && neps == 1)
            principal = forms::same_class(*pf, forms::sqrt_d_form(D, K->d()), D);
        if (!principal) return {PrincipalStatus::NonPrincipal, std::nullopt};
    }
    return {PrincipalStatus::SearchExhausted, std::nullopt};
}

} // namespace frey
