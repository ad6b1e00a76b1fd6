#include "frey/field.hpp"

#include "frey/forms.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace frey {

namespace {

using poly::QPoly;
using poly::ZPoly;

Rat rat_of(const Int& n) { return Rat(n); }

} // namespace

// --- field construction -------------------------------------------------------

FieldPtr make_field_rational()
{
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Field::Kind::Rational;
    f->degree_ = 1;
    f->discriminant_ = 1;
    return f;
}

FieldPtr make_field_quadratic(const Int& d)
{
    if (d <= 1) throw Error(Errc::NotTotallyReal, "need squarefree d > 1, got " + to_string(d));
    if (!is_squarefree(d)) throw Error(Errc::NotSquarefree, "d = " + to_string(d));
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Field::Kind::RealQuadratic;
    f->degree_ = 2;
    f->d_ = d;
    f->discriminant_ = (d % 4 == 1) ? d : 4 * d;
    if (d % 4 == 1)
        f->min_poly_ = {-(d - 1) / 4, -1, 1}; // x^2 - x - (d-1)/4, root w = (1+sqrt d)/2
    else
        f->min_poly_ = {-d, 0, 1}; // x^2 - d
    return f;
}

FieldPtr make_field_monogenic(const ZPoly& monic_odd_poly)
{
    ZPoly p = monic_odd_poly;
    poly::normalize(p);
    int n = poly::degree(p);
    if (n < 3 || n % 2 == 0)
        throw Error(Errc::UnsupportedField, "defining polynomial must have odd degree > 1");
    if (p.back() != 1) throw Error(Errc::UnsupportedField, "defining polynomial must be monic");
    if (!poly::is_irreducible_over_q(p)) throw Error(Errc::ReduciblePolynomial, "defining polynomial factors over Q");
    if (poly::count_real_roots(p) != n)
        throw Error(Errc::NotTotallyReal, "Sturm count below degree");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Field::Kind::MonogenicOdd;
    f->degree_ = n;
    f->min_poly_ = p;
    f->discriminant_ = poly::discriminant(p);
    return f;
}

std::string Field::describe() const
{
    switch (kind_) {
    case Kind::Rational: return "Q";
    case Kind::RealQuadratic: return "Q(sqrt(" + to_string(d_) + "))";
    case Kind::MonogenicOdd: {
        std::ostringstream os;
        os << "Q[t]/(";
        bool first = true;
        for (int i = poly::degree(min_poly_); i >= 0; --i) {
            const Int& c = min_poly_[static_cast<size_t>(i)];
            if (c == 0) continue;
            if (!first && c > 0) os << "+";
            if (i == 0)
                os << to_string(c);
            else {
                if (c == -1)
                    os << "-";
                else if (c != 1)
                    os << to_string(c) << "*";
                os << "t";
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        os << ")";
        return os.str();
    }
    }
    return "?";
}

// --- elements ------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords))
{
    coords_.resize(static_cast<size_t>(field_->degree()), Rat(0));
}

FieldElement FieldElement::from_rational(const FieldPtr& field, const Rat& value)
{
    std::vector<Rat> c(static_cast<size_t>(field->degree()), Rat(0));
    c[0] = value;
    return FieldElement(field, std::move(c));
}

FieldElement FieldElement::zero(const FieldPtr& field) { return from_rational(field, Rat(0)); }
FieldElement FieldElement::one(const FieldPtr& field) { return from_rational(field, Rat(1)); }

bool FieldElement::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& c) { return c == 0; });
}

bool FieldElement::is_one() const
{
    if (coords_[0] != 1) return false;
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

bool FieldElement::is_integral() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& c) { return is_integer(c); });
}

bool FieldElement::is_rational() const
{
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rat FieldElement::rational_value() const
{
    assert(is_rational());
    return coords_[0];
}

void FieldElement::require_same_field(const FieldElement& other) const
{
    if (!field_ || !other.field_ || !(*field_ == *other.field_))
        throw Error(Errc::FieldMismatch, "operands live in different fields");
}

FieldElement FieldElement::operator-() const
{
    std::vector<Rat> c = coords_;
    for (auto& x : c) x = -x;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& other) const
{
    require_same_field(other);
    std::vector<Rat> c = coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& other) const
{
    require_same_field(other);
    std::vector<Rat> c = coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= other.coords_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& other) const
{
    require_same_field(other);
    switch (field_->kind()) {
    case Field::Kind::Rational:
        return FieldElement(field_, {coords_[0] * other.coords_[0]});
    case Field::Kind::RealQuadratic: {
        const Rat &u1 = coords_[0], &v1 = coords_[1];
        const Rat &u2 = other.coords_[0], &v2 = other.coords_[1];
        Rat cross = u1 * v2 + u2 * v1;
        Rat vv = v1 * v2;
        if (field_->d_is_1_mod_4()) {
            // w^2 = w + (d-1)/4
            Rat k = rat_of((field_->d() - 1) / 4);
            return FieldElement(field_, {u1 * u2 + vv * k, cross + vv});
        }
        return FieldElement(field_, {u1 * u2 + vv * rat_of(field_->d()), cross});
    }
    case Field::Kind::MonogenicOdd: {
        QPoly a(coords_.begin(), coords_.end());
        QPoly b(other.coords_.begin(), other.coords_.end());
        poly::normalize(a);
        poly::normalize(b);
        QPoly prod = poly::mul(a, b);
        QPoly rem = poly::divrem(prod, poly::to_q(field_->min_poly())).second;
        rem.resize(coords_.size(), Rat(0));
        return FieldElement(field_, std::vector<Rat>(rem.begin(), rem.end()));
    }
    }
    throw std::logic_error("unreachable");
}

FieldElement FieldElement::inverse() const
{
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    switch (field_->kind()) {
    case Field::Kind::Rational:
        return FieldElement(field_, {1 / coords_[0]});
    case Field::Kind::RealQuadratic: {
        Rat n = norm();
        FieldElement conj = conjugate();
        std::vector<Rat> c = conj.coords_;
        for (auto& x : c) x /= n;
        return FieldElement(field_, std::move(c));
    }
    case Field::Kind::MonogenicOdd: {
        QPoly a(coords_.begin(), coords_.end());
        poly::normalize(a);
        QPoly inv = poly::mod_inverse(a, poly::to_q(field_->min_poly()));
        inv.resize(coords_.size(), Rat(0));
        return FieldElement(field_, std::vector<Rat>(inv.begin(), inv.end()));
    }
    }
    throw std::logic_error("unreachable");
}

FieldElement FieldElement::operator/(const FieldElement& other) const
{
    require_same_field(other);
    if (other.is_zero()) throw Error(Errc::DivisionByZero, "division by zero element");
    return *this * other.inverse();
}

FieldElement FieldElement::operator*(const Rat& s) const
{
    std::vector<Rat> c = coords_;
    for (auto& x : c) x *= s;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator+(const Rat& s) const
{
    std::vector<Rat> c = coords_;
    c[0] += s;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const Rat& s) const { return *this + (-s); }

bool FieldElement::operator==(const FieldElement& other) const
{
    if (!field_ || !other.field_ || !(*field_ == *other.field_)) return false;
    return coords_ == other.coords_;
}

FieldElement FieldElement::pow(long e) const
{
    if (e == 0) return one(field_);
    FieldElement base = e > 0 ? *this : inverse();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    FieldElement acc = one(field_);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

FieldElement FieldElement::conjugate() const
{
    if (field_->kind() != Field::Kind::RealQuadratic)
        throw Error(Errc::UnsupportedField, "conjugate is quadratic-only");
    const Rat &u = coords_[0], &v = coords_[1];
    if (field_->d_is_1_mod_4()) return FieldElement(field_, {u + v, -v}); // conj(w) = 1 - w
    return FieldElement(field_, {u, -v});
}

Rat FieldElement::norm() const
{
    switch (field_->kind()) {
    case Field::Kind::Rational:
        return coords_[0];
    case Field::Kind::RealQuadratic: {
        const Rat &u = coords_[0], &v = coords_[1];
        if (field_->d_is_1_mod_4()) return u * u + u * v - v * v * rat_of((field_->d() - 1) / 4);
        return u * u - v * v * rat_of(field_->d());
    }
    case Field::Kind::MonogenicOdd: {
        QPoly g(coords_.begin(), coords_.end());
        poly::normalize(g);
        if (g.empty()) return Rat(0);
        return poly::resultant(poly::to_q(field_->min_poly()), g);
    }
    }
    throw std::logic_error("unreachable");
}

Rat FieldElement::trace() const
{
    switch (field_->kind()) {
    case Field::Kind::Rational:
        return coords_[0];
    case Field::Kind::RealQuadratic: {
        const Rat &u = coords_[0], &v = coords_[1];
        if (field_->d_is_1_mod_4()) return 2 * u + v; // Tr(w) = 1
        return 2 * u;
    }
    case Field::Kind::MonogenicOdd: {
        // Newton power sums of the defining polynomial
        int n = field_->degree();
        const ZPoly& f = field_->min_poly();
        std::vector<Rat> psum(static_cast<size_t>(n), Rat(0));
        psum[0] = Rat(n);
        for (int k = 1; k < n; ++k) {
            Rat s = -Rat(k) * rat_of(f[static_cast<size_t>(n - k)]);
            for (int i = 1; i < k; ++i)
                s -= rat_of(f[static_cast<size_t>(n - i)]) * psum[static_cast<size_t>(k - i)];
            psum[static_cast<size_t>(k)] = s;
        }
        Rat t(0);
        for (int j = 0; j < n; ++j) t += coords_[static_cast<size_t>(j)] * psum[static_cast<size_t>(j)];
        return t;
    }
    }
    throw std::logic_error("unreachable");
}

int FieldElement::compare(const FieldElement& other) const
{
    require_same_field(other);
    for (size_t i = 0; i < coords_.size(); ++i) {
        int c = cmp(coords_[i], other.coords_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string FieldElement::display() const
{
    switch (field_->kind()) {
    case Field::Kind::Rational:
        return to_string(coords_[0]);
    case Field::Kind::RealQuadratic: {
        // write as (p + q*sqrt(d))/r
        Rat a, b;
        if (field_->d_is_1_mod_4()) {
            a = coords_[0] + coords_[1] / 2;
            b = coords_[1] / 2;
        } else {
            a = coords_[0];
            b = coords_[1];
        }
        if (b == 0) return to_string(a);
        Int den = lcm(Int(a.get_den()), Int(b.get_den()));
        Int p = Int(a * rat_of(den));
        Int q = Int(b * rat_of(den));
        std::ostringstream os;
        if (den != 1) os << "(";
        if (p != 0) os << to_string(p);
        if (q > 0 && p != 0) os << "+";
        if (q == -1)
            os << "-";
        else if (q != 1)
            os << to_string(q) << "*";
        os << "sqrt(" << to_string(field_->d()) << ")";
        if (den != 1) os << ")/" << to_string(den);
        return os.str();
    }
    case Field::Kind::MonogenicOdd: {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] == 0) continue;
            if (!first && coords_[i] > 0) os << "+";
            if (i == 0)
                os << to_string(coords_[i]);
            else {
                if (coords_[i] == -1)
                    os << "-";
                else if (coords_[i] != 1)
                    os << to_string(coords_[i]) << "*";
                os << "t";
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }
    }
    return "?";
}

FieldElement arith(const FieldElement& x, const FieldElement& y, Op op)
{
    switch (op) {
    case Op::Add: return x + y;
    case Op::Sub: return x - y;
    case Op::Mul: return x * y;
    case Op::Div: return x / y;
    }
    throw std::logic_error("unreachable");
}

std::pair<Rat, Rat> norm_trace(const FieldElement& x) { return {x.norm(), x.trace()}; }

// --- signs ----------------------------------------------------------------------

int sign_a_plus_b_sqrt(const Rat& a, const Rat& b, const Int& d)
{
    if (b == 0) return sgn(a);
    if (a == 0) return sgn(b);
    if (sgn(a) == sgn(b)) return sgn(a);
    // opposite signs: compare a^2 with b^2 d (d is not a square, no ties)
    Rat lhs = a * a, rhs = b * b * Rat(d);
    int c = cmp(lhs, rhs);
    assert(c != 0);
    return c > 0 ? sgn(a) : sgn(b);
}

int element_sign(const FieldElement& x)
{
    switch (x.field()->kind()) {
    case Field::Kind::Rational:
        return sgn(x.coords()[0]);
    case Field::Kind::RealQuadratic: {
        const Rat &u = x.coords()[0], &v = x.coords()[1];
        if (x.field()->d_is_1_mod_4())
            return sign_a_plus_b_sqrt(u + v / 2, v / 2, x.field()->d());
        return sign_a_plus_b_sqrt(u, v, x.field()->d());
    }
    case Field::Kind::MonogenicOdd:
        throw Error(Errc::UnsupportedField, "no distinguished embedding for monogenic fields");
    }
    throw std::logic_error("unreachable");
}

// --- fundamental unit -------------------------------------------------------------

namespace {

// floor((P + sqrt(D))/Q), exact; D > 0 not a square
Int floor_quadratic(const Int& P, const Int& D, const Int& Q)
{
    Int s = isqrt(D);
    Int num = P + s;
    Int q;
    if (Q > 0) {
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
        return q;
    }
    // floor(x/Q) = -ceil((P+sqrt D)/|Q|) = -(floor((P+s)/|Q|) + 1), x irrational
    Int absq = -Q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), absq.get_mpz_t());
    return -(q + 1);
}

} // namespace

std::pair<FieldElement, int> fundamental_unit(const FieldPtr& field)
{
    if (field->kind() != Field::Kind::RealQuadratic)
        throw Error(Errc::UnsupportedField, "fundamental units are computed for real quadratic fields only");
    const Int d = field->d();
    Int D, P, Q;
    if (d % 4 == 1) {
        D = d;
        P = 1;
        Q = 2;
    } else {
        D = 4 * d;
        P = 0;
        Q = 2;
    }
    // continued fraction of (P + sqrt(D))/Q with state recurrence
    std::map<std::pair<Int, Int>, int> seen;
    std::vector<Int> Ps, Qs, As;
    int j0 = -1;
    while (true) {
        auto key = std::make_pair(P, Q);
        auto it = seen.find(key);
        if (it != seen.end()) {
            j0 = it->second;
            break;
        }
        seen.emplace(key, static_cast<int>(As.size()));
        Ps.push_back(P);
        Qs.push_back(Q);
        Int a = floor_quadratic(P, D, Q);
        As.push_back(a);
        Int Pn = a * Q - P;
        Int Qn = (D - Pn * Pn) / Q;
        P = Pn;
        Q = Qn;
    }
    // automorph of xi_{j0} over one period: eps = m10*xi + m11
    Int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    for (size_t i = static_cast<size_t>(j0); i < As.size(); ++i) {
        Int n00 = m00 * As[i] + m01, n10 = m10 * As[i] + m11;
        m01 = m00;
        m11 = m10;
        m00 = n00;
        m10 = n10;
    }
    Rat rational_part = make_rat(m10 * Ps[static_cast<size_t>(j0)], Qs[static_cast<size_t>(j0)]) + Rat(m11);
    Rat sqrtD_coef = make_rat(m10, Qs[static_cast<size_t>(j0)]);
    // convert x + y*sqrt(D) to integral-basis coordinates
    std::vector<Rat> coords(2);
    if (d % 4 == 1) {
        // sqrt(D) = sqrt(d) = 2w - 1
        coords[0] = rational_part - sqrtD_coef;
        coords[1] = 2 * sqrtD_coef;
    } else {
        // sqrt(D) = 2 sqrt(d) = 2w
        coords[0] = rational_part;
        coords[1] = 2 * sqrtD_coef;
    }
    FieldElement eps(field, coords);
    Rat n = eps.norm();
    if (!(n == 1 || n == -1) || !eps.is_integral())
        throw std::logic_error("continued fraction did not produce a unit");
    // normalize to the candidate > 1
    FieldElement one = FieldElement::one(field);
    for (FieldElement cand : {eps, -eps, eps.inverse(), -(eps.inverse())}) {
        if (element_sign(cand - one) > 0) {
            return {cand, n == 1 ? 1 : -1};
        }
    }
    throw std::logic_error("no unit candidate exceeds 1");
}

long narrow_class_number(const FieldPtr& field, const Int& disc_ceiling)
{
    if (field->kind() != Field::Kind::RealQuadratic)
        throw Error(Errc::UnsupportedField, "class numbers are computed for real quadratic fields only");
    if (field->discriminant() > disc_ceiling)
        throw Error(Errc::DiscriminantTooLarge,
                    "discriminant " + to_string(field->discriminant()) + " exceeds ceiling " + to_string(disc_ceiling));
    return forms::cycle_count(field->discriminant());
}

long class_number(const FieldPtr& field, const Int& disc_ceiling)
{
    long hplus = narrow_class_number(field, disc_ceiling);
    auto [eps, n] = fundamental_unit(field);
    (void)eps;
    if (n == -1) return hplus;
    assert(hplus % 2 == 0);
    return hplus / 2;
}

UnitData unit_data(const FieldPtr& field, const Int& disc_ceiling)
{
    auto [eps, n] = fundamental_unit(field);
    long hplus = narrow_class_number(field, disc_ceiling);
    long h = (n == -1) ? hplus : hplus / 2;
    return UnitData{eps, n, h, hplus};
}

// --- square roots -----------------------------------------------------------------

namespace {

FieldElement canonical_sign(FieldElement x)
{
    for (const Rat& c : x.coords()) {
        if (c == 0) continue;
        return c > 0 ? x : -x;
    }
    return x;
}

std::optional<FieldElement> sqrt_quadratic(const FieldElement& x)
{
    const FieldPtr& K = x.field();
    const Int d = K->d();
    const Rat &u = x.coords()[0], &v = x.coords()[1];
    if (v == 0) {
        if (auto s = sqrt_exact(u)) return canonical_sign(FieldElement(K, {*s, Rat(0)}));
        // u = d t^2, sqrt = t*sqrt(d)
        if (auto t = sqrt_exact(u / rat_of(d))) {
            if (K->d_is_1_mod_4()) return canonical_sign(FieldElement(K, {-*t, 2 * *t}));
            return canonical_sign(FieldElement(K, {Rat(0), *t}));
        }
        return std::nullopt;
    }
    auto nres = sqrt_exact(x.norm());
    if (!nres) return std::nullopt;
    Rat root_n = *nres;
    // solve (s + t*w)^2 = x for T = t^2 via the norm
    std::vector<Rat> t_squares;
    if (K->d_is_1_mod_4()) {
        // d*T^2 - (4u+2v)*T + v^2 = 0, discriminant 16*N(x)
        Rat b = 4 * u + 2 * v;
        t_squares.push_back((b + 4 * root_n) / (2 * rat_of(d)));
        t_squares.push_back((b - 4 * root_n) / (2 * rat_of(d)));
    } else {
        // d*T^2 - u*T + v^2/4 = 0, discriminant N(x)
        t_squares.push_back((u + root_n) / (2 * rat_of(d)));
        t_squares.push_back((u - root_n) / (2 * rat_of(d)));
    }
    for (const Rat& T : t_squares) {
        if (T <= 0) continue;
        auto t = sqrt_exact(T);
        if (!t) continue;
        for (const Rat& tt : {Rat(*t), Rat(-*t)}) {
            if (tt == 0) continue;
            Rat s = K->d_is_1_mod_4() ? Rat((v / tt - tt) / 2) : Rat(v / (2 * tt));
            FieldElement cand(K, {s, tt});
            if (cand * cand == x) return canonical_sign(cand);
        }
    }
    return std::nullopt;
}

std::optional<FieldElement> sqrt_monogenic(const FieldElement& x)
{
    // Roots with integral (or half-integral after scaling) coordinates are
    // recovered from real-embedding approximations and verified exactly.
    const FieldPtr& K = x.field();
    int n = K->degree();
    if (!x.is_integral()) {
        Int m = 1;
        for (const Rat& c : x.coords()) m = lcm(m, Int(c.get_den()));
        FieldElement scaled = x * Rat(m * m);
        auto s = sqrt_monogenic(scaled);
        if (!s) return std::nullopt;
        return canonical_sign(*s * make_rat(1, m));
    }
    for (unsigned prec : {96u, 256u}) {
        auto roots = poly::real_root_approximations(K->min_poly(), prec);
        assert(static_cast<int>(roots.size()) == n);
        // embeddings of x
        std::vector<Rat> emb(roots.size());
        bool nonneg = true;
        for (size_t i = 0; i < roots.size(); ++i) {
            Rat val(0);
            for (size_t j = x.coords().size(); j-- > 0;) val = val * roots[i] + x.coords()[j];
            emb[i] = val;
            if (val < 0 && -val > make_rat(1, pow2(prec / 2))) nonneg = false;
        }
        if (!nonneg) return std::nullopt;
        // rational approximations of sqrt(emb[i])
        std::vector<Rat> sq(emb.size());
        Int scale = pow2(prec);
        for (size_t i = 0; i < emb.size(); ++i) {
            if (emb[i] <= 0) {
                sq[i] = Rat(0);
                continue;
            }
            Int num = Int(emb[i].get_num()) * scale * scale;
            Int den = Int(emb[i].get_den());
            sq[i] = make_rat(isqrt(num / den), scale);
        }
        // try sign patterns (global sign fixed by canonicalization)
        for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
            std::vector<Rat> target(sq.size());
            target[0] = sq[0];
            for (int i = 1; i < n; ++i)
                target[static_cast<size_t>(i)] =
                    (mask >> (i - 1)) & 1 ? -sq[static_cast<size_t>(i)] : sq[static_cast<size_t>(i)];
            // solve Vandermonde system V c = target
            std::vector<std::vector<Rat>> a(static_cast<size_t>(n),
                                            std::vector<Rat>(static_cast<size_t>(n + 1), Rat(0)));
            for (int i = 0; i < n; ++i) {
                Rat pw(1);
                for (int j = 0; j < n; ++j) {
                    a[static_cast<size_t>(i)][static_cast<size_t>(j)] = pw;
                    pw *= roots[static_cast<size_t>(i)];
                }
                a[static_cast<size_t>(i)][static_cast<size_t>(n)] = target[static_cast<size_t>(i)];
            }
            bool singular = false;
            for (int col = 0; col < n && !singular; ++col) {
                int piv = -1;
                for (int row = col; row < n; ++row)
                    if (a[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
                        piv = row;
                        break;
                    }
                if (piv < 0) {
                    singular = true;
                    break;
                }
                std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(col)]);
                for (int row = 0; row < n; ++row) {
                    if (row == col) continue;
                    Rat f = a[static_cast<size_t>(row)][static_cast<size_t>(col)] /
                            a[static_cast<size_t>(col)][static_cast<size_t>(col)];
                    if (f == 0) continue;
                    for (int j = col; j <= n; ++j)
                        a[static_cast<size_t>(row)][static_cast<size_t>(j)] -=
                            f * a[static_cast<size_t>(col)][static_cast<size_t>(j)];
                }
            }
            if (singular) continue;
            std::vector<Rat> cand(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                cand[static_cast<size_t>(i)] = Rat(round_to_int(a[static_cast<size_t>(i)][static_cast<size_t>(n)] /
                                                                a[static_cast<size_t>(i)][static_cast<size_t>(i)]));
            FieldElement c(K, cand);
            if (c * c == x) return canonical_sign(c);
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<FieldElement> sqrt_in_field(const FieldElement& x)
{
    switch (x.field()->kind()) {
    case Field::Kind::Rational: {
        auto s = sqrt_exact(x.coords()[0]);
        if (!s) return std::nullopt;
        return FieldElement(x.field(), {*s});
    }
    case Field::Kind::RealQuadratic:
        return sqrt_quadratic(x);
    case Field::Kind::MonogenicOdd:
        return sqrt_monogenic(x);
    }
    throw std::logic_error("unreachable");
}

std::optional<FieldElement> sqrt_integer_in_ring(const FieldPtr& field, const Int& m)
{
    auto r = sqrt_in_field(FieldElement::from_rational(field, Rat(m)));
    if (r && r->is_integral()) return r;
    return std::nullopt;
}

} // namespace frey
