#pragma once

#include "frey/errors.hpp"
#include "frey/intutil.hpp"
#include "frey/poly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace frey {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A totally real field: Q, a real quadratic Q(sqrt(d)), or a monogenic field
/// of odd degree given by a defining polynomial. Immutable.
class Field {
public:
    enum class Kind { Rational, RealQuadratic, MonogenicOdd };

    Kind kind() const { return kind_; }
    int degree() const { return degree_; }
    const Int& d() const { return d_; }
    const Int& discriminant() const { return discriminant_; }
    // MonogenicOdd discriminants are discriminants of the order Z[theta].
    bool order_discriminant() const { return kind_ == Kind::MonogenicOdd; }
    const poly::ZPoly& min_poly() const { return min_poly_; }
    bool d_is_1_mod_4() const { return kind_ == Kind::RealQuadratic && d_ % 4 == 1; }

    bool operator==(const Field& other) const
    {
        return kind_ == other.kind_ && d_ == other.d_ && min_poly_ == other.min_poly_;
    }

    std::string describe() const;

private:
    friend FieldPtr make_field_rational();
    friend FieldPtr make_field_quadratic(const Int& d);
    friend FieldPtr make_field_monogenic(const poly::ZPoly& f);

    Field() = default;

    Kind kind_ = Kind::Rational;
    int degree_ = 1;
    Int d_ = 0;
    Int discriminant_ = 1;
    poly::ZPoly min_poly_;
};

FieldPtr make_field_rational();
FieldPtr make_field_quadratic(const Int& d);
FieldPtr make_field_monogenic(const poly::ZPoly& monic_odd_poly);

/// Element in integral-basis coordinates: {1} over Q; {1, w} with
/// w = (1+sqrt(d))/2 for d = 1 mod 4 and w = sqrt(d) otherwise; and
/// {1, t, ..., t^(n-1)} for monogenic fields. All arithmetic is exact.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<Rat> coords);

    static FieldElement from_rational(const FieldPtr& field, const Rat& value);
    static FieldElement zero(const FieldPtr& field);
    static FieldElement one(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_integral() const;
    bool is_rational() const;
    Rat rational_value() const; // requires is_rational()

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    FieldElement operator/(const FieldElement& other) const;
    FieldElement operator*(const Rat& s) const;
    FieldElement operator+(const Rat& s) const;
    FieldElement operator-(const Rat& s) const;
    bool operator==(const FieldElement& other) const;
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

    FieldElement inverse() const;
    FieldElement pow(long e) const;
    FieldElement conjugate() const; // quadratic only

    Rat norm() const;
    Rat trace() const;

    /// Deterministic total order on elements of one field (coordinate lex).
    int compare(const FieldElement& other) const;

    std::string display() const;

private:
    void require_same_field(const FieldElement& other) const;

    FieldPtr field_;
    std::vector<Rat> coords_;
};

enum class Op { Add, Sub, Mul, Div };

FieldElement arith(const FieldElement& x, const FieldElement& y, Op op);

std::pair<Rat, Rat> norm_trace(const FieldElement& x);

struct UnitData {
    FieldElement fundamental_unit;
    int norm_of_unit = 0; // +1 or -1
    long class_number = 0;
    long narrow_class_number = 0;
};

/// Fundamental unit eps > 1 of a real quadratic field via the continued
/// fraction of the integral-basis generator. Monogenic fields are rejected;
/// their unit data is user-supplied where the criteria need it.
std::pair<FieldElement, int> fundamental_unit(const FieldPtr& field);

long class_number(const FieldPtr& field, const Int& disc_ceiling = Int(1000000));

long narrow_class_number(const FieldPtr& field, const Int& disc_ceiling = Int(1000000));

UnitData unit_data(const FieldPtr& field, const Int& disc_ceiling = Int(1000000));

/// Square root in the field if one exists; the returned root has its first
/// nonzero coordinate positive. Exact for Q and quadratic fields; for
/// monogenic fields root approximations plus exact verification are used.
std::optional<FieldElement> sqrt_in_field(const FieldElement& x);

/// sqrt of a rational integer inside O_K (used for the exceptional sets).
std::optional<FieldElement> sqrt_integer_in_ring(const FieldPtr& field, const Int& m);

/// Exact sign of a + b*sqrt(d), d > 1 not a square.
int sign_a_plus_b_sqrt(const Rat& a, const Rat& b, const Int& d);

/// Sign of a quadratic element under the embedding sending w to its positive
/// branch.
int element_sign(const FieldElement& x);

} // namespace frey
