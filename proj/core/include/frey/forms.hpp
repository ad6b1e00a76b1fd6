#pragma once

#include "frey/intutil.hpp"

#include <optional>
#include <vector>

namespace frey::forms {

/// Primitive integral binary quadratic form a*x^2 + b*x*y + c*y^2 of positive
/// non-square discriminant b^2 - 4ac = D.
struct Form {
    Int a, b, c;

    bool operator==(const Form& other) const = default;
    bool operator<(const Form& other) const
    {
        if (a != other.a) return a < other.a;
        if (b != other.b) return b < other.b;
        return c < other.c;
    }
};

Int disc(const Form& f);

bool is_reduced(const Form& f, const Int& D);

/// One step of the reduction operator on reduced indefinite forms.
Form rho(const Form& f, const Int& D);

/// Lagrange reduction of an arbitrary form to a reduced one.
Form reduce(Form f, const Int& D);

std::vector<Form> reduced_forms(const Int& D);

/// Number of rho-cycles of reduced forms = narrow class number for a
/// fundamental discriminant.
long cycle_count(const Int& D);

std::vector<Form> cycle_of(Form reduced, const Int& D);

Form principal_form(const Int& D);

/// Smallest form of the rho-cycle through f; canonical key for the class.
Form class_key(const Form& f, const Int& D);

bool same_class(const Form& f, const Form& g, const Int& D);

/// Composition of classes (ideal multiplication in HNF behind the scenes).
Form compose(const Form& f, const Form& g, const Int& D);

/// Form attached to a prime ideal above q (q split or ramified); nullopt for
/// inert q.
std::optional<Form> prime_form(const Int& D, const Int& q);

/// Class of the principal ideal generated by sqrt(d) (norm-negative
/// generator); trivial narrow class exactly when the fundamental unit has
/// norm -1.
Form sqrt_d_form(const Int& D, const Int& d);

/// Order of the subgroup of the (narrow) form class group generated by the
/// given classes.
long subgroup_order(const Int& D, const std::vector<Form>& generators);

} // namespace frey::forms
