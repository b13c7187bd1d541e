#pragma once

#include <string>
#include <vector>

#include "qgb/field.hpp"
#include "qgb/monomial.hpp"

namespace qgb {

struct Term {
    Monomial mono;
    Scalar coef;
};

// Multivariate polynomial; terms are kept sorted in strictly decreasing
// monomial order under the polynomial's term order, zero coefficients removed.
class Polynomial {
public:
    Polynomial(const Field* f, TermOrder ord) : field_(f), order_(std::move(ord)) {}

    static Polynomial constant(const Field* f, const TermOrder& ord, const Scalar& c);
    static Polynomial variable(const Field* f, const TermOrder& ord, unsigned i);
    static Polynomial from_monomial(const Field* f, const TermOrder& ord, const Monomial& m,
                                    const Scalar& c);
    static Polynomial from_terms(const Field* f, const TermOrder& ord, std::vector<Term> terms);

    const Field* field() const { return field_; }
    const TermOrder& order() const { return order_; }
    unsigned nvars() const { return order_.nvars(); }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    unsigned deg() const; // total degree; 0 for the zero polynomial
    bool homogeneous() const;

    const Term& leading() const; // requires nonzero
    const Monomial& leading_monomial() const { return leading().mono; }
    Scalar coeff(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Scalar& c) const;
    // this - c * m * o   (the Buchberger/division workhorse)
    Polynomial sub_mul(const Scalar& c, const Monomial& m, const Polynomial& o) const;

    Polynomial monic() const; // requires nonzero
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Same terms under a different term order.
    Polynomial reorder(const TermOrder& ord) const;
    // Coefficients moved into `target` (see lift(Scalar)).
    Polynomial lift_field(const Field* target) const;

    // Substitute variable i -> images[i]; images live in a common target ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    // Linear change: variable i -> sum_j rows[i][j] * u_j, result in `ord`.
    Polynomial substitute_linear(const std::vector<std::vector<Scalar>>& rows,
                                 const TermOrder& ord) const;

    Scalar evaluate(const std::vector<Scalar>& point) const;
    Polynomial derivative(unsigned var) const;
    // Degree-d homogeneous component.
    Polynomial component(unsigned d) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    const Field* field_;
    TermOrder order_;
    std::vector<Term> terms_;
};

// Convenience: standard variable names x,y,z,... / u0,u1,... for printing.
std::vector<std::string> default_names(unsigned nvars);

} // namespace qgb
