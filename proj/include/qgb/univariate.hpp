#pragma once

#include <vector>

#include "qgb/field.hpp"

namespace qgb {

// Dense univariate polynomial, little-endian coefficients, no trailing zeros.
class Univariate {
public:
    explicit Univariate(const Field* f) : field_(f) {}
    Univariate(const Field* f, std::vector<Scalar> coeffs);

    static Univariate constant(const Field* f, const Scalar& c);
    static Univariate x(const Field* f); // the monomial x

    const Field* field() const { return field_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(std::size_t i) const;
    Scalar lc() const; // leading coefficient, requires nonzero

    Univariate operator-() const;
    Univariate operator+(const Univariate& o) const;
    Univariate operator-(const Univariate& o) const;
    Univariate operator*(const Univariate& o) const;
    Univariate operator*(const Scalar& s) const;

    Univariate monic() const;
    // Quotient and remainder by a nonzero divisor.
    std::pair<Univariate, Univariate> divmod(const Univariate& d) const;
    Univariate operator%(const Univariate& d) const { return divmod(d).second; }
    Univariate operator/(const Univariate& d) const { return divmod(d).first; }

    Univariate derivative() const;
    Scalar evaluate(const Scalar& x) const;
    Univariate lift_field(const Field* target) const;

    bool operator==(const Univariate& o) const { return field_ == o.field_ && c_ == o.c_; }

    std::string to_string(const std::string& name = "x") const;

private:
    const Field* field_;
    std::vector<Scalar> c_;
    void trim();
};

// Monic gcd (zero if both zero).
Univariate gcd(const Univariate& a, const Univariate& b);

// this^e mod m, exact exponent.
Univariate powmod(const Univariate& base, const mpz_class& e, const Univariate& m);

// Largest squarefree divisor (monic), correct in characteristic 0 and p
// (wild p-th-power parts are deflated through the Frobenius).
Univariate squarefree_part(const Univariate& f);

// All roots of f in its own coefficient field, sorted by the canonical scalar
// order, each listed once. Finite fields use gcd with x^q - x followed by
// deterministic equal-degree splitting; the rationals use the rational root
// theorem (denominator/numerator divisor enumeration).
std::vector<Scalar> roots(const Univariate& f);

} // namespace qgb
