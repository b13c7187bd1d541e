#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace qgb {

enum class FieldKind { Rationals, Prime, Extension };

class Field;
class Scalar;

// Interned field objects: repeated requests return the same pointer, so Scalar
// can hold a raw const Field* and copies stay cheap.
const Field* rationals();
const Field* prime_field(std::uint64_t p);
const Field* extension_field(std::uint64_t p, unsigned k);

class Field {
public:
    FieldKind kind() const { return kind_; }
    std::uint64_t characteristic() const { return p_; } // 0 for the rationals
    unsigned degree() const { return k_; }              // 1 unless an extension
    bool finite() const { return kind_ != FieldKind::Rationals; }
    const mpz_class& order() const { return order_; } // p^k; 0 for the rationals

    // Monic modulus of the extension, little-endian coefficients c_0..c_k
    // (c_k = 1). Empty for rationals and prime fields.
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    std::string name() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    Scalar from_mpq(const mpq_class& v) const;
    // Parse an integer or a/b literal in this field.
    Scalar from_string(const std::string& s) const;

    // Deterministic enumeration of field elements, idx in [0, order).
    // Prime fields: the residue idx. Extensions: base-p digits of idx,
    // least significant digit = constant coefficient.
    Scalar element(const mpz_class& idx) const;
    Scalar element(std::uint64_t idx) const;

    bool operator==(const Field& o) const { return this == &o; }

private:
    friend const Field* rationals();
    friend const Field* prime_field(std::uint64_t);
    friend const Field* extension_field(std::uint64_t, unsigned);

    Field(FieldKind kind, std::uint64_t p, unsigned k);

    FieldKind kind_;
    std::uint64_t p_;
    unsigned k_;
    mpz_class order_;
    std::vector<std::uint64_t> modulus_;
};

class Scalar {
public:
    // Zero in the rationals; keeps Scalar usable in containers.
    Scalar();

    const Field* field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(const mpz_class& e) const; // e >= 0
    Scalar pow(std::uint64_t e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

    // Rational value; only valid over the rationals.
    const mpq_class& rational() const;
    // Residue value; only valid over a prime field.
    std::uint64_t residue() const;
    // Coefficient vector c_0..c_{k-1}; only valid over an extension.
    const std::vector<std::uint64_t>& coeffs() const;

private:
    friend class Field;
    friend int cmp(const Scalar& a, const Scalar& b);
    friend std::optional<Scalar> sqrt(const Scalar& a);
    friend Scalar lift(const Scalar& a, const Field* target);

    Scalar(const Field* f, mpq_class v);
    Scalar(const Field* f, std::uint64_t v);
    Scalar(const Field* f, std::vector<std::uint64_t> v);

    void check_same_field(const Scalar& o) const;

    const Field* field_;
    std::variant<mpq_class, std::uint64_t, std::vector<std::uint64_t>> v_;
};

// Deterministic total order on scalars of one field (for canonical output and
// set keys): returns <0, 0, >0.
int cmp(const Scalar& a, const Scalar& b);

struct ScalarLess {
    bool operator()(const Scalar& a, const Scalar& b) const { return cmp(a, b) < 0; }
};

// Square root if one exists in the scalar's own field.
std::optional<Scalar> sqrt(const Scalar& a);

// Move a scalar into `target`. Supported: identity; prime field F_p into an
// extension of the same p (constant embedding); rational integers are not
// implicitly reduced.
Scalar lift(const Scalar& a, const Field* target);

} // namespace qgb
