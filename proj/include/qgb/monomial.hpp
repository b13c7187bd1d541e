#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qgb {

// Exponent vector in a fixed number of variables.
class Monomial {
public:
    explicit Monomial(unsigned nvars) : e_(nvars, 0), deg_(0) {}
    Monomial(std::vector<std::uint32_t> exps);

    static Monomial variable(unsigned nvars, unsigned i);

    unsigned nvars() const { return static_cast<unsigned>(e_.size()); }
    std::uint32_t deg() const { return deg_; }
    std::uint32_t operator[](unsigned i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }
    void set(unsigned i, std::uint32_t v);

    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const; // this | o
    Monomial divide(const Monomial& o) const; // this / o, requires o | this
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::vector<std::uint32_t> e_;
    std::uint32_t deg_;
};

enum class OrderKind { DegRevLex, Lex };

// A monomial order together with a variable priority permutation:
// priority()[0] is the most significant variable index.
class TermOrder {
public:
    TermOrder(OrderKind kind, unsigned nvars);
    TermOrder(OrderKind kind, std::vector<unsigned> priority);

    OrderKind kind() const { return kind_; }
    unsigned nvars() const { return static_cast<unsigned>(priority_.size()); }
    const std::vector<unsigned>& priority() const { return priority_; }

    // <0 if a < b, 0 if equal, >0 if a > b.
    //
    // Degrevlex: higher total degree wins; at equal degree scan from the
    // LEAST significant variable upward and the first difference goes to the
    // monomial with the SMALLER exponent there.
    // Lex: scan from the most significant variable; larger exponent wins.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const TermOrder& o) const {
        return kind_ == o.kind_ && priority_ == o.priority_;
    }
    bool operator!=(const TermOrder& o) const { return !(*this == o); }

private:
    OrderKind kind_;
    std::vector<unsigned> priority_;
};

// All monomials of total degree exactly d, listed in decreasing order under `ord`.
std::vector<Monomial> monomials_of_degree(unsigned nvars, unsigned d, const TermOrder& ord);

} // namespace qgb
