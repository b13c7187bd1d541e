#include "qgb/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qgb/error.hpp"

namespace qgb {

Polynomial Polynomial::constant(const Field* f, const TermOrder& ord, const Scalar& c) {
    Polynomial p(f, ord);
    if (!c.is_zero()) p.terms_.push_back({Monomial(ord.nvars()), c});
    return p;
}

Polynomial Polynomial::variable(const Field* f, const TermOrder& ord, unsigned i) {
    Polynomial p(f, ord);
    p.terms_.push_back({Monomial::variable(ord.nvars(), i), f->one()});
    return p;
}

Polynomial Polynomial::from_monomial(const Field* f, const TermOrder& ord, const Monomial& m,
                                     const Scalar& c) {
    Polynomial p(f, ord);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(const Field* f, const TermOrder& ord, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    Polynomial p(f, ord);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coef += t.coef;
            if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
        } else if (!t.coef.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

unsigned Polynomial::deg() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, static_cast<unsigned>(t.mono.deg()));
    return d;
}

bool Polynomial::homogeneous() const {
    for (const auto& t : terms_)
        if (t.mono.deg() != terms_.front().mono.deg()) return false;
    return true;
}

const Term& Polynomial::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

Scalar Polynomial::coeff(const Monomial& m) const {
    for (const auto& t : terms_) {
        int c = order_.compare(t.mono, m);
        if (c == 0) return t.coef;
        if (c < 0) break;
    }
    return field_->zero();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (order_ != o.order_) throw std::logic_error("mixed-order polynomial arithmetic");
    Polynomial r(field_, order_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = order_.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].coef + o.terms_[j].coef;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Scalar& c) const {
    Polynomial r(field_, order_);
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (order_ != o.order_) throw std::logic_error("mixed-order polynomial arithmetic");
    auto greater = [this](const Monomial& a, const Monomial& b) {
        return order_.compare(a, b) > 0;
    };
    std::map<Monomial, Scalar, decltype(greater)> acc(greater);
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            Scalar c = a.coef * b.coef;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), std::move(c));
            else
                it->second += c;
        }
    }
    Polynomial r(field_, order_);
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, c});
    return r;
}

Polynomial Polynomial::sub_mul(const Scalar& c, const Monomial& m, const Polynomial& o) const {
    Polynomial prod(field_, order_);
    prod.terms_.reserve(o.terms_.size());
    for (const auto& t : o.terms_) prod.terms_.push_back({t.mono * m, -(t.coef * c)});
    // Multiplying by a monomial preserves the term ordering.
    return *this + prod;
}

Polynomial Polynomial::monic() const {
    return *this * leading().coef.inverse();
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (field_ != o.field_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

Polynomial Polynomial::reorder(const TermOrder& ord) const {
    std::vector<Term> ts = terms_;
    return from_terms(field_, ord, std::move(ts));
}

Polynomial Polynomial::lift_field(const Field* target) const {
    Polynomial r(target, order_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef = lift(t.coef, target);
    return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars()) throw std::logic_error("substitute: wrong image count");
    const Field* f = images.empty() ? field_ : images[0].field();
    const TermOrder& ord = images.empty() ? order_ : images[0].order();
    // Cache powers of each image.
    std::vector<std::vector<Polynomial>> pows(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        pows[i].push_back(Polynomial::constant(f, ord, f->one()));
    auto power = [&](unsigned i, std::uint32_t e) -> const Polynomial& {
        while (pows[i].size() <= e) pows[i].push_back(pows[i].back() * images[i]);
        return pows[i][e];
    };
    Polynomial out(f, ord);
    for (const auto& t : terms_) {
        Polynomial term = Polynomial::constant(f, ord, lift(t.coef, f));
        for (unsigned i = 0; i < nvars(); ++i)
            if (t.mono[i] > 0) term = term * power(i, t.mono[i]);
        out = out + term;
    }
    return out;
}

Polynomial Polynomial::substitute_linear(const std::vector<std::vector<Scalar>>& rows,
                                         const TermOrder& ord) const {
    if (rows.size() != nvars()) throw std::logic_error("substitute_linear: wrong row count");
    std::vector<Polynomial> images;
    images.reserve(rows.size());
    for (const auto& row : rows) {
        const Field* f = row.empty() ? field_ : row[0].field();
        std::vector<Term> ts;
        for (unsigned j = 0; j < row.size(); ++j)
            if (!row[j].is_zero()) ts.push_back({Monomial::variable(ord.nvars(), j), row[j]});
        images.push_back(Polynomial::from_terms(f, ord, std::move(ts)));
    }
    return substitute(images);
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != nvars()) throw std::logic_error("evaluate: wrong point size");
    const Field* f = point.empty() ? field_ : point[0].field();
    std::vector<std::vector<Scalar>> pows(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) pows[i].push_back(f->one());
    auto power = [&](unsigned i, std::uint32_t e) -> const Scalar& {
        while (pows[i].size() <= e) pows[i].push_back(pows[i].back() * point[i]);
        return pows[i][e];
    };
    Scalar acc = f->zero();
    for (const auto& t : terms_) {
        Scalar v = lift(t.coef, f);
        for (unsigned i = 0; i < nvars(); ++i)
            if (t.mono[i] > 0) v *= power(i, t.mono[i]);
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::derivative(unsigned var) const {
    Polynomial r(field_, order_);
    for (const auto& t : terms_) {
        if (t.mono[var] == 0) continue;
        Monomial m = t.mono;
        std::uint32_t e = m[var];
        m.set(var, e - 1);
        Scalar c = t.coef * field_->from_int(static_cast<long>(e));
        if (!c.is_zero()) r.terms_.push_back({std::move(m), std::move(c)});
    }
    // Dropping one exponent uniformly preserves relative degrevlex/lex order
    // only within equal remaining monomials; re-sort to stay canonical.
    std::vector<Term> ts = std::move(r.terms_);
    return from_terms(field_, order_, std::move(ts));
}

Polynomial Polynomial::component(unsigned d) const {
    Polynomial r(field_, order_);
    for (const auto& t : terms_)
        if (t.mono.deg() == d) r.terms_.push_back(t);
    return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        std::string cs = t.coef.to_string();
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            first = false;
            if (negative) {
                out += "-";
                cs = cs.substr(1);
            }
        } else {
            if (negative) {
                out += " - ";
                cs = cs.substr(1);
            } else {
                out += " + ";
            }
        }
        bool needs_parens = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        if (needs_parens) cs = "(" + cs + ")";
        if (t.mono.is_one()) {
            out += cs;
        } else if (cs == "1" && !needs_parens) {
            out += t.mono.to_string(names);
        } else {
            out += cs + "*" + t.mono.to_string(names);
        }
    }
    return out;
}

std::vector<std::string> default_names(unsigned nvars) {
    static const char* classic[] = {"x", "y", "z", "w", "t", "u", "v", "s"};
    std::vector<std::string> names;
    if (nvars <= 8) {
        for (unsigned i = 0; i < nvars; ++i) names.push_back(classic[i]);
    } else {
        for (unsigned i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    }
    return names;
}

} // namespace qgb
