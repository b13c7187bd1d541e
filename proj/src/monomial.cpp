#include "qgb/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qgb {

Monomial::Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)), deg_(0) {
    for (auto v : e_) deg_ += v;
}

Monomial Monomial::variable(unsigned nvars, unsigned i) {
    Monomial m(nvars);
    m.set(i, 1);
    return m;
}

void Monomial::set(unsigned i, std::uint32_t v) {
    deg_ = deg_ - e_[i] + v;
    e_[i] = v;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (unsigned i = 0; i < nvars(); ++i) r.e_[i] += o.e_[i];
    r.deg_ += o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (unsigned i = 0; i < nvars(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    Monomial r = *this;
    for (unsigned i = 0; i < nvars(); ++i) {
        if (o.e_[i] > e_[i]) throw std::logic_error("monomial division underflow");
        r.e_[i] -= o.e_[i];
    }
    r.deg_ -= o.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (unsigned i = 0; i < a.nvars(); ++i) r.set(i, std::max(a.e_[i], b.e_[i]));
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (unsigned i = 0; i < nvars(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    std::string out;
    for (unsigned i = 0; i < nvars(); ++i) {
        if (e_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
    }
    return out.empty() ? "1" : out;
}

TermOrder::TermOrder(OrderKind kind, unsigned nvars) : kind_(kind), priority_(nvars) {
    std::iota(priority_.begin(), priority_.end(), 0u);
}

TermOrder::TermOrder(OrderKind kind, std::vector<unsigned> priority)
    : kind_(kind), priority_(std::move(priority)) {
    std::vector<bool> seen(priority_.size(), false);
    for (unsigned v : priority_) {
        if (v >= priority_.size() || seen[v]) throw std::logic_error("invalid priority permutation");
        seen[v] = true;
    }
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind_ == OrderKind::DegRevLex) {
        if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
        for (std::size_t j = priority_.size(); j-- > 0;) {
            unsigned v = priority_[j];
            if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
        }
        return 0;
    }
    for (unsigned v : priority_) {
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
}

namespace {
void enumerate(unsigned nvars, unsigned pos, unsigned remaining, std::vector<std::uint32_t>& cur,
               std::vector<Monomial>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        cur[pos] = e;
        enumerate(nvars, pos + 1, remaining - e, cur, out);
    }
    cur[pos] = 0;
}
} // namespace

std::vector<Monomial> monomials_of_degree(unsigned nvars, unsigned d, const TermOrder& ord) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back(0u);
        return out;
    }
    std::vector<std::uint32_t> cur(nvars, 0);
    enumerate(nvars, 0, d, cur, out);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
    return out;
}

} // namespace qgb
