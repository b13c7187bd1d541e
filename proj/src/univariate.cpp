#include "qgb/univariate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qgb/error.hpp"

namespace qgb {

Univariate::Univariate(const Field* f, std::vector<Scalar> coeffs)
    : field_(f), c_(std::move(coeffs)) {
    trim();
}

void Univariate::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Univariate Univariate::constant(const Field* f, const Scalar& c) {
    Univariate u(f);
    if (!c.is_zero()) u.c_.push_back(c);
    return u;
}

Univariate Univariate::x(const Field* f) {
    Univariate u(f);
    u.c_ = {f->zero(), f->one()};
    return u;
}

Scalar Univariate::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : field_->zero();
}

Scalar Univariate::lc() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Univariate Univariate::operator-() const {
    Univariate r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Univariate Univariate::operator+(const Univariate& o) const {
    Univariate r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

Univariate Univariate::operator-(const Univariate& o) const { return *this + (-o); }

Univariate Univariate::operator*(const Univariate& o) const {
    if (c_.empty() || o.c_.empty()) return Univariate(field_);
    Univariate r(field_);
    r.c_.assign(c_.size() + o.c_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Univariate Univariate::operator*(const Scalar& s) const {
    if (s.is_zero()) return Univariate(field_);
    Univariate r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

Univariate Univariate::monic() const {
    if (c_.empty()) return *this;
    return *this * lc().inverse();
}

std::pair<Univariate, Univariate> Univariate::divmod(const Univariate& d) const {
    if (d.is_zero()) throw std::logic_error("univariate division by zero");
    Univariate rem = *this;
    Univariate quot(field_);
    if (rem.deg() >= d.deg()) quot.c_.assign(rem.c_.size() - d.c_.size() + 1, field_->zero());
    Scalar lcinv = d.lc().inverse();
    while (!rem.is_zero() && rem.deg() >= d.deg()) {
        std::size_t shift = rem.c_.size() - d.c_.size();
        Scalar q = rem.lc() * lcinv;
        quot.c_[shift] = q;
        for (std::size_t i = 0; i < d.c_.size(); ++i) rem.c_[shift + i] -= q * d.c_[i];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

Univariate Univariate::derivative() const {
    Univariate r(field_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * field_->from_int(static_cast<long>(i)));
    r.trim();
    return r;
}

Scalar Univariate::evaluate(const Scalar& x) const {
    Scalar acc = field_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Univariate Univariate::lift_field(const Field* target) const {
    std::vector<Scalar> c;
    c.reserve(c_.size());
    for (const auto& s : c_) c.push_back(lift(s, target));
    return Univariate(target, std::move(c));
}

std::string Univariate::to_string(const std::string& name) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].to_string();
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            first = false;
            if (negative) {
                out += "-";
                cs = cs.substr(1);
            }
        } else if (negative) {
            out += " - ";
            cs = cs.substr(1);
        } else {
            out += " + ";
        }
        bool needs_parens =
            cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        if (needs_parens) cs = "(" + cs + ")";
        if (i == 0) {
            out += cs;
        } else {
            if (cs == "1" && !needs_parens) {
                out += name;
            } else {
                out += cs + "*" + name;
            }
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Univariate gcd(const Univariate& a, const Univariate& b) {
    Univariate x = a, y = b;
    while (!y.is_zero()) {
        Univariate r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Univariate powmod(const Univariate& base, const mpz_class& e, const Univariate& m) {
    Univariate r = Univariate::constant(base.field(), base.field()->one());
    Univariate b = base % m;
    if (e == 0) return r % m;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
    }
    return r;
}

namespace {

// p-th root of f when f' == 0, i.e. f = g(x^p) with g recovered by taking
// p-th roots of the surviving coefficients (c -> c^(p^(k-1)) in F_{p^k}).
Univariate frobenius_deflate(const Univariate& f) {
    const Field* F = f.field();
    std::uint64_t p = F->characteristic();
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), F->degree() - 1);
    std::vector<Scalar> c;
    for (std::size_t i = 0; i * p <= static_cast<std::size_t>(f.deg()); ++i)
        c.push_back(f.coeff(i * p).pow(e));
    return Univariate(F, std::move(c));
}

} // namespace

Univariate squarefree_part(const Univariate& f) {
    const Field* F = f.field();
    if (f.deg() <= 0) return Univariate::constant(F, F->one());
    Univariate g = f.monic();
    Univariate gp = g.derivative();
    if (F->characteristic() == 0) {
        if (gp.is_zero()) throw std::logic_error("zero derivative in characteristic 0");
        return (g / gcd(g, gp)).monic();
    }
    if (gp.is_zero()) return squarefree_part(frobenius_deflate(g));
    Univariate d = gcd(g, gp);
    Univariate w = (g / d).monic(); // each tame prime exactly once
    // Strip all tame primes out of d; what survives is the wild p-th-power part.
    Univariate y = d;
    while (true) {
        Univariate c = gcd(y, w);
        if (c.deg() <= 0) break;
        y = (y / c).monic();
    }
    if (y.deg() <= 0) return w;
    Univariate wild = squarefree_part(frobenius_deflate(y));
    return (w * wild).monic();
}

namespace {

// Split a monic product of distinct linear factors into its roots, using a
// deterministic sweep of shifts delta = element(0), element(1), ...
void split_linear(const Univariate& g, std::vector<Scalar>& out) {
    const Field* F = g.field();
    if (g.deg() <= 0) return;
    if (g.deg() == 1) {
        out.push_back(-(g.coeff(0) / g.coeff(1)));
        return;
    }
    mpz_class half = (F->order() - 1) / 2;
    for (mpz_class idx = 0;; ++idx) {
        if (idx >= F->order()) throw std::logic_error("root splitting failed to separate");
        Scalar delta = F->element(idx);
        Univariate shift(F, {delta, F->one()}); // x + delta
        Univariate lin = gcd(g, shift);
        if (lin.deg() == 1) {
            split_linear(lin, out);
            split_linear((g / lin).monic(), out);
            return;
        }
        Univariate s = powmod(shift, half, g);
        Univariate a = gcd(g, s - Univariate::constant(F, F->one()));
        if (a.deg() > 0 && a.deg() < g.deg()) {
            split_linear(a, out);
            split_linear((g / a).monic(), out);
            return;
        }
    }
}

std::vector<mpz_class> divisors_capped(const mpz_class& n0, std::size_t cap) {
    mpz_class n = abs(n0);
    std::vector<std::pair<mpz_class, unsigned>> fact;
    mpz_class d = 2;
    mpz_class m = n;
    while (d * d <= m) {
        if (m % d == 0) {
            unsigned e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            fact.emplace_back(d, e);
        }
        d += 1;
        if (d > 1000000 && m > 1) {
            // Give up on factoring huge tails exactly.
            throw InconclusiveError("rational root search: coefficient too large to factor");
        }
    }
    if (m > 1) fact.emplace_back(m, 1);
    std::vector<mpz_class> divs{1};
    for (auto& [q, e] : fact) {
        std::size_t base = divs.size();
        mpz_class qp = 1;
        for (unsigned i = 1; i <= e; ++i) {
            qp *= q;
            for (std::size_t j = 0; j < base; ++j) {
                divs.push_back(divs[j] * qp);
                if (divs.size() > cap)
                    throw InconclusiveError("rational root search: too many divisors");
            }
        }
    }
    return divs;
}

std::vector<Scalar> rational_roots(const Univariate& f) {
    const Field* F = f.field();
    // Clear denominators to get integer coefficients.
    mpz_class lcm_den = 1;
    for (const auto& c : f.coeffs())
        lcm_den = lcm(lcm_den, c.rational().get_den());
    std::vector<mpz_class> ic;
    for (const auto& c : f.coeffs()) {
        mpq_class v = c.rational() * mpq_class(lcm_den);
        ic.push_back(v.get_num());
    }
    // Strip powers of x (root 0).
    std::vector<Scalar> out;
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) out.push_back(F->zero());
    if (low + 1 >= ic.size()) {
        if (low + 1 == ic.size()) return out; // constant or pure power of x
        return out;
    }
    mpz_class a0 = ic[low], an = ic.back();
    auto nums = divisors_capped(a0, 4096);
    auto dens = divisors_capped(an, 4096);
    std::set<Scalar, ScalarLess> found;
    for (const auto& u : nums) {
        for (const auto& v : dens) {
            for (int sign = 1; sign >= -1; sign -= 2) {
                mpq_class cand(sign * u, v);
                cand.canonicalize();
                Scalar r = F->from_mpq(cand);
                if (f.evaluate(r).is_zero()) found.insert(r);
            }
        }
    }
    for (const auto& r : found) out.push_back(r);
    std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return cmp(a, b) < 0; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::vector<Scalar> roots(const Univariate& f) {
    const Field* F = f.field();
    if (f.is_zero()) throw std::logic_error("roots of the zero polynomial");
    if (f.deg() == 0) return {};
    if (!F->finite()) return rational_roots(f);
    // g = gcd(f, x^q - x) is monic with exactly the distinct roots of f in F_q.
    Univariate xq = powmod(Univariate::x(F), F->order(), f.monic());
    Univariate g = gcd(f, xq - Univariate::x(F));
    std::vector<Scalar> out;
    split_linear(g, out);
    std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return cmp(a, b) < 0; });
    return out;
}

} // namespace qgb
