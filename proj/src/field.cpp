#include "qgb/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

#include "qgb/error.hpp"

namespace qgb {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMaxPrime = (u64(1) << 31);

u64 addm(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}

u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invm(u64 a, u64 p) {
    a %= p;
    if (a == 0) throw std::logic_error("division by zero in prime field");
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p), nr = static_cast<long long>(a);
    while (nr != 0) {
        long long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw std::logic_error("modulus not prime in inversion");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<u64>(t);
}

bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powm(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulm(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// --- dense univariate arithmetic over F_p, little-endian, used only for the
// --- canonical modulus search and extension-field element inversion.

using PolyP = std::vector<u64>;

void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PolyP& a) { return static_cast<int>(a.size()) - 1; }

PolyP pmul(const PolyP& a, const PolyP& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PolyP c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = addm(c[i + j], mulm(a[i], b[j], p), p);
    }
    trim(c);
    return c;
}

// Remainder of a by b (b nonzero, any leading coefficient).
PolyP pmod(PolyP a, const PolyP& b, u64 p) {
    trim(a);
    u64 lcinv = invm(b.back(), p);
    while (pdeg(a) >= pdeg(b)) {
        u64 c = mulm(a.back(), lcinv, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = subm(a[shift + j], mulm(c, b[j], p), p);
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

PolyP psub(PolyP a, const PolyP& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = subm(a[i], b[i], p);
    trim(a);
    return a;
}

PolyP pgcd(PolyP a, PolyP b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyP r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        u64 inv = invm(a.back(), p);
        for (u64& c : a) c = mulm(c, inv, p);
    }
    return a;
}

PolyP ppowm(PolyP base, u64 e, const PolyP& mod, u64 p) {
    PolyP r{1};
    base = pmod(std::move(base), mod, p);
    while (e) {
        if (e & 1) r = pmod(pmul(r, base, p), mod, p);
        base = pmod(pmul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}

// Rabin's test: f monic of degree k is irreducible over F_p iff
// x^(p^k) == x (mod f) and gcd(x^(p^(k/q)) - x, f) = 1 for each prime q | k.
bool irreducible(const PolyP& f, u64 p) {
    int k = pdeg(f);
    if (k <= 0) return false;
    if (k == 1) return true;
    // Frobenius iterates: x^(p^j) mod f for j = 1..k.
    std::vector<PolyP> frob(static_cast<std::size_t>(k) + 1);
    frob[0] = PolyP{0, 1};
    for (int j = 1; j <= k; ++j) frob[j] = ppowm(frob[j - 1], p, f, p);
    PolyP x{0, 1};
    if (!psub(frob[k], x, p).empty()) return false;
    for (int q : {2, 3, 5}) {
        if (k % q != 0) continue;
        PolyP h = psub(frob[k / q], x, p);
        PolyP g = pgcd(f, h, p);
        if (pdeg(g) != 0) return false;
    }
    return true;
}

// First monic irreducible x^k + c_{k-1}x^{k-1} + ... + c_0 in the numeric
// order of the digit string (c_{k-1}, ..., c_0).
PolyP canonical_modulus(u64 p, unsigned k) {
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(p), k);
    for (mpz_class m = 0; m < count; ++m) {
        PolyP f(k + 1, 0);
        f[k] = 1;
        mpz_class rest = m;
        for (unsigned i = 0; i < k; ++i) {
            mpz_class digit = rest % static_cast<unsigned long>(p);
            f[i] = digit.get_ui();
            rest /= static_cast<unsigned long>(p);
        }
        if (irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible modulus found");
}

std::vector<u64> ext_mul(const std::vector<u64>& a, const std::vector<u64>& b,
                         const std::vector<u64>& f, u64 p) {
    std::size_t k = a.size();
    std::vector<u64> c(2 * k - 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j)
            c[i + j] = addm(c[i + j], mulm(a[i], b[j], p), p);
    }
    for (std::size_t i = 2 * k - 2; i >= k; --i) {
        u64 top = c[i];
        if (top != 0) {
            for (std::size_t j = 0; j < k; ++j)
                c[i - k + j] = subm(c[i - k + j], mulm(top, f[j], p), p);
        }
        c[i] = 0;
    }
    c.resize(k);
    return c;
}

std::vector<u64> ext_inv(const std::vector<u64>& a, const std::vector<u64>& f, u64 p) {
    // Extended Euclid in F_p[x]: s*a + t*f = gcd.
    PolyP r0(f), r1(a);
    trim(r0);
    trim(r1);
    if (r1.empty()) throw std::logic_error("division by zero in extension field");
    PolyP s0{}, s1{1}; // coefficients of `a` in each remainder
    while (!r1.empty()) {
        // Quotient of r0 by r1.
        PolyP q;
        {
            PolyP rem = r0;
            u64 lcinv = invm(r1.back(), p);
            q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, 0);
            while (pdeg(rem) >= pdeg(r1)) {
                u64 c = mulm(rem.back(), lcinv, p);
                std::size_t shift = rem.size() - r1.size();
                q[shift] = c;
                for (std::size_t j = 0; j < r1.size(); ++j)
                    rem[shift + j] = subm(rem[shift + j], mulm(c, r1[j], p), p);
                trim(rem);
                if (rem.empty()) break;
            }
            r0 = std::move(rem);
        }
        std::swap(r0, r1);
        PolyP qs = pmul(q, s1, p);
        PolyP ns = psub(std::move(s0), qs, p);
        s0 = std::move(s1);
        s1 = std::move(ns);
    }
    // After the loop r0 holds the gcd and s0 is its Bezout coefficient
    // (each swap pairs r_i with s_i).
    if (pdeg(r0) != 0) throw std::logic_error("non-invertible extension element");
    u64 inv = invm(r0[0], p);
    for (u64& c : s0) c = mulm(c, inv, p);
    s0.resize(f.size() - 1, 0);
    return s0;
}

} // namespace

// ---------------------------------------------------------------------------
// Field

Field::Field(FieldKind kind, u64 p, unsigned k) : kind_(kind), p_(p), k_(k) {
    if (kind_ == FieldKind::Rationals) {
        order_ = 0;
        return;
    }
    mpz_ui_pow_ui(order_.get_mpz_t(), static_cast<unsigned long>(p_), k_);
    if (kind_ == FieldKind::Extension) modulus_ = canonical_modulus(p_, k_);
}

const Field* rationals() {
    static const Field f(FieldKind::Rationals, 0, 1);
    return &f;
}

namespace {
std::mutex registry_mutex;
std::map<std::pair<u64, unsigned>, std::unique_ptr<Field>>& registry() {
    static std::map<std::pair<u64, unsigned>, std::unique_ptr<Field>> r;
    return r;
}

void check_prime(u64 p) {
    if (p == 2 || p == 3)
        throw HypothesisError("characteristic 2 and 3 are not supported (need 1/2 and distinct cube roots)");
    if (p > kMaxPrime) throw HypothesisError("prime too large (cap 2^31)");
    if (!miller_rabin(p)) throw HypothesisError("field order must be prime: " + std::to_string(p));
}
} // namespace

const Field* prime_field(u64 p) {
    check_prime(p);
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& r = registry();
    auto key = std::make_pair(p, 1u);
    auto it = r.find(key);
    if (it == r.end())
        it = r.emplace(key, std::unique_ptr<Field>(new Field(FieldKind::Prime, p, 1))).first;
    return it->second.get();
}

const Field* extension_field(u64 p, unsigned k) {
    if (k == 1) return prime_field(p);
    if (k < 2 || k > 6) throw HypothesisError("extension degree must be between 1 and 6");
    check_prime(p);
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& r = registry();
    auto key = std::make_pair(p, k);
    auto it = r.find(key);
    if (it == r.end())
        it = r.emplace(key, std::unique_ptr<Field>(new Field(FieldKind::Extension, p, k))).first;
    return it->second.get();
}

std::string Field::name() const {
    switch (kind_) {
        case FieldKind::Rationals:
            return "QQ";
        case FieldKind::Prime:
            return "F" + std::to_string(p_);
        case FieldKind::Extension:
            return "F" + std::to_string(p_) + "^" + std::to_string(k_);
    }
    return "?";
}

Scalar Field::zero() const {
    switch (kind_) {
        case FieldKind::Rationals:
            return Scalar(this, mpq_class(0));
        case FieldKind::Prime:
            return Scalar(this, u64(0));
        case FieldKind::Extension:
            return Scalar(this, std::vector<u64>(k_, 0));
    }
    throw std::logic_error("bad field kind");
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
    switch (kind_) {
        case FieldKind::Rationals:
            return Scalar(this, mpq_class(v));
        case FieldKind::Prime: {
            long long m = static_cast<long long>(v) % static_cast<long long>(p_);
            if (m < 0) m += static_cast<long long>(p_);
            return Scalar(this, static_cast<u64>(m));
        }
        case FieldKind::Extension: {
            std::vector<u64> c(k_, 0);
            long long m = static_cast<long long>(v) % static_cast<long long>(p_);
            if (m < 0) m += static_cast<long long>(p_);
            c[0] = static_cast<u64>(m);
            return Scalar(this, std::move(c));
        }
    }
    throw std::logic_error("bad field kind");
}

Scalar Field::from_mpq(const mpq_class& v) const {
    if (kind_ == FieldKind::Rationals) return Scalar(this, v);
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class pz(static_cast<unsigned long>(p_));
    mpz_class nr = num % pz, dr = den % pz;
    if (nr < 0) nr += pz;
    if (dr < 0) dr += pz;
    u64 n = nr.get_ui(), d = dr.get_ui();
    if (d == 0) throw HypothesisError("denominator divisible by field characteristic");
    u64 r = mulm(n, invm(d, p_), p_);
    if (kind_ == FieldKind::Prime) return Scalar(this, r);
    std::vector<u64> c(k_, 0);
    c[0] = r;
    return Scalar(this, std::move(c));
}

Scalar Field::from_string(const std::string& s) const {
    std::size_t slash = s.find('/');
    auto parse_int = [](const std::string& t) -> mpz_class {
        if (t.empty()) throw ParseError("empty numeric literal");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw ParseError("bad numeric literal: " + t);
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw ParseError("bad numeric literal: " + t);
        return mpz_class(t);
    };
    mpq_class q;
    if (slash == std::string::npos) {
        q = mpq_class(parse_int(s));
    } else {
        mpz_class num = parse_int(s.substr(0, slash));
        mpz_class den = parse_int(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator: " + s);
        q = mpq_class(num, den);
        q.canonicalize();
    }
    return from_mpq(q);
}

Scalar Field::element(const mpz_class& idx) const {
    if (!finite()) throw std::logic_error("element enumeration needs a finite field");
    mpz_class m = idx % order_;
    if (m < 0) m += order_;
    if (kind_ == FieldKind::Prime) {
        mpz_class r = m % static_cast<unsigned long>(p_);
        return Scalar(this, static_cast<u64>(r.get_ui()));
    }
    std::vector<u64> c(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
        mpz_class digit = m % static_cast<unsigned long>(p_);
        c[i] = digit.get_ui();
        m /= static_cast<unsigned long>(p_);
    }
    return Scalar(this, std::move(c));
}

Scalar Field::element(u64 idx) const { return element(mpz_class(static_cast<unsigned long>(idx))); }

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar() : field_(rationals()), v_(mpq_class(0)) {}
Scalar::Scalar(const Field* f, mpq_class v) : field_(f), v_(std::move(v)) {}
Scalar::Scalar(const Field* f, u64 v) : field_(f), v_(v) {}
Scalar::Scalar(const Field* f, std::vector<u64> v) : field_(f), v_(std::move(v)) {}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_) throw std::logic_error("mixed-field scalar arithmetic");
}

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(v_); }
u64 Scalar::residue() const { return std::get<u64>(v_); }
const std::vector<u64>& Scalar::coeffs() const { return std::get<std::vector<u64>>(v_); }

bool Scalar::is_zero() const {
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return rational() == 0;
        case FieldKind::Prime:
            return residue() == 0;
        case FieldKind::Extension:
            for (u64 c : coeffs())
                if (c != 0) return false;
            return true;
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return rational() == 1;
        case FieldKind::Prime:
            return residue() == 1;
        case FieldKind::Extension: {
            const auto& c = coeffs();
            if (c[0] != 1) return false;
            for (std::size_t i = 1; i < c.size(); ++i)
                if (c[i] != 0) return false;
            return true;
        }
    }
    return false;
}

Scalar Scalar::operator-() const {
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return Scalar(field_, mpq_class(-rational()));
        case FieldKind::Prime: {
            u64 p = field_->characteristic();
            return Scalar(field_, residue() == 0 ? 0 : p - residue());
        }
        case FieldKind::Extension: {
            u64 p = field_->characteristic();
            std::vector<u64> c = coeffs();
            for (u64& x : c) x = (x == 0 ? 0 : p - x);
            return Scalar(field_, std::move(c));
        }
    }
    throw std::logic_error("bad field kind");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return Scalar(field_, mpq_class(rational() + o.rational()));
        case FieldKind::Prime:
            return Scalar(field_, addm(residue(), o.residue(), field_->characteristic()));
        case FieldKind::Extension: {
            u64 p = field_->characteristic();
            std::vector<u64> c = coeffs();
            const auto& d = o.coeffs();
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = addm(c[i], d[i], p);
            return Scalar(field_, std::move(c));
        }
    }
    throw std::logic_error("bad field kind");
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return Scalar(field_, mpq_class(rational() - o.rational()));
        case FieldKind::Prime:
            return Scalar(field_, subm(residue(), o.residue(), field_->characteristic()));
        case FieldKind::Extension: {
            u64 p = field_->characteristic();
            std::vector<u64> c = coeffs();
            const auto& d = o.coeffs();
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = subm(c[i], d[i], p);
            return Scalar(field_, std::move(c));
        }
    }
    throw std::logic_error("bad field kind");
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return Scalar(field_, mpq_class(rational() * o.rational()));
        case FieldKind::Prime:
            return Scalar(field_, mulm(residue(), o.residue(), field_->characteristic()));
        case FieldKind::Extension:
            return Scalar(field_, ext_mul(coeffs(), o.coeffs(), field_->modulus(),
                                          field_->characteristic()));
    }
    throw std::logic_error("bad field kind");
}

Scalar Scalar::inverse() const {
    switch (field_->kind()) {
        case FieldKind::Rationals: {
            if (rational() == 0) throw std::logic_error("division by zero in rationals");
            return Scalar(field_, mpq_class(1 / rational()));
        }
        case FieldKind::Prime:
            return Scalar(field_, invm(residue(), field_->characteristic()));
        case FieldKind::Extension:
            return Scalar(field_, ext_inv(coeffs(), field_->modulus(), field_->characteristic()));
    }
    throw std::logic_error("bad field kind");
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(mpz_class(-e));
    Scalar r = field_->one();
    if (e == 0) return r;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = r * r;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
    }
    return r;
}

Scalar Scalar::pow(u64 e) const { return pow(mpz_class(static_cast<unsigned long>(e))); }

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return v_ == o.v_;
}

std::string Scalar::to_string() const {
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return rational().get_str();
        case FieldKind::Prime:
            return std::to_string(residue());
        case FieldKind::Extension: {
            const auto& c = coeffs();
            std::string out;
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] == 0) continue;
                if (!out.empty()) out += "+";
                if (i == 0) {
                    out += std::to_string(c[i]);
                } else {
                    if (c[i] != 1) out += std::to_string(c[i]) + "*";
                    out += "g";
                    if (i > 1) out += "^" + std::to_string(i);
                }
            }
            return out.empty() ? "0" : out;
        }
    }
    return "?";
}

int cmp(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) throw std::logic_error("mixed-field scalar comparison");
    switch (a.field_->kind()) {
        case FieldKind::Rationals:
            return mpq_cmp(a.rational().get_mpq_t(), b.rational().get_mpq_t());
        case FieldKind::Prime: {
            u64 x = a.residue(), y = b.residue();
            return x < y ? -1 : (x > y ? 1 : 0);
        }
        case FieldKind::Extension: {
            const auto& x = a.coeffs();
            const auto& y = b.coeffs();
            for (std::size_t i = x.size(); i-- > 0;) {
                if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
            }
            return 0;
        }
    }
    return 0;
}

std::optional<Scalar> sqrt(const Scalar& a) {
    const Field* F = a.field();
    if (F->kind() == FieldKind::Rationals) {
        const mpq_class& q = a.rational();
        if (q < 0) return std::nullopt;
        mpz_class num = q.get_num(), den = q.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
            return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return F->from_mpq(mpq_class(rn, rd));
    }
    if (a.is_zero()) return a;
    const mpz_class& q = F->order();
    mpz_class half = (q - 1) / 2;
    Scalar legendre = a.pow(half);
    if (!legendre.is_one()) return std::nullopt;
    Scalar r = F->zero();
    if (mpz_class(q % 4) == 3) {
        r = a.pow(mpz_class((q + 1) / 4));
    } else {
        // Tonelli-Shanks.
        mpz_class t = q - 1;
        unsigned s = 0;
        while (mpz_even_p(t.get_mpz_t())) {
            t /= 2;
            ++s;
        }
        Scalar z = F->zero();
        for (mpz_class idx = 1;; ++idx) {
            z = F->element(idx);
            if (z.is_zero()) continue;
            Scalar l = z.pow(half);
            if (!l.is_one()) break;
        }
        unsigned m = s;
        Scalar c = z.pow(t);
        Scalar u = a.pow(t);
        r = a.pow(mpz_class((t + 1) / 2));
        while (!u.is_one()) {
            unsigned i = 0;
            Scalar v = u;
            while (!v.is_one()) {
                v = v * v;
                ++i;
                if (i >= m) throw std::logic_error("Tonelli-Shanks drift");
            }
            Scalar b = c;
            for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b;
            m = i;
            c = b * b;
            u = u * c;
            r = r * b;
        }
    }
    if (r * r != a) throw VerificationError("square root self-check failed");
    return r;
}

Scalar lift(const Scalar& a, const Field* target) {
    const Field* src = a.field();
    if (src == target) return a;
    if (src->kind() == FieldKind::Prime && target->kind() == FieldKind::Extension &&
        src->characteristic() == target->characteristic()) {
        std::vector<u64> c(target->degree(), 0);
        c[0] = a.residue();
        return Scalar(target, std::move(c));
    }
    if (src->kind() == FieldKind::Rationals && target->finite()) return target->from_mpq(a.rational());
    throw std::logic_error("unsupported scalar lift " + src->name() + " -> " + target->name());
}

} // namespace qgb
