#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgb/univariate.hpp"

using namespace qgb;

namespace {

Univariate U(const Field* f, const std::vector<long>& coeffs) {
    std::vector<Scalar> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.push_back(f->from_int(v));
    return Univariate(f, std::move(c));
}

} // namespace

TEST_CASE("basic arithmetic and degrees") {
    const Field* q = rationals();
    Univariate f = U(q, {1, 2, 1});  // (x+1)^2
    Univariate g = U(q, {-1, 1});    // x - 1
    CHECK(f.deg() == 2);
    CHECK(Univariate(q).deg() == -1);
    CHECK((f - f).is_zero());
    CHECK((f * g).deg() == 3);
    CHECK(f * g == U(q, {-1, -1, 1, 1}));
    CHECK(Univariate::x(q) * Univariate::x(q) == U(q, {0, 0, 1}));
    CHECK(f.evaluate(q->from_int(2)).to_string() == "9");
}

TEST_CASE("division with remainder") {
    const Field* q = rationals();
    Univariate f = U(q, {-1, 0, 0, 1}); // x^3 - 1
    Univariate d = U(q, {-1, 1});       // x - 1
    auto [quo, rem] = f.divmod(d);
    CHECK(rem.is_zero());
    CHECK(quo == U(q, {1, 1, 1}));
    CHECK(quo * d + rem == f);

    Univariate g = U(q, {1, 1, 1, 1});
    auto [q2, r2] = g.divmod(U(q, {0, 0, 1}));
    CHECK(q2 * U(q, {0, 0, 1}) + r2 == g);
    CHECK(r2.deg() < 2);
}

TEST_CASE("gcd is monic and correct") {
    const Field* q = rationals();
    Univariate a = U(q, {-1, 0, 1}) * U(q, {2, 1});  // (x^2-1)(x+2)
    Univariate b = U(q, {1, 1}) * U(q, {2, 1}) * U(q, {0, 0, 3});
    Univariate g = gcd(a, b);
    CHECK(g == U(q, {2, 3, 1})); // (x+1)(x+2), monic
    CHECK(gcd(a, Univariate(q)) == a.monic());
    CHECK(gcd(Univariate(q), Univariate(q)).is_zero());
}

TEST_CASE("squarefree part over Q") {
    const Field* q = rationals();
    // (x-1)^2 (x+2) -> (x-1)(x+2)
    Univariate f = U(q, {-1, 1}) * U(q, {-1, 1}) * U(q, {2, 1});
    CHECK(squarefree_part(f) == U(q, {-2, 1, 1}));
    // already squarefree stays put (made monic)
    Univariate g = U(q, {2, 0, 2});
    CHECK(squarefree_part(g) == U(q, {1, 0, 1}));
}

TEST_CASE("squarefree part in small characteristic handles wild parts") {
    const Field* f5 = prime_field(5);
    // (x^2+1)^5 = x^10 + 1 over F_5; derivative vanishes identically
    Univariate base = U(f5, {1, 0, 1});
    Univariate pow = Univariate::constant(f5, f5->one());
    for (int i = 0; i < 5; ++i) pow = pow * base;
    CHECK(pow == U(f5, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(squarefree_part(pow) == base);
    // mixed tame/wild: x^5 * (x-1) -> x(x-1)
    Univariate mixed = U(f5, {0, 0, 0, 0, 0, 1}) * U(f5, {-1, 1});
    CHECK(squarefree_part(mixed) == U(f5, {0, -1, 1}).monic());
}

TEST_CASE("roots over finite fields") {
    const Field* f5 = prime_field(5);
    // x^2 + 1 = (x-2)(x-3) over F_5
    auto r = roots(U(f5, {1, 0, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0].residue() == 2);
    CHECK(r[1].residue() == 3);
    // x^2 - 2 has no roots over F_5
    CHECK(roots(U(f5, {-2, 0, 1})).empty());
    // multiplicity collapses: (x-1)^3 has the single root 1
    const Field* f101 = prime_field(101);
    Univariate c = U(f101, {-1, 1});
    auto r3 = roots(c * c * c);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].residue() == 1);
}

TEST_CASE("roots in an extension field") {
    // x^2 - 3 splits in F_25 (3 is a non-residue mod 5)
    const Field* f25 = extension_field(5, 2);
    auto r = roots(U(f25, {-3, 0, 1}));
    REQUIRE(r.size() == 2);
    for (const auto& s : r) {
        Scalar sq = s * s;
        CHECK(sq == f25->from_int(3));
    }
    CHECK(r[0] == -r[1]);
}

TEST_CASE("rational roots") {
    const Field* q = rationals();
    // 2x^2 - x - 1 = (2x + 1)(x - 1): roots 1 and -1/2
    auto r = roots(U(q, {-1, -1, 2}));
    REQUIRE(r.size() == 2);
    CHECK(r[0].to_string() == "-1/2");
    CHECK(r[1].to_string() == "1");
    // x^2 + 1 has no rational roots
    CHECK(roots(U(q, {1, 0, 1})).empty());
    // x^3 - 6x^2 + 11x - 6 = (x-1)(x-2)(x-3)
    auto r3 = roots(U(q, {-6, 11, -6, 1}));
    REQUIRE(r3.size() == 3);
    CHECK(r3[0].to_string() == "1");
    CHECK(r3[2].to_string() == "3");
    // zero constant term: x^2 - x has roots 0 and 1
    auto r0 = roots(U(q, {0, -1, 1}));
    REQUIRE(r0.size() == 2);
    CHECK(r0[0].is_zero());
}

TEST_CASE("powmod matches naive power") {
    const Field* f101 = prime_field(101);
    Univariate m = U(f101, {1, 1, 1}); // x^2 + x + 1
    Univariate b = U(f101, {2, 3});
    Univariate naive = Univariate::constant(f101, f101->one());
    for (int i = 0; i < 13; ++i) naive = (naive * b) % m;
    CHECK(powmod(b, mpz_class(13), m) == naive);
    CHECK(powmod(b, mpz_class(0), m) == Univariate::constant(f101, f101->one()));
}

TEST_CASE("derivative and evaluation interplay") {
    const Field* q = rationals();
    Univariate f = U(q, {5, -3, 0, 2}); // 2x^3 - 3x + 5
    CHECK(f.derivative() == U(q, {-3, 0, 6}));
    CHECK(f.derivative().evaluate(q->from_int(1)).to_string() == "3");
    CHECK(Univariate::constant(q, q->from_int(7)).derivative().is_zero());
}

TEST_CASE("lift and printing") {
    const Field* q = rationals();
    Univariate f = U(q, {-1, 0, 1});
    const Field* f7 = prime_field(7);
    Univariate g = f.lift_field(f7);
    CHECK(g.field() == f7);
    CHECK(g.coeff(0).residue() == 6);
    CHECK(f.to_string() == "x^2 - 1");
    CHECK(Univariate(q).to_string() == "0");
}
