#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgb/ideal_io.hpp"
#include "qgb/polynomial.hpp"

using namespace qgb;

namespace {

const std::vector<std::string> xyz = {"x", "y", "z"};

Polynomial P(const std::string& s, const Field* f = rationals(),
             const std::vector<std::string>& names = xyz) {
    const TermOrder ord(OrderKind::DegRevLex, static_cast<unsigned>(names.size()));
    return parse_polynomial(s, f, names, ord);
}

} // namespace

TEST_CASE("monomial operations") {
    Monomial xy({1, 1, 0}), x2({2, 0, 0}), z({0, 0, 1});
    CHECK(xy.deg() == 2);
    CHECK((xy * z).exponents() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(Monomial::variable(3, 0).divides(x2));
    CHECK(!x2.divides(xy));
    CHECK(Monomial::lcm(xy, x2).exponents() == std::vector<std::uint32_t>{2, 1, 0});
    CHECK(x2.coprime(z));
    CHECK(!x2.coprime(xy));
    CHECK(x2.divide(Monomial::variable(3, 0)).exponents() ==
          std::vector<std::uint32_t>{1, 0, 0});
}

TEST_CASE("degrevlex order on quadrics with x > y > z") {
    const TermOrder ord(OrderKind::DegRevLex, 3);
    const auto quad = monomials_of_degree(3, 2, ord);
    std::vector<std::string> got;
    for (const auto& m : quad) got.push_back(m.to_string(xyz));
    const std::vector<std::string> want = {"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"};
    CHECK(got == want);
    // total degree dominates
    CHECK(ord.compare(Monomial({0, 0, 3}), Monomial({2, 0, 0})) > 0);
}

TEST_CASE("degrevlex leading term of y^2 - x*z is y^2") {
    // pinned on purpose: y^2 beats x*z because the z-exponent decides
    Polynomial f = P("y^2 - x*z");
    CHECK(f.leading_monomial().to_string(xyz) == "y^2");
    CHECK(f.leading().coef.is_one());
}

TEST_CASE("lex order") {
    const TermOrder ord(OrderKind::Lex, 3);
    const auto quad = monomials_of_degree(3, 2, ord);
    std::vector<std::string> got;
    for (const auto& m : quad) got.push_back(m.to_string(xyz));
    const std::vector<std::string> want = {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"};
    CHECK(got == want);
    // lex ignores total degree: x > y^5
    CHECK(ord.compare(Monomial({1, 0, 0}), Monomial({0, 5, 0})) > 0);
}

TEST_CASE("custom priority permutation") {
    // priority z > x > y
    const TermOrder ord(OrderKind::DegRevLex, {2, 0, 1});
    // under this order z^2 beats x*y (and everything else quadratic)
    CHECK(ord.compare(Monomial({0, 0, 2}), Monomial({1, 1, 0})) > 0);
    Polynomial f = P("z^2 + x*y").reorder(ord);
    CHECK(f.leading_monomial().to_string(xyz) == "z^2");
}

TEST_CASE("arithmetic identities") {
    Polynomial f = P("x^2 - 2*x*y + 1"), g = P("x + y"), h = P("y^2 - z");
    CHECK((f + g) - g == f);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    CHECK((f - f).is_zero());
    CHECK(P("x*y + x*y") == P("2*x*y"));
    CHECK(P("x*y - x*y").is_zero());
    CHECK(f.deg() == 2);
    CHECK(!f.homogeneous());
    CHECK(P("x^2 + y*z").homogeneous());
}

TEST_CASE("coefficient access and components") {
    Polynomial f = P("3*x^2*y - x + 5");
    CHECK(f.coeff(Monomial({2, 1, 0})).to_string() == "3");
    CHECK(f.coeff(Monomial({0, 1, 0})).is_zero());
    CHECK(f.component(1) == P("0 - x")); // degree-1 part
    CHECK(f.component(3) == P("3*x^2*y"));
    CHECK(f.component(0) == P("5"));
}

TEST_CASE("substitution and evaluation") {
    Polynomial f = P("x^2 + y*z");
    const Field* q = rationals();
    std::vector<Scalar> pt = {q->from_int(2), q->from_int(3), q->from_int(-1)};
    CHECK(f.evaluate(pt).to_string() == "1");

    // full substitution x -> y+z, y -> y, z -> z
    std::vector<Polynomial> images = {P("y + z"), P("y"), P("z")};
    CHECK(f.substitute(images) == P("y^2 + 2*y*z + z^2 + y*z"));
}

TEST_CASE("linear change of variables uses the inverse-transpose convention") {
    // new variables u1 = x + y, u2 = y; then x -> u1 - u2, y -> u2 and
    // (x + y)^2 becomes u1^2.
    const std::vector<std::string> uv = {"u1", "u2"};
    const Field* q = rationals();
    const TermOrder ord2(OrderKind::DegRevLex, 2);
    Polynomial f = parse_polynomial("x^2 + 2*x*y + y^2", q, {"x", "y"}, ord2);
    std::vector<std::vector<Scalar>> rows = {
        {q->one(), q->from_int(-1)}, // x -> u1 - u2
        {q->zero(), q->one()},       // y -> u2
    };
    Polynomial g = f.substitute_linear(rows, ord2);
    CHECK(g == parse_polynomial("u1^2", q, uv, ord2));
}

TEST_CASE("derivative") {
    Polynomial f = P("x^3 + 3*x*y^2 - z");
    CHECK(f.derivative(0) == P("3*x^2 + 3*y^2"));
    CHECK(f.derivative(1) == P("6*x*y"));
    CHECK(f.derivative(2) == P("0 - 1"));
    // char p: d/dx x^5 = 0 over F_5
    const Field* f5 = prime_field(5);
    Polynomial g = P("x^5 + x", f5);
    CHECK(g.derivative(0) == P("1", f5));
}

TEST_CASE("printing round-trips through the parser") {
    for (const char* s : {"x^2 - 2*x*y + 1", "3*x^2*y - x + 5", "x*y*z",
                          "0 - x - y - z"}) {
        Polynomial f = P(s);
        CHECK(P(f.to_string(xyz)) == f);
    }
    CHECK(P("x - x").to_string(xyz) == "0");
    const Field* f101 = prime_field(101);
    Polynomial g = P("x^2 - y*z", f101);
    CHECK(P(g.to_string(xyz), f101) == g);
}

TEST_CASE("reorder and lift preserve content") {
    Polynomial f = P("x^2 + x*z - y^2");
    const TermOrder lex(OrderKind::Lex, 3);
    Polynomial g = f.reorder(lex);
    CHECK(g.leading_monomial().to_string(xyz) == "x^2");
    CHECK(g.reorder(f.order()) == f);

    const Field* f101 = prime_field(101);
    Polynomial h = f.lift_field(f101);
    CHECK(h.field() == f101);
    CHECK(h == P("x^2 + x*z - y^2", f101));
}

TEST_CASE("parser errors") {
    CHECK_THROWS_AS(P("x +"), ParseError);
    CHECK_THROWS_AS(P("q"), ParseError);
    CHECK_THROWS_AS(P("x^"), ParseError);
    CHECK_THROWS_AS(P("x ^ 1/2"), ParseError);
    CHECK_THROWS_AS(P("* x"), ParseError);
    CHECK_THROWS_AS(P("x - - y"), ParseError);
    CHECK_THROWS_AS(P("x % y"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
}

TEST_CASE("optional star and implicit products parse") {
    CHECK(P("3x^2y") == P("3*x^2*y"));
    CHECK(P("2 x y") == P("2*x*y"));
    CHECK(P("x y z") == P("x*y*z"));
}
