#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgb/groebner.hpp"
#include "qgb/ideal_io.hpp"

using namespace qgb;

namespace {

const std::vector<std::string> xyz = {"x", "y", "z"};

std::vector<Polynomial> gens(const std::vector<std::string>& ss,
                             const Field* f = rationals(),
                             const std::vector<std::string>& names = xyz) {
    const TermOrder ord(OrderKind::DegRevLex, static_cast<unsigned>(names.size()));
    std::vector<Polynomial> out;
    for (const auto& s : ss) out.push_back(parse_polynomial(s, f, names, ord));
    return out;
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps,
                                 const std::vector<std::string>& names = xyz) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string(names));
    return out;
}

} // namespace

TEST_CASE("normal form reduction") {
    auto g = gens({"x^2", "y^2"}, rationals(), {"x", "y"});
    const TermOrder ord(OrderKind::DegRevLex, 2);
    Polynomial f = parse_polynomial("x^2*y + y^3 + x", rationals(), {"x", "y"}, ord);
    Polynomial nf = reduce(f, g);
    CHECK(nf == parse_polynomial("x", rationals(), {"x", "y"}, ord));
    // idempotent
    CHECK(reduce(nf, g) == nf);
    // nothing reducible
    CHECK(reduce(parse_polynomial("x*y", rationals(), {"x", "y"}, ord), g) ==
          parse_polynomial("x*y", rationals(), {"x", "y"}, ord));
}

TEST_CASE("buchberger computes the expected reduced basis") {
    auto g = gens({"x^2 + y^2", "x*y"}, rationals(), {"x", "y"});
    GBResult r = buchberger(g);
    CHECK(!r.capped);
    // sorted by descending leading term; degrevlex ranks y^3 (degree 3) first
    CHECK(strings(r.basis, {"x", "y"}) ==
          std::vector<std::string>{"y^3", "x^2 + y^2", "x*y"});
}

TEST_CASE("degree cap fires exactly when the reduced basis exceeds it") {
    auto g = gens({"x^2 + y^2", "x*y"}, rationals(), {"x", "y"});
    CHECK(buchberger(g, 2).capped);
    GBResult at3 = buchberger(g, 3);
    CHECK(!at3.capped);
    CHECK(at3.basis == buchberger(g).basis);

    // a quadratic monomial ideal is its own basis: the cap never fires
    auto mono = gens({"x^2", "x*y", "y^2"}, rationals(), {"x", "y"});
    GBResult m = buchberger(mono, 2);
    CHECK(!m.capped);
    CHECK(m.basis.size() == 3);
    CHECK(is_quadratic_gb(m.basis));

    // 3 variables: S(x^2 - y*z, x*y) lands on y^2*z in degree 3
    auto three = gens({"x^2 - y*z", "x*y"});
    CHECK(buchberger(three, 2).capped);
    GBResult full = buchberger(three);
    CHECK(!full.capped);
    CHECK(strings(full.basis) ==
          std::vector<std::string>{"y^2*z", "x^2 - y*z", "x*y"});
    CHECK(!is_quadratic_gb(full.basis));
}

TEST_CASE("a quadratic basis closed under S-pairs stays quadratic") {
    auto g = gens({"x*z - y*z", "x^2 - x*y", "y^2 - y*z"});
    GBResult r = buchberger(g, 2);
    CHECK(!r.capped);
    CHECK(is_quadratic_gb(r.basis));
    CHECK(r.basis.size() == 3);
}

TEST_CASE("groebner membership: combinations reduce to zero") {
    auto g = gens({"x^2 - y*z", "x*y"});
    GBResult r = buchberger(g);
    const TermOrder ord(OrderKind::DegRevLex, 3);
    Polynomial combo = g[0] * parse_polynomial("x + 3*z", rationals(), xyz, ord) -
                       g[1] * parse_polynomial("y - z", rationals(), xyz, ord);
    CHECK(reduce(combo, r.basis).is_zero());
}

TEST_CASE("determinism: repeated runs agree") {
    auto g = gens({"x^2 - y*z", "x*y", "z^2 + x*z"});
    GBResult a = buchberger(g);
    GBResult b = buchberger(g);
    CHECK(a.basis == b.basis);
}

TEST_CASE("standard monomials and hilbert function") {
    auto r = buchberger(gens({"x^2", "y^2", "z^2"}));
    CHECK(hilbert_function(r.basis, 4) == std::vector<unsigned>{1, 3, 3, 1, 0});
    auto ms = standard_monomials(r.basis, 2);
    std::vector<std::string> got;
    for (const auto& m : ms) got.push_back(m.to_string(xyz));
    CHECK(got == std::vector<std::string>{"x*y", "x*z", "y*z"});

    auto s = buchberger(gens({"x^2", "x*y", "x*z"}));
    CHECK(hilbert_function(s.basis, 4) == std::vector<unsigned>{1, 3, 3, 4, 5});
}

TEST_CASE("cone dimension and zero-dimensionality") {
    auto art = buchberger(gens({"x^2", "y^2", "z^2"})).basis;
    CHECK(cone_dimension(art, 3) == 0);
    CHECK(is_zero_dimensional(art, 3));

    auto line = buchberger(gens({"x^2", "x*y", "x*z"})).basis;
    CHECK(cone_dimension(line, 3) == 2);
    CHECK(!is_zero_dimensional(line, 3));

    auto curve = buchberger(gens({"x*y"})).basis;
    CHECK(cone_dimension(curve, 3) == 2);

    auto pts = buchberger(gens({"x*y", "x*z", "y*z"})).basis;
    CHECK(cone_dimension(pts, 3) == 1);
}

TEST_CASE("projective point counts over Q") {
    CHECK(count_projective_points(gens({"x*y", "x*z", "y*z"})) == 3);
    CHECK(count_projective_points(gens({"x^2", "x*y", "y^2"})) == 1);
    CHECK(count_projective_points(gens({"x^2", "x*y", "x*z"})) == kInfinitelyMany);
    CHECK(count_projective_points(gens({"x^2", "x*z", "y*z"})) == 2);
    CHECK(count_projective_points(gens({"x^2", "y^2", "z^2"})) == 0);
    // a smooth conic: infinitely many closure points
    CHECK(count_projective_points(gens({"x*z - y^2"})) == kInfinitelyMany);
    // conic meets line in two points
    CHECK(count_projective_points(gens({"x*z - y^2", "x - z"})) == 2);
    // tangent line: one double point, counted once
    CHECK(count_projective_points(gens({"x*z - y^2", "x"})) == 1);
}

TEST_CASE("projective point counts over finite fields see closure points") {
    const Field* f101 = prime_field(101);
    // x^2 + y^2 + z^2 and x*y vanish at 4 closure points
    CHECK(count_projective_points(gens({"x^2 + y^2 + z^2", "x*y"}, f101)) == 4);
    // cuspidal intersection independent of the field
    CHECK(count_projective_points(gens({"x*y", "x*z", "y*z"}, f101)) == 3);
    const Field* f5 = prime_field(5);
    CHECK(count_projective_points(gens({"x^2 - y*z", "x*y - z^2"}, f5)) ==
          count_projective_points(gens({"x^2 - y*z", "x*y - z^2"})));
}

TEST_CASE("projective point counting input validation") {
    CHECK_THROWS_AS(count_projective_points(gens({"x^2 + y"})), HypothesisError);
    // different seeds agree on an exact computation
    auto g = gens({"x*z - y^2", "x - z"});
    CHECK(count_projective_points(g, 1) == count_projective_points(g, 99));
}
