#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgb/ideal_io.hpp"

#include <cstdlib>
#include <string>

using namespace qgb;

namespace {

std::string msg_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("parse a rational ideal file") {
    IdealFile f = parse_ideal_string(
        "# a comment\n"
        "field Q\n"
        "vars x, y, z\n"
        "x^2 - y*z   # inline comment\n"
        "\n"
        "x*y + 1/2*z^2\n");
    CHECK(f.field == rationals());
    CHECK(f.names == std::vector<std::string>{"x", "y", "z"});
    REQUIRE(f.gens.size() == 2);
    CHECK(f.gens[0].to_string(f.names) == "x^2 - y*z");
    CHECK(f.gens[1].to_string(f.names) == "x*y + 1/2*z^2");
}

TEST_CASE("parse finite and extension fields") {
    IdealFile f = parse_ideal_string("field 101\nvars x,y\nx^2 - y^2\n");
    CHECK(f.field == prime_field(101));
    // residues print in the canonical range 0..p-1
    CHECK(f.gens[0].to_string(f.names) == "x^2 + 100*y^2");

    IdealFile e = parse_ideal_string("field 5^2\nvars x,y\nx*y\n");
    CHECK(e.field == extension_field(5, 2));
    CHECK(e.field->order() == 25);
}

TEST_CASE("round trip through format_ideal") {
    const std::string text =
        "field Q\nvars t,z,w,y\nt^2 - z*w\nw^2 + 3/4*t*y - y^2\nz*y\n";
    IdealFile f = parse_ideal_string(text);
    IdealFile g = parse_ideal_string(format_ideal(f));
    CHECK(g.field == f.field);
    CHECK(g.names == f.names);
    REQUIRE(g.gens.size() == f.gens.size());
    for (std::size_t i = 0; i < f.gens.size(); ++i) CHECK(g.gens[i] == f.gens[i]);

    const std::string p = "field 7\nvars x,y\nx^2 + 3*y^2\n";
    IdealFile h = parse_ideal_string(p);
    CHECK(format_ideal(h) == p);
}

TEST_CASE("error messages carry line numbers") {
    CHECK(msg_of([] { parse_ideal_string("field Q\nvars x\nx^2\nq\n"); }) ==
          "line 4: unknown variable 'q'");
    CHECK(msg_of([] { parse_ideal_string("field Q\nvars x, x\nx\n"); }) ==
          "line 2: duplicate variable name 'x'");
    CHECK(msg_of([] { parse_ideal_string("fields Q\nvars x\nx\n"); }) ==
          "line 1: expected 'field <p>' or 'field Q'");
    CHECK(msg_of([] { parse_ideal_string("field Q\nvars x\nx +\n"); }) ==
          "line 3: empty term");
}

TEST_CASE("structural errors") {
    CHECK_THROWS_AS(parse_ideal_string(""), ParseError);
    CHECK_THROWS_AS(parse_ideal_string("field Q\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal_string("field Q\nvars x\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal_string("vars x\nfield Q\nx\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal_string("field 4\nvars x\nx\n"), HypothesisError);
    CHECK_THROWS_AS(parse_ideal_string("field 5^9\nvars x\nx\n"), HypothesisError);
    CHECK_THROWS_AS(parse_ideal_string("field Q\nvars x,1y\nx\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal_string("field zzz\nvars x\nx\n"), ParseError);
}

TEST_CASE("load_ideal reads files and reports missing ones") {
    CHECK_THROWS_AS(load_ideal("/nonexistent/path.ideal"), ParseError);
    const char* dir = std::getenv("QGB_FIXTURES");
    REQUIRE(dir != nullptr);
    IdealFile f = load_ideal(std::string(dir) + "/rank_two_only.ideal");
    CHECK(f.names.size() == 4);
    CHECK(f.gens.size() == 7);
    for (const auto& g : f.gens) {
        CHECK(g.deg() == 2);
        CHECK(g.homogeneous());
    }
}
