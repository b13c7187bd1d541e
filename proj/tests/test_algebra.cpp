#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgb/algebra.hpp"
#include "qgb/ideal_io.hpp"

using namespace qgb;

namespace {

GradedQuotient quotient_of(const std::string& text, unsigned max_degree = 4) {
    IdealFile f = parse_ideal_string(text);
    return GradedQuotient::build(f.gens, max_degree);
}

// The four worked examples, over a selectable field.
std::string coordinate_squares(const std::string& field) {
    return "field " + field + "\nvars x,y,z\nx^2\ny^2\nz^2\n";
}

std::string rank_two_only(const std::string& field) {
    return "field " + field +
           "\nvars t,z,w,y\n"
           "y^2\ny*z\nz^2 - w*y\nt^2\nt*w\nw^2 - t*z\nw*z\n";
}

std::string three_directions(const std::string& field) {
    return "field " + field +
           "\nvars t,z,w,y\n"
           "y^2\ny*z\nw^2\nw*z\nt^2\nt*z\nz^2 + t*y + w*y\n";
}

std::string square_zero_line(const std::string& field) {
    return "field " + field +
           "\nvars t,z,w,y\n"
           "y^2\nz*y\nz^2\nt^2 - t*y - 2*w*y\nw^2 - 3*t*y - 4*w*y\n"
           "t*z - t*y\nw*z - 2*w*y\n";
}

std::string vandermonde_squares(const std::string& field) {
    return "field " + field +
           "\nvars t,z,w,y\n"
           "y^2\nz^2\nw^2\nt^2\n"
           "t^2 + z^2 + w^2 + y^2 + 2*t*z + 2*t*w + 2*t*y + 2*z*w + 2*z*y + 2*w*y\n"
           "t^2 + 4*z^2 + 16*w^2 + 64*y^2 + 4*t*z + 8*t*w + 16*t*y + 16*z*w + "
           "32*z*y + 64*w*y\n"
           "t^2 + 9*z^2 + 81*w^2 + 729*y^2 + 6*t*z + 18*t*w + 54*t*y + 54*z*w + "
           "162*z*y + 486*w*y\n";
}

std::vector<Scalar> unit(const Field* f, unsigned n, unsigned i) {
    std::vector<Scalar> v(n, f->zero());
    v[i] = f->one();
    return v;
}

bool has_class(const SquareZeroForms& sz, const std::vector<Scalar>& coords) {
    for (const auto& c : sz.classes)
        if (c.coords == coords) return true;
    return false;
}

} // namespace

TEST_CASE("build: dimensions, artinian flag, bases") {
    GradedQuotient r = quotient_of(coordinate_squares("Q"));
    CHECK(r.hilbert() == std::vector<unsigned>{1, 3, 3, 1, 0});
    CHECK(r.artinian());
    CHECK(r.dim(2) == 3);
    std::vector<std::string> b2;
    for (const auto& m : r.basis(2)) b2.push_back(m.to_string({"x", "y", "z"}));
    CHECK(b2 == std::vector<std::string>{"x*y", "x*z", "y*z"});

    GradedQuotient s = quotient_of("field Q\nvars x,y,z\nx^2\nx*y\nx*z\n");
    CHECK(s.hilbert() == std::vector<unsigned>{1, 3, 3, 4, 5});
    CHECK(!s.artinian());
}

TEST_CASE("normal-form coordinates") {
    GradedQuotient r = quotient_of(coordinate_squares("Q"));
    const Field* q = r.field();
    const TermOrder& ord = r.order();
    Polynomial f = parse_polynomial("x^2 + 3*x*y - y*z", q, {"x", "y", "z"}, ord);
    auto coords = r.nf_coords(f, 2);
    REQUIRE(coords.size() == 3);
    CHECK(coords[0].to_string() == "3");
    CHECK(coords[1].is_zero());
    CHECK(coords[2].to_string() == "-1");
    CHECK(r.from_coords(coords, 2).to_string({"x", "y", "z"}) == "3*x*y - y*z");
    CHECK(r.basis_index(Monomial({1, 0, 1}), 2) == 1);
    CHECK_THROWS_AS(r.basis_index(Monomial({2, 0, 0}), 2), std::logic_error);
}

TEST_CASE("variable maps multiply correctly") {
    GradedQuotient r = quotient_of(coordinate_squares("Q"));
    // x * [x, y, z] = [0, xy, xz]
    const Matrix& mx = r.var_map(0, 1);
    CHECK(mx.rows() == 3);
    CHECK(mx.cols() == 3);
    auto xx = mx.col(0);
    for (const auto& s : xx) CHECK(s.is_zero());
    CHECK(mx.col(1) == unit(r.field(), 3, 0)); // x*y
    CHECK(mx.col(2) == unit(r.field(), 3, 1)); // x*z
}

TEST_CASE("rank of linear forms and annihilators") {
    GradedQuotient r = quotient_of(coordinate_squares("Q"));
    const Field* q = r.field();
    CHECK(r.rank_linear_form(unit(q, 3, 0)) == 2);
    // scaling invariance
    std::vector<Scalar> scaled = {q->from_int(5), q->zero(), q->zero()};
    CHECK(r.rank_linear_form(scaled) == 2);
    std::vector<Scalar> generic = {q->one(), q->one(), q->one()};
    CHECK(r.rank_linear_form(generic) == 3);
    // rank-nullity against the annihilator
    CHECK(r.annihilator(unit(q, 3, 0)).size() == 1);
    CHECK(r.annihilator(unit(q, 3, 0))[0] == unit(q, 3, 0));
    CHECK(r.annihilator(generic).empty());
}

TEST_CASE("worked example ranks") {
    GradedQuotient r5 = quotient_of(rank_two_only("Q"));
    CHECK(r5.dim(1) == 4);
    CHECK(r5.dim(2) == 3);
    CHECK(r5.artinian());
    const Field* q = r5.field();
    CHECK(r5.rank_linear_form(unit(q, 4, 3)) == 2); // y
    CHECK(r5.rank_linear_form(unit(q, 4, 0)) == 2); // t

    GradedQuotient r7 = quotient_of(square_zero_line("Q"));
    CHECK(r7.dim(2) == 3);
    CHECK(r7.artinian());
    // y - z has rank 1
    std::vector<Scalar> ymz = {q->zero(), q->from_int(-1), q->zero(), q->one()};
    CHECK(r7.rank_linear_form(ymz) == 1);
    // 2y - z has rank 1 as well
    std::vector<Scalar> y2mz = {q->zero(), q->from_int(-1), q->zero(), q->from_int(2)};
    CHECK(r7.rank_linear_form(y2mz) == 1);
    // but y and z individually have rank 2
    CHECK(r7.rank_linear_form(unit(q, 4, 1)) == 2);
    CHECK(r7.rank_linear_form(unit(q, 4, 3)) == 2);
}

TEST_CASE("square-zero classes of the coordinate-squares algebra") {
    GradedQuotient r = quotient_of(coordinate_squares("101"));
    SquareZeroForms sz = square_zero_forms(r);
    CHECK(sz.search_field == r.field());
    CHECK(sz.complete);
    REQUIRE(sz.classes.size() == 3);
    for (const auto& c : sz.classes) {
        CHECK(c.rank == 2);
        // the squares are exactly zero in R_2
        Polynomial u = r.linear_form(c.coords);
        auto coords = r.nf_coords(u * u, 2);
        for (const auto& s : coords) CHECK(s.is_zero());
    }
    for (unsigned i = 0; i < 3; ++i) CHECK(has_class(sz, unit(r.field(), 3, i)));
}

TEST_CASE("square-zero classes of the worked examples") {
    // example with exactly three square-zero directions t, w, y, all rank 2
    GradedQuotient r6 = quotient_of(three_directions("101"));
    SquareZeroForms sz6 = square_zero_forms(r6);
    CHECK(sz6.complete);
    REQUIRE(sz6.classes.size() == 3);
    const Field* f = r6.field();
    CHECK(has_class(sz6, unit(f, 4, 0))); // t
    CHECK(has_class(sz6, unit(f, 4, 2))); // w
    CHECK(has_class(sz6, unit(f, 4, 3))); // y
    for (const auto& c : sz6.classes) CHECK(c.rank == 2);

    // example whose square-zero locus is the whole line {b z + d y}
    GradedQuotient r7 = quotient_of(square_zero_line("101"));
    SquareZeroForms sz7 = square_zero_forms(r7);
    CHECK(sz7.complete);
    CHECK(sz7.classes.size() == 102); // p + 1 points of the line
    unsigned rank1 = 0;
    for (const auto& c : sz7.classes) {
        CHECK(c.rank <= 2);
        CHECK(c.rank >= 1);
        if (c.rank == 1) ++rank1;
        CHECK(c.coords[0].is_zero()); // no t component
        CHECK(c.coords[2].is_zero()); // no w component
    }
    CHECK(rank1 == 2); // exactly y - z and 2y - z

    // example where every square-zero form has full rank 3
    GradedQuotient r4 = quotient_of(vandermonde_squares("101"));
    CHECK(r4.dim(2) == 3);
    SquareZeroForms sz4 = square_zero_forms(r4);
    CHECK(sz4.complete);
    CHECK(sz4.classes.size() == 8);
    for (unsigned i = 0; i < 4; ++i) CHECK(has_class(sz4, unit(f, 4, i)));
    for (const auto& c : sz4.classes) CHECK(c.rank == 3);
}

TEST_CASE("square-zero nonexistence is certified for three variables") {
    GradedQuotient r = quotient_of("field 101\nvars x,y,z\nx*y\nx*z\ny*z\n");
    SquareZeroForms sz = square_zero_forms(r);
    CHECK(sz.complete);
    CHECK(sz.classes.empty());
}

TEST_CASE("square-zero search exhaustion reports inconclusive") {
    // pairwise products of four variables: squares survive, nothing has
    // square zero over any extension, and with four variables that cannot
    // be certified, only reported.
    GradedQuotient r = quotient_of(
        "field 5\nvars x,y,z,w\nx*y\nx*z\nx*w\ny*z\ny*w\nz*w\n");
    SquareZeroSearchOptions opts;
    opts.extension_cap = 2;
    CHECK_THROWS_AS(square_zero_forms(r, opts), InconclusiveError);
    try {
        square_zero_forms(r, opts);
    } catch (const InconclusiveError& e) {
        CHECK(std::string(e.what()).rfind("SEARCH_EXHAUSTED", 0) == 0);
    }
}

TEST_CASE("square-zero search escalates to an extension field") {
    // in k[x,y]/(x^2 - 2y^2, xy) the square of ax + by is (2a^2 + b^2) y^2,
    // so square-zero forms need a root of -2: none over F_7, two over F_49
    GradedQuotient r = quotient_of("field 7\nvars x,y\nx^2 - 2*y^2\nx*y\n");
    SquareZeroForms sz = square_zero_forms(r);
    CHECK(sz.search_field == extension_field(7, 2));
    CHECK(sz.complete);
    REQUIRE(sz.classes.size() == 2);
    for (const auto& c : sz.classes) {
        CHECK(c.coords[0].is_one());
        Scalar ratio = c.coords[1] / c.coords[0];
        CHECK((ratio * ratio) == sz.search_field->from_int(-2));
    }
}

TEST_CASE("trivial extension reduction removes rank-zero directions") {
    // x has rank zero in k[x,y]/(x^2, x*y); the core is a polynomial ring
    GradedQuotient r = quotient_of("field Q\nvars x,y\nx^2\nx*y\n");
    CHECK(r.rank_linear_form(unit(r.field(), 2, 0)) == 0);
    TrivialExtensionReduction red = trivial_extension_reduce(r);
    CHECK(red.removed == 1);
    REQUIRE(red.removed_basis.size() == 1);
    CHECK(red.removed_basis[0] == unit(r.field(), 2, 0));
    CHECK(red.core.dim(1) == 1);
    CHECK(red.core.dim(2) == 1);
    CHECK(red.core.dim(3) == 1);
    CHECK(!red.core.artinian());
    // embed realizes the kept variable y
    CHECK(red.embed.rows() == 2);
    CHECK(red.embed.cols() == 1);
    CHECK(red.embed.col(0) == unit(r.field(), 2, 1));
}

TEST_CASE("trivial extension reduction is idempotent and preserves dims") {
    // a worked example extended by one annihilated variable v
    GradedQuotient big = quotient_of(
        "field Q\nvars t,z,w,y,v\n"
        "y^2\ny*z\nw^2\nw*z\nt^2\nt*z\nz^2 + t*y + w*y\n"
        "v^2\nv*t\nv*z\nv*w\nv*y\n");
    TrivialExtensionReduction red = trivial_extension_reduce(big);
    CHECK(red.removed == 1);
    CHECK(red.removed_basis[0] == unit(big.field(), 5, 4));
    CHECK(red.core.dim(1) == 4);
    GradedQuotient orig = quotient_of(three_directions("Q"));
    for (unsigned d = 2; d <= 4; ++d) CHECK(red.core.dim(d) == orig.dim(d));
    // idempotent: the core has no rank-zero directions left
    TrivialExtensionReduction again = trivial_extension_reduce(red.core);
    CHECK(again.removed == 0);

    // examples without trivial directions are returned unchanged
    CHECK(trivial_extension_reduce(quotient_of(rank_two_only("Q"))).removed == 0);
    CHECK(trivial_extension_reduce(orig).removed == 0);
}

TEST_CASE("quotient by linear forms") {
    GradedQuotient r = quotient_of(coordinate_squares("Q"));
    const Field* q = r.field();
    GradedQuotient s = quotient_by_forms(r, {unit(q, 3, 0)});
    CHECK(s.hilbert() == std::vector<unsigned>{1, 2, 1, 0, 0});
    // empty list: unchanged
    GradedQuotient same = quotient_by_forms(r, {});
    CHECK(same.hilbert() == r.hilbert());
    // dependent forms are rejected
    std::vector<Scalar> twice = {q->from_int(2), q->zero(), q->zero()};
    CHECK_THROWS_AS(quotient_by_forms(r, {unit(q, 3, 0), twice}), HypothesisError);
}

TEST_CASE("projective sweep enumerates the right number of points") {
    const Field* f5 = prime_field(5);
    unsigned count = 0;
    bool ok = sweep_projective(f5, 3, 1000, [&](const std::vector<Scalar>&) {
        ++count;
        return false;
    });
    CHECK(ok);
    CHECK(count == 31); // |P^2(F_5)| = 25 + 5 + 1
    // budget exceeded: refuses without visiting
    count = 0;
    CHECK(!sweep_projective(f5, 12, 1000, [&](const std::vector<Scalar>&) {
        ++count;
        return false;
    }));
    CHECK(count == 0);
    // early stop
    count = 0;
    sweep_projective(f5, 3, 1000, [&](const std::vector<Scalar>&) {
        ++count;
        return count == 7;
    });
    CHECK(count == 7);
}

TEST_CASE("lift_field preserves the presentation") {
    GradedQuotient r = quotient_of(rank_two_only("Q"));
    GradedQuotient l = r.lift_field(prime_field(101));
    CHECK(l.field() == prime_field(101));
    CHECK(l.hilbert() == r.hilbert());
    CHECK(l.rank_linear_form(unit(l.field(), 4, 3)) == 2);
}

TEST_CASE("quadratic presentation recognition") {
    IdealFile a = parse_ideal_string(coordinate_squares("Q"));
    CHECK(quadratic_presentation(a.gens));
    IdealFile b = parse_ideal_string("field Q\nvars x,y\nx^2\nx + y\n");
    CHECK(!quadratic_presentation(b.gens));
    IdealFile c = parse_ideal_string("field Q\nvars x,y\nx^2 + x\n");
    CHECK(!quadratic_presentation(c.gens));
}
