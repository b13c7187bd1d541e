#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "qgb/algebra.hpp"
#include "qgb/groebner.hpp"
#include "qgb/ideal_io.hpp"
#include "qgb/nets.hpp"
#include "qgb/report.hpp"
#include "qgb/witness.hpp"

using namespace qgb;

namespace {

std::string fixture(const std::string& name) {
    const char* env = std::getenv("QGB_FIXTURES");
    return std::string(env ? env : "fixtures") + "/" + name + ".ideal";
}

GradedQuotient load_quotient(const std::string& name, unsigned depth = 3) {
    IdealFile in = load_ideal(fixture(name));
    return GradedQuotient::build(in.gens, depth);
}

GradedQuotient load_quotient_mod(const std::string& name, std::uint64_t p,
                                 unsigned depth = 3) {
    IdealFile in = reduce_mod_p(load_ideal(fixture(name)), p);
    return GradedQuotient::build(in.gens, depth);
}

bool path_has(const WitnessTrace& t, const std::string& marker) {
    return std::find(t.path.begin(), t.path.end(), marker) != t.path.end();
}

std::vector<Scalar> unit(const Field* f, unsigned n, unsigned i) {
    std::vector<Scalar> v(n, f->zero());
    v[i] = f->one();
    return v;
}

bool is_square_zero(const GradedQuotient& r, const std::vector<Scalar>& y) {
    Polynomial ell = r.linear_form(y);
    for (const Scalar& c : r.nf_coords(ell * ell, 2))
        if (!c.is_zero()) return false;
    return true;
}

void check_verified(const WitnessOutcome& out, unsigned nvars) {
    REQUIRE(out.kind == OutcomeKind::Witness);
    REQUIRE(out.witness.has_value());
    CHECK(out.witness->basis.rows() == nvars);
    CHECK(out.witness->basis.cols() == nvars);
    CHECK(out.verification.ok);
    CHECK(out.verification.quadratic);
    CHECK(out.verification.max_degree <= 2);
    CHECK(out.verification.dim_r3 == 0);
}

} // namespace

TEST_CASE("fixture routes: square-zero form of rank 3") {
    GradedQuotient r = load_quotient("vandermonde_squares");
    WitnessOutcome out = find_witness(r, WitnessConfig{.seed = 0});
    check_verified(out, 4);
    CHECK(out.trace.path == std::vector<std::string>{"L-case1"});
    REQUIRE(out.trace.forms.count("y"));
    CHECK(is_square_zero(r, out.trace.forms.at("y")));
    CHECK(r.rank_linear_form(out.trace.forms.at("y")) == 3);
}

TEST_CASE("fixture routes: rank 2 dispatching to case 2") {
    GradedQuotient r = load_quotient("rank_two_only");
    WitnessOutcome out = find_witness(r, WitnessConfig{.seed = 0});
    check_verified(out, 4);
    CHECK(out.trace.path ==
          std::vector<std::string>{"P-rank2", "P-case2", "L-case2"});
    REQUIRE(out.trace.forms.count("y"));
    REQUIRE(out.trace.forms.count("z"));
    const auto& y = out.trace.forms.at("y");
    CHECK(is_square_zero(r, y));
    CHECK(r.rank_linear_form(y) == 2);
    // z lies in ann(y) and z^2 is a multiple of y.
    Polynomial zy = r.linear_form(out.trace.forms.at("z")) * r.linear_form(y);
    for (const Scalar& c : r.nf_coords(zy, 2)) CHECK(c.is_zero());
}

TEST_CASE("fixture routes: rank 2 dispatching through the partner search") {
    GradedQuotient r = load_quotient("three_directions");
    WitnessOutcome out = find_witness(r, WitnessConfig{.seed = 0});
    check_verified(out, 4);
    REQUIRE(!out.trace.path.empty());
    CHECK(out.trace.path.front() == "P-rank2");
    CHECK(out.trace.path.back() == "L-case3");
    CHECK(path_has(out.trace, "L-partner"));
    CHECK(out.trace.forms.count("u_in_W"));
}

TEST_CASE("fixture routes: square-zero form of rank 1") {
    GradedQuotient r = load_quotient("square_zero_line");
    WitnessOutcome out = find_witness(r, WitnessConfig{.seed = 0});
    check_verified(out, 4);
    CHECK(out.trace.path == std::vector<std::string>{"L-case4"});
    REQUIRE(out.trace.forms.count("y"));
    REQUIRE(out.trace.forms.count("t"));
    CHECK(r.rank_linear_form(out.trace.forms.at("y")) == 1);
}

TEST_CASE("fixture routes: trivial extension composes with the core") {
    GradedQuotient r = load_quotient("trivial_extension");
    REQUIRE(r.nvars() == 5);
    TrivialExtensionReduction red = trivial_extension_reduce(r);
    CHECK(red.removed == 1);
    CHECK(red.core.nvars() == 4);
    CHECK(red.embed.rows() == 5);
    CHECK(red.embed.cols() == 4);
    REQUIRE(red.removed_basis.size() == 1);
    CHECK(r.rank_linear_form(red.removed_basis[0]) == 0);
    // core dims agree with R in degrees >= 2
    CHECK(red.core.dim(2) == r.dim(2));
    CHECK(red.core.dim(3) == r.dim(3));

    WitnessOutcome out = find_witness(r, WitnessConfig{.seed = 0});
    check_verified(out, 5);
    CHECK(out.trace.path.back() == "L-case3");
}

TEST_CASE("constructive cases check their hypotheses") {
    GradedQuotient r = load_quotient("vandermonde_squares");
    const Field* f = r.field();
    // t is not square-zero in this quotient.
    auto t = unit(f, 4, 0);
    CHECK(!is_square_zero(r, t));
    CHECK_THROWS_AS(lemma22_case1(r, t), HypothesisError);
    CHECK_THROWS_AS(lemma22_case4(r, t), HypothesisError);

    GradedQuotient r2 = load_quotient("rank_two_only");
    auto y = unit(f, 4, 3); // square-zero of rank 2
    REQUIRE(is_square_zero(r2, y));
    REQUIRE(r2.rank_linear_form(y) == 2);
    CHECK_THROWS_AS(lemma22_case1(r2, y), HypothesisError);  // needs rank 3
    CHECK_THROWS_AS(lemma22_case4(r2, y), HypothesisError);  // needs rank 1
    CHECK_THROWS_AS(lemma22_case2(r2, y, y), HypothesisError); // z = y fails
}

TEST_CASE("direct case-1 invocation on a rank-3 square-zero form") {
    GradedQuotient r = load_quotient("vandermonde_squares");
    SquareZeroForms sz = square_zero_forms(r, SquareZeroSearchOptions{
        .extension_cap = 1, .exhaustive_budget = 2'000'000, .seed = 0});
    REQUIRE(!sz.classes.empty());
    const SquareZeroClass* rank3 = nullptr;
    for (const auto& c : sz.classes)
        if (c.rank == 3) { rank3 = &c; break; }
    REQUIRE(rank3 != nullptr);
    WitnessTrace trace;
    Witness w = lemma22_case1(r, rank3->coords, &trace);
    CHECK(trace.path == std::vector<std::string>{"L-case1"});
    VerifyReport v = verify_witness(r.generators(), w, true);
    CHECK(v.ok);
    CHECK(v.dim_r3 == 0);
}

TEST_CASE("direct rank-2 reduction on the worked example") {
    GradedQuotient r = load_quotient("rank_two_only");
    auto y = unit(r.field(), 4, 3);
    WitnessTrace trace;
    Witness w = prop21_rank2(r, y, &trace, 0);
    CHECK(trace.path.front() == "P-rank2");
    VerifyReport v = verify_witness(r.generators(), w, true);
    CHECK(v.ok);
}

TEST_CASE("direct case-4 invocation on a rank-1 square-zero form") {
    GradedQuotient r = load_quotient_mod("square_zero_line", 101);
    const Field* f = r.field();
    SquareZeroForms sz = square_zero_forms(r, SquareZeroSearchOptions{
        .extension_cap = 1, .exhaustive_budget = 2'000'000, .seed = 0});
    REQUIRE(sz.complete);
    // vars t,z,w,y: the rank-1 classes are exactly z - 2y and z - y.
    std::vector<std::vector<Scalar>> rank1;
    for (const auto& c : sz.classes)
        if (c.rank == 1) rank1.push_back(c.coords);
    std::vector<std::vector<Scalar>> expect = {
        {f->zero(), f->one(), f->zero(), f->from_int(-2)},
        {f->zero(), f->one(), f->zero(), f->from_int(-1)}};
    REQUIRE(rank1.size() == 2);
    CHECK((rank1[0] == expect[0] || rank1[0] == expect[1]));
    CHECK((rank1[1] == expect[0] || rank1[1] == expect[1]));
    CHECK(!(rank1[0] == rank1[1]));

    WitnessTrace trace;
    Witness w = lemma22_case4(r, rank1[0], &trace);
    VerifyReport v = verify_witness(r.generators(), w, true);
    CHECK(v.ok);
}

TEST_CASE("verify_witness accepts a correct certificate and explains failures") {
    IdealFile in = parse_ideal_string("field Q\nvars x,y,z\nx^2\ny^2\nz^2\n");
    const Field* f = in.field;
    Witness identity{Matrix::identity(f, 3), {0, 1, 2}, OrderKind::DegRevLex};
    VerifyReport good = verify_witness(in.gens, identity, true);
    CHECK(good.ok);
    CHECK(good.quadratic);
    CHECK(good.max_degree == 2);
    CHECK(good.dim_r3 == 0);
    CHECK(good.reduced.size() == 3);
    CHECK(good.failure.empty());

    // The type-13 net has no quadratic basis in its given coordinates: the
    // identity "certificate" must be rejected with a named offender.
    auto gens13 = net_quadrics(normal_form(13, prime_field(101)));
    Witness id13{Matrix::identity(prime_field(101), 3), {0, 1, 2},
                 OrderKind::DegRevLex};
    VerifyReport bad = verify_witness(gens13, id13, false);
    CHECK(!bad.ok);
    CHECK(!bad.quadratic);
    CHECK(bad.max_degree > 2);
    CHECK(!bad.failure.empty());
}

TEST_CASE("verify_witness: require_r3_zero distinguishes non-Artinian quotients") {
    // Type 1 has a quadratic basis but Hilbert series 1,3,3,3,...: the
    // certificate verifies as a Groebner basis yet fails the R_3 = 0 demand.
    const Field* f = prime_field(101);
    auto gens = net_quadrics(normal_form(1, f));
    auto w = search_quadratic_witness(gens, 0, 0);
    REQUIRE(w.has_value());
    VerifyReport lax = verify_witness(gens, *w, false);
    CHECK(lax.ok);
    CHECK(lax.dim_r3 == -1);
    VerifyReport strict = verify_witness(gens, *w, true);
    CHECK(!strict.ok);
    CHECK(strict.quadratic);
    CHECK(strict.dim_r3 == 3);
}

TEST_CASE("search_quadratic_witness finds the identity when it works") {
    IdealFile in = parse_ideal_string("field 101\nvars x,y,z\nx^2\ny^2\nz^2\n");
    auto w = search_quadratic_witness(in.gens, 0, 0);
    REQUIRE(w.has_value());
    CHECK(w->basis == Matrix::identity(in.field, 3));
}

TEST_CASE("partner search in a Hilbert 1,3,1 quotient") {
    // x^2 = y^2 = z^2 is the only nonzero product: squaring is the quadratic
    // form u_1^2 + u_2^2 + u_3^2 on S_1, so a partner exists over F_5
    // (where -1 is a square) but not over Q.
    std::string text = "vars x,y,z\nx*y\nx*z\ny*z\nx^2 - y^2\ny^2 - z^2\n";
    IdealFile over_q = parse_ideal_string("field Q\n" + text);
    GradedQuotient s = GradedQuotient::build(over_q.gens, 3);
    REQUIRE(s.hilbert() == std::vector<unsigned>{1, 3, 1, 0});
    auto z = unit(s.field(), 3, 0);
    CHECK_THROWS_AS(lemma23_partner(s, z, 0), InconclusiveError);

    IdealFile over_f5 = parse_ideal_string("field 5\n" + text);
    GradedQuotient s5 = GradedQuotient::build(over_f5.gens, 3);
    auto z5 = unit(s5.field(), 3, 0);
    std::vector<Scalar> u = lemma23_partner(s5, z5, 0);
    CHECK(is_square_zero(s5, u));
    Polynomial uz = s5.linear_form(u) * s5.linear_form(z5);
    bool nonzero = false;
    for (const Scalar& c : s5.nf_coords(uz, 2)) nonzero = nonzero || !c.is_zero();
    CHECK(nonzero);
    // Hypothesis check: z must satisfy z^2 != 0.
    std::vector<Scalar> bad = u;
    CHECK_THROWS_AS(lemma23_partner(s5, bad, 0), HypothesisError);
}

TEST_CASE("three-variable classification: complete intersections") {
    const Field* f = prime_field(101);
    // Type 3 contains squares: G-quadratic with an explicit witness.
    {
        auto r = GradedQuotient::build(net_quadrics(normal_form(3, f)), 3);
        CIException ce = classify_n3(r, WitnessConfig{.seed = 1, .n3_random_changes = 50});
        CHECK(ce.gquadratic);
        CHECK(ce.square_lines == 3);
        REQUIRE(ce.witness.has_value());
        CHECK(!ce.search_failed);
    }
    // Type 15 contains no square: not G-quadratic.
    {
        auto nf = normal_form(15, f, f->from_int(2));
        auto r = GradedQuotient::build(net_quadrics(nf), 3);
        CIException ce = classify_n3(r, WitnessConfig{.seed = 1, .n3_random_changes = 50});
        CHECK(!ce.gquadratic);
        CHECK(ce.square_lines == 0);
        CHECK(!ce.witness.has_value());
        CHECK(!ce.search_failed);
    }
    // Type 12 is not Artinian, hence not a complete-intersection input.
    {
        auto r = GradedQuotient::build(net_quadrics(normal_form(12, f)), 3);
        CHECK_THROWS_AS(classify_n3(r, WitnessConfig{}), HypothesisError);
    }
}

TEST_CASE("find_witness rejects inputs outside the hypotheses") {
    // Non-quadratic generators.
    IdealFile cubic = parse_ideal_string("field Q\nvars x,y,z\nx^2\ny^2\nz^3\n");
    auto rc = GradedQuotient::build(cubic.gens, 3);
    CHECK_THROWS_AS(find_witness(rc), HypothesisError);

    // dim R_2 = 4.
    IdealFile wide = parse_ideal_string("field Q\nvars x,y,z\nx^2\ny^2\n");
    auto rw = GradedQuotient::build(wide.gens, 3);
    CHECK_THROWS_AS(find_witness(rw), HypothesisError);

    // Not Artinian (dim R_2 = 3 but R_d grows).
    IdealFile open_ray = parse_ideal_string("field Q\nvars x,y,z\nx^2\nx*y\nx*z\n");
    auto ro = GradedQuotient::build(open_ray.gens, 3);
    CHECK_THROWS_AS(find_witness(ro), HypothesisError);
}

TEST_CASE("applicability probes match the worked examples over F_101") {
    GradedQuotient r2 = load_quotient_mod("rank_two_only", 101);
    const Field* f = r2.field();
    CHECK(case2_applicable(r2, unit(f, 4, 3))); // y
    CHECK(case2_applicable(r2, unit(f, 4, 0))); // t

    GradedQuotient r3 = load_quotient_mod("three_directions", 101);
    CHECK(case3_applicable(r3, unit(f, 4, 0))); // t
    CHECK(case3_applicable(r3, unit(f, 4, 2))); // w
    CHECK(!case2_applicable(r3, unit(f, 4, 3))); // y: neither case applies
    CHECK(!case3_applicable(r3, unit(f, 4, 3)));
}

TEST_CASE("applicability probes demand a finite field") {
    GradedQuotient r = load_quotient("rank_two_only");
    auto y = unit(r.field(), 4, 3);
    CHECK_THROWS_AS(case2_applicable(r, y), HypothesisError);
    CHECK_THROWS_AS(case3_applicable(r, y), HypothesisError);
}

TEST_CASE("fixtures keep verifying after reduction mod p") {
    for (std::uint64_t p : {7ull, 101ull}) {
        for (const char* name : {"rank_two_only", "three_directions",
                                 "square_zero_line", "trivial_extension"}) {
            CAPTURE(name);
            CAPTURE(p);
            GradedQuotient r = load_quotient_mod(name, p);
            WitnessOutcome out = find_witness(r, WitnessConfig{.seed = 0});
            check_verified(out, r.nvars());
        }
    }
}

TEST_CASE("mini corpus: every witness verifies, inconclusives are explained") {
    CorpusStats stats = run_corpus(prime_field(101), 4, 12, 7);
    CHECK(stats.nvars == 4);
    CHECK(stats.requested == 12);
    CHECK(stats.produced == 12);
    CHECK(stats.verification_failures == 0);
    CHECK(stats.witnesses + stats.ci + stats.inconclusive == 12);
    CHECK(stats.items.size() == 12);
    unsigned inconclusive = 0;
    for (const auto& item : stats.items) {
        CAPTURE(item.sample_seed);
        if (item.kind == OutcomeKind::Inconclusive) {
            ++inconclusive;
            // An honest failure: the square-zero search exhausted the ladder
            // of extension fields (points can live in degree 7 or 8).
            CHECK(item.detail.find("SEARCH_EXHAUSTED") != std::string::npos);
            // Replay the sample and confirm there really is nothing over the
            // base field.
            auto gens = sample_conforming(prime_field(101), 4, item.sample_seed);
            REQUIRE(gens.has_value());
            auto r = GradedQuotient::build(*gens, 3);
            CHECK_THROWS_AS(
                square_zero_forms(r, SquareZeroSearchOptions{.extension_cap = 1,
                                                             .exhaustive_budget = 2'000'000,
                                                             .seed = 1}),
                InconclusiveError);
        } else {
            CHECK(item.verified);
        }
    }
    CHECK(inconclusive == stats.inconclusive);

    // Determinism: the same seed reproduces the same sample set.
    CorpusStats again = run_corpus(prime_field(101), 4, 12, 7);
    REQUIRE(again.items.size() == stats.items.size());
    for (size_t i = 0; i < stats.items.size(); ++i) {
        CHECK(again.items[i].sample_seed == stats.items[i].sample_seed);
        CHECK(again.items[i].kind == stats.items[i].kind);
    }
}

TEST_CASE("mini corpus over a small prime") {
    CorpusStats stats = run_corpus(prime_field(5), 4, 6, 3);
    CHECK(stats.produced == 6);
    CHECK(stats.verification_failures == 0);
}

TEST_CASE("sampling is deterministic and conforming") {
    const Field* f = prime_field(101);
    int conforming = 0;
    for (std::uint64_t s = 0; s < 40 && conforming < 3; ++s) {
        auto a = sample_conforming(f, 4, s);
        auto b = sample_conforming(f, 4, s);
        REQUIRE(a.has_value() == b.has_value());
        if (!a) continue;
        ++conforming;
        REQUIRE(a->size() == b->size());
        for (size_t i = 0; i < a->size(); ++i) CHECK((*a)[i] == (*b)[i]);
        auto r = GradedQuotient::build(*a, 2);
        CHECK(r.dim(2) == 3);
        CHECK(a->size() == 7); // dim S_2 - 3 for four variables
    }
    CHECK(conforming == 3);
}
