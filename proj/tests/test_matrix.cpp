#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgb/matrix.hpp"

#include <random>

using namespace qgb;

namespace {

Matrix from_ints(const Field* f, const std::vector<std::vector<long>>& rows) {
    Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = f->from_int(rows[i][j]);
    return m;
}

} // namespace

TEST_CASE("rref over Q with deterministic pivots") {
    const Field* q = rationals();
    Matrix m = from_ints(q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    std::vector<std::size_t> pivots;
    Matrix r = m.rref(&pivots);
    CHECK(pivots == std::vector<std::size_t>{0, 1});
    CHECK(m.rank() == 2);
    Matrix want = from_ints(q, {{1, 0, 1}, {0, 1, 1}, {0, 0, 0}});
    CHECK(r == want);
}

TEST_CASE("inverse and identity") {
    const Field* f = prime_field(101);
    Matrix m = from_ints(f, {{2, 1}, {1, 1}});
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK(m * *inv == Matrix::identity(f, 2));
    CHECK(*inv * m == Matrix::identity(f, 2));

    Matrix singular = from_ints(f, {{1, 2}, {2, 4}});
    CHECK(!singular.inverse().has_value());
    CHECK(singular.rank() == 1);
}

TEST_CASE("kernel columns solve the system and satisfy rank-nullity") {
    const Field* q = rationals();
    Matrix m = from_ints(q, {{1, 2, 3, 4}, {0, 1, 1, 1}});
    Matrix k = m.kernel();
    CHECK(m.rank() + k.cols() == m.cols());
    for (std::size_t j = 0; j < k.cols(); ++j) {
        auto v = m.apply(k.col(j));
        for (const auto& s : v) CHECK(s.is_zero());
    }
    // kernel columns are independent
    CHECK(k.rank() == k.cols());

    // full-rank square matrix has trivial kernel
    Matrix inv = from_ints(q, {{2, 1}, {1, 1}});
    CHECK(inv.kernel().cols() == 0);
}

TEST_CASE("solve returns a particular solution with free variables zeroed") {
    const Field* q = rationals();
    Matrix m = from_ints(q, {{1, 2, 3}, {0, 0, 1}});
    std::vector<Scalar> b = {q->from_int(6), q->from_int(1)};
    auto x = m.solve(b);
    REQUIRE(x.has_value());
    auto mx = m.apply(*x);
    CHECK(mx[0].to_string() == "6");
    CHECK(mx[1].to_string() == "1");
    // free column (index 1) stays zero
    CHECK((*x)[1].is_zero());

    // inconsistent system
    Matrix bad = from_ints(q, {{1, 1}, {1, 1}});
    std::vector<Scalar> c = {q->from_int(0), q->from_int(1)};
    CHECK(!bad.solve(c).has_value());
}

TEST_CASE("transpose, stacking, products") {
    const Field* q = rationals();
    Matrix a = from_ints(q, {{1, 2}, {3, 4}});
    Matrix b = from_ints(q, {{0, 1}, {1, 0}});
    CHECK(a.transpose().transpose() == a);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    Matrix h = a.hstack(b);
    CHECK(h.rows() == 2);
    CHECK(h.cols() == 4);
    CHECK(h.at(0, 2).to_string() == "0");
    CHECK(h.at(0, 3).to_string() == "1");
    Matrix v = a.vstack(b);
    CHECK(v.rows() == 4);
    CHECK(v.col(0)[2].to_string() == "0");
}

TEST_CASE("from_rows / from_columns agree via transpose") {
    const Field* f = prime_field(101);
    std::vector<std::vector<Scalar>> data = {
        {f->from_int(1), f->from_int(2)},
        {f->from_int(3), f->from_int(4)},
        {f->from_int(5), f->from_int(6)},
    };
    Matrix r = Matrix::from_rows(f, 2, data);
    Matrix c = Matrix::from_columns(f, 2, data);
    CHECK(r.rows() == 3);
    CHECK(c.cols() == 3);
    CHECK(r.transpose() == c);
}

TEST_CASE("random matrices over F_101: inverse and kernel are consistent") {
    const Field* f = prime_field(101);
    std::mt19937_64 eng(12345);
    for (int iter = 0; iter < 50; ++iter) {
        const std::size_t n = 1 + eng() % 5;
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = f->from_int(static_cast<long>(eng() % 101));
        auto inv = m.inverse();
        if (inv.has_value()) {
            CHECK(m.rank() == n);
            CHECK(m * *inv == Matrix::identity(f, n));
        } else {
            CHECK(m.rank() < n);
            CHECK(m.kernel().cols() == n - m.rank());
        }
    }
}

TEST_CASE("lift_field moves entries between fields") {
    const Field* q = rationals();
    Matrix m = from_ints(q, {{1, -1}, {2, 3}});
    const Field* f = prime_field(101);
    Matrix lifted = m.lift_field(f);
    CHECK(lifted.field() == f);
    CHECK(lifted.at(0, 1).residue() == 100);
    CHECK(lifted.at(1, 1).residue() == 3);
}
