#include "qgb/witness.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>

#include "qgb/groebner.hpp"
#include "qgb/nets.hpp"
#include "qgb/rng.hpp"

namespace qgb {

namespace {

// ---------- small vector helpers ----------

std::vector<Scalar> vec_add(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + b[i];
    return out;
}

std::vector<Scalar> vec_scale(const Scalar& c, const std::vector<Scalar>& a) {
    std::vector<Scalar> out = a;
    for (Scalar& s : out) s = s * c;
    return out;
}

// a + c*b
std::vector<Scalar> vec_add_scaled(const std::vector<Scalar>& a, const Scalar& c,
                                   const std::vector<Scalar>& b) {
    std::vector<Scalar> out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + c * b[i];
    return out;
}

bool vec_zero(const std::vector<Scalar>& v) {
    for (const Scalar& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
           const Field* f) {
    Scalar s = f->zero();
    for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
    return s;
}

std::vector<Scalar> lift_vec(const std::vector<Scalar>& v, const Field* target) {
    std::vector<Scalar> out;
    out.reserve(v.size());
    for (const Scalar& s : v) out.push_back(lift(s, target));
    return out;
}

// ---------- subspace helpers ----------

// product of two linear forms, as coordinates in basis(2)
std::vector<Scalar> prod2(const GradedQuotient& r, const std::vector<Scalar>& a,
                          const std::vector<Scalar>& b) {
    return r.linear_map(a, 1).apply(b);
}

bool in_col_span(const Matrix& m, const std::vector<Scalar>& v) {
    Matrix ext = m.hstack(Matrix::from_columns(m.field(), m.rows(), {v}));
    return ext.rank() == m.rank();
}

// column space of a contained in column space of b
bool col_span_le(const Matrix& a, const Matrix& b) {
    return b.hstack(a).rank() == b.rank();
}

void require_case(bool ok, const std::string& what) {
    if (!ok) throw HypothesisError("CASE_HYPOTHESIS_FAILED: " + what);
}

bool square_zero(const GradedQuotient& r, const std::vector<Scalar>& y) {
    return vec_zero(prod2(r, y, y));
}

// Extend `have` (independent columns) to a basis of F^n using standard basis
// vectors, returned in index order.
std::vector<std::vector<Scalar>> complete_with_std(
    const Field* f, unsigned n, const std::vector<std::vector<Scalar>>& have) {
    std::vector<std::vector<Scalar>> cols = have;
    std::size_t rank = cols.empty() ? 0 : Matrix::from_columns(f, n, cols).rank();
    if (rank != cols.size())
        throw VerificationError("basis completion: the given columns are dependent");
    std::vector<std::vector<Scalar>> added;
    for (unsigned i = 0; i < n && rank < n; ++i) {
        std::vector<Scalar> e(n, f->zero());
        e[i] = f->one();
        cols.push_back(e);
        if (Matrix::from_columns(f, n, cols).rank() == rank + 1) {
            ++rank;
            added.push_back(std::move(e));
        } else {
            cols.pop_back();
        }
    }
    if (rank < n) throw VerificationError("basis completion failed");
    return added;
}

// Greedily extend `have` to a basis of span(space) using vectors of `space`.
std::vector<std::vector<Scalar>> complete_within(
    const Field* f, unsigned n, const std::vector<std::vector<Scalar>>& space,
    const std::vector<std::vector<Scalar>>& have) {
    std::vector<std::vector<Scalar>> cols = have;
    std::size_t rank = cols.empty() ? 0 : Matrix::from_columns(f, n, cols).rank();
    std::vector<std::vector<Scalar>> added;
    for (const auto& v : space) {
        cols.push_back(v);
        if (Matrix::from_columns(f, n, cols).rank() == rank + 1) {
            ++rank;
            added.push_back(v);
        } else {
            cols.pop_back();
        }
    }
    if (rank != space.size() && rank != cols.size())
        throw VerificationError("subspace completion failed");
    return added;
}

// Basis of ann(y) rebuilt so that y is its first element.
std::vector<std::vector<Scalar>> ann_basis_y_first(const GradedQuotient& r,
                                                   const std::vector<Scalar>& y) {
    std::vector<std::vector<Scalar>> ann = r.annihilator(y);
    std::vector<std::vector<Scalar>> out = {y};
    auto rest = complete_within(r.field(), r.nvars(), ann, out);
    out.insert(out.end(), rest.begin(), rest.end());
    if (out.size() != ann.size())
        throw VerificationError("ann(y) does not contain y; y is not square-zero");
    return out;
}

Witness make_witness(const Field* f, unsigned n,
                     const std::vector<std::vector<Scalar>>& cols) {
    Matrix b = Matrix::from_columns(f, n, cols);
    if (!b.inverse()) throw VerificationError("witness basis is singular");
    std::vector<unsigned> pr(n);
    std::iota(pr.begin(), pr.end(), 0u);
    return Witness{std::move(b), std::move(pr), OrderKind::DegRevLex};
}

void trace_step(WitnessTrace* t, const std::string& s) {
    if (t) t->path.push_back(s);
}
void trace_form(WitnessTrace* t, const std::string& k, const std::vector<Scalar>& v) {
    if (t) t->forms[k] = v;
}
void trace_scalar(WitnessTrace* t, const std::string& k, const Scalar& v) {
    if (t) t->scalars[k] = v;
}

// Coordinate functional on R_2 modulo the span of `span_cols` (which must
// have dim 3 together with `complement`): class(v) = coefficient of v on
// `complement` when written over (span_cols, complement).
struct ModSpan {
    Matrix m3inv;
    const Field* f;
    Scalar cls(const std::vector<Scalar>& v) const { return m3inv.apply(v).back(); }
};

ModSpan quotient_functional(const GradedQuotient& r, const Matrix& span_m,
                            const std::vector<Scalar>& complement) {
    const Field* f = r.field();
    // pick independent columns of span_m
    std::vector<std::vector<Scalar>> cols;
    for (std::size_t j = 0; j < span_m.cols() && cols.size() < 3; ++j) {
        cols.push_back(span_m.col(j));
        if (Matrix::from_columns(f, span_m.rows(), cols).rank() != cols.size())
            cols.pop_back();
    }
    cols.push_back(complement);
    Matrix m3 = Matrix::from_columns(f, span_m.rows(), cols);
    auto inv = m3.inverse();
    if (!inv || cols.size() != 3)
        throw VerificationError("quotient functional: bad complement");
    return ModSpan{*inv, f};
}

// ---------- conic point search (for the partner lemma) ----------

Scalar qform(const Matrix& g, const std::vector<Scalar>& u) {
    return dot(u, g.apply(u), g.field());
}

Scalar qpair(const Matrix& g, const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
    return dot(u, g.apply(v), g.field());
}

std::vector<Scalar> normalize_point(std::vector<Scalar> v) {
    for (const Scalar& s : v)
        if (!s.is_zero()) {
            Scalar inv = s.field()->one() / s;
            for (Scalar& t : v) t = t * inv;
            break;
        }
    return v;
}

// Roots of the binary quadratic q00 s^2 + 2 q01 st + q11 t^2 as projective
// directions (s : t).  Throws ExtensionNeeded when the needed square root is
// missing; reports a double root through `double_root`.
std::vector<std::vector<Scalar>> binary_root_directions(const Field* f, const Scalar& q00,
                                                        const Scalar& q01, const Scalar& q11,
                                                        bool* double_root) {
    *double_root = false;
    if (q00.is_zero() && q11.is_zero()) {
        if (q01.is_zero())
            throw VerificationError("binary quadratic vanishes identically");
        return {{f->one(), f->zero()}, {f->zero(), f->one()}};
    }
    if (q00.is_zero()) { // t * (2 q01 s + q11 t)
        return {{f->one(), f->zero()},
                normalize_point({-q11, f->from_int(2) * q01})};
    }
    if (q11.is_zero()) { // s * (q00 s + 2 q01 t)
        return {{f->zero(), f->one()},
                normalize_point({f->from_int(2) * q01, -q00})};
    }
    Scalar disc = q01 * q01 - q00 * q11;
    if (disc.is_zero()) {
        *double_root = true;
        return {normalize_point({-q01, q00})};
    }
    std::optional<Scalar> s = sqrt(disc);
    if (!s)
        throw ExtensionNeeded(
            "QUADRATIC_SOLVE_NEEDS_EXTENSION: binary quadratic is irreducible over " +
            f->name());
    return {normalize_point({(-q01 + *s) / q00, f->one()}),
            normalize_point({(-q01 - *s) / q00, f->one()})};
}

// A point u of the smooth conic u^T g u = 0 in P^2 with phi . u != 0.
std::vector<Scalar> smooth_conic_point(const Matrix& g, const std::vector<Scalar>& phi,
                                       std::uint64_t seed) {
    const Field* f = g.field();
    auto good = [&](const std::vector<Scalar>& u) {
        return qform(g, u).is_zero() && !dot(phi, u, f).is_zero();
    };
    if (f->finite() && f->order() <= 2048) {
        // small field: exhaustive sweep (a smooth conic has q+1 >= 6 points
        // and the line phi = 0 meets it in at most 2, so this must succeed)
        std::vector<Scalar> hit;
        sweep_projective(f, 3, 10'000'000, [&](const std::vector<Scalar>& u) {
            if (good(u)) { hit = u; return true; }
            return false;
        });
        if (!hit.empty()) return hit;
        throw VerificationError("smooth conic sweep found no point off the functional line");
    }
    if (f->finite()) {
        // big field: intersect with seeded random secants; each try succeeds
        // with probability about 1/2
        Rng rng(seed ^ 0xC0711CULL);
        for (int tries = 0; tries < 512; ++tries) {
            std::vector<Scalar> u(3), v(3);
            for (auto& s : u) s = rng.scalar(f);
            for (auto& s : v) s = rng.scalar(f);
            if (vec_zero(v)) continue;
            Scalar c2 = qform(g, v);
            if (c2.is_zero()) {
                if (good(v)) return normalize_point(v);
                continue;
            }
            if (vec_zero(u)) continue;
            Scalar c0 = qform(g, u);
            Scalar c1 = f->from_int(2) * qpair(g, u, v);
            // q(u + x v) = c0 + c1 x + c2 x^2
            Scalar disc = c1 * c1 - f->from_int(4) * c0 * c2;
            std::optional<Scalar> s = sqrt(disc);
            if (!s) continue;
            for (const Scalar& root : {(-c1 + *s) / (f->from_int(2) * c2),
                                       (-c1 - *s) / (f->from_int(2) * c2)}) {
                std::vector<Scalar> p = vec_add_scaled(u, root, v);
                if (!vec_zero(p) && good(p)) return normalize_point(p);
            }
        }
        throw VerificationError(
            "RANDOMNESS_EXHAUSTED: no point found on a smooth conic over a large field");
    }
    // rationals: grid search for any conic point, then rational
    // parametrization through it
    std::vector<std::vector<Scalar>> on_conic;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                std::vector<Scalar> u = {f->from_int(a), f->from_int(b), f->from_int(c)};
                if (!qform(g, u).is_zero()) continue;
                if (good(u)) return normalize_point(u);
                on_conic.push_back(u);
            }
    for (const auto& e : on_conic) {
        // all conic points are e + x d with x = -2 (e^T g d) / q(d)
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b)
                for (long c = -2; c <= 2; ++c) {
                    if (a == 0 && b == 0 && c == 0) continue;
                    std::vector<Scalar> d = {f->from_int(a), f->from_int(b), f->from_int(c)};
                    Scalar qd = qform(g, d);
                    if (qd.is_zero()) continue;
                    Scalar x = -(f->from_int(2) * qpair(g, e, d)) / qd;
                    std::vector<Scalar> p = vec_add_scaled(e, x, d);
                    if (!vec_zero(p) && good(p)) return normalize_point(p);
                }
    }
    throw InconclusiveError(
        "SEARCH_EXHAUSTED: no rational point found on the partner conic "
        "(retry over a finite field)");
}

} // namespace

// ---------- the constructive cases ----------

Witness lemma22_case1(const GradedQuotient& r, const std::vector<Scalar>& y,
                      WitnessTrace* trace) {
    const Field* f = r.field();
    unsigned n = r.nvars();
    require_case(r.dim(2) == 3, "dim R_2 must be 3");
    require_case(square_zero(r, y), "case (1) needs y^2 = 0");
    require_case(r.rank_linear_form(y) == 3, "case (1) needs y of rank 3");
    trace_step(trace, "L-case1");
    trace_form(trace, "y", y);
    std::vector<std::vector<Scalar>> cols = complete_with_std(f, n, {y});
    cols.push_back(y);
    return make_witness(f, n, cols);
}

Witness lemma22_case2(const GradedQuotient& r, const std::vector<Scalar>& y,
                      const std::vector<Scalar>& z, WitnessTrace* trace) {
    const Field* f = r.field();
    unsigned n = r.nvars();
    require_case(r.dim(2) == 3, "dim R_2 must be 3");
    require_case(square_zero(r, y), "case (2) needs y^2 = 0");
    require_case(r.rank_linear_form(y) == 2, "case (2) needs y of rank 2");
    require_case(vec_zero(prod2(r, z, y)), "case (2) needs z in ann(y)");
    Matrix y_r1 = r.linear_map(y, 1);
    require_case(in_col_span(y_r1, prod2(r, z, z)), "case (2) needs z^2 in y*R_1");
    require_case(!col_span_le(r.linear_map(z, 1), y_r1),
                 "case (2) needs z*R_1 not contained in y*R_1");
    require_case(Matrix::from_columns(f, n, {y, z}).rank() == 2,
                 "case (2) needs z independent of y");
    trace_step(trace, "L-case2");
    trace_form(trace, "y", y);
    trace_form(trace, "z", z);
    std::vector<std::vector<Scalar>> cols = complete_with_std(f, n, {y, z});
    cols.push_back(z);
    cols.push_back(y);
    return make_witness(f, n, cols);
}

Witness lemma22_case3(const GradedQuotient& r, const std::vector<Scalar>& y,
                      const std::vector<Scalar>& t, WitnessTrace* trace) {
    const Field* f = r.field();
    unsigned n = r.nvars();
    require_case(r.dim(2) == 3, "dim R_2 must be 3");
    require_case(square_zero(r, y), "case (3) needs y^2 = 0");
    require_case(r.rank_linear_form(y) == 2, "case (3) needs y of rank 2");
    require_case(!vec_zero(prod2(r, t, y)), "case (3) needs t outside ann(y)");
    Matrix y_r1 = r.linear_map(y, 1);
    require_case(in_col_span(y_r1, prod2(r, t, t)), "case (3) needs t^2 in y*R_1");

    std::vector<std::vector<Scalar>> v = ann_basis_y_first(r, y); // dim n-2
    const std::vector<Scalar>* vstar = nullptr;
    for (const auto& vi : v)
        if (!in_col_span(y_r1, prod2(r, t, vi))) { vstar = &vi; break; }
    require_case(vstar != nullptr, "case (3) needs t*ann(y) not contained in y*R_1");

    trace_step(trace, "L-case3");
    trace_form(trace, "y", y);
    trace_form(trace, "t", t);

    // complete (ann(y), t) to a basis by one more vector w
    std::vector<std::vector<Scalar>> span_vt = v;
    span_vt.push_back(t);
    std::vector<std::vector<Scalar>> w_list = complete_with_std(f, n, span_vt);
    if (w_list.size() != 1)
        throw VerificationError("case (3): ann(y) + <t> does not have codimension 1");
    const std::vector<Scalar>& w = w_list[0];

    // sanity: W = {u : u*t in y*R_1} is a hyperplane not contained in
    // ann(y) + <t>; record one of its members involving w
    ModSpan cls = quotient_functional(r, y_r1, prod2(r, t, *vstar));
    // u*t mod y*R_1, as a functional on u
    std::vector<Scalar> functional(n, f->zero());
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Scalar> e(n, f->zero());
        e[i] = f->one();
        functional[i] = cls.cls(prod2(r, e, t));
    }
    Matrix w_space = Matrix::from_rows(f, n, {functional}).kernel(); // n x (n-1)
    bool w_involved = false;
    for (std::size_t j = 0; j < w_space.cols(); ++j) {
        std::vector<std::vector<Scalar>> probe = span_vt;
        probe.push_back(w_space.col(j));
        if (Matrix::from_columns(f, n, probe).rank() == n) {
            trace_form(trace, "u_in_W", w_space.col(j));
            w_involved = true;
            break;
        }
    }
    if (!w_involved)
        throw VerificationError("case (3): every u with u*t in y*R_1 avoids w, "
                                "contradicting t*ann(y) not in y*R_1");

    std::vector<std::vector<Scalar>> cols = {w};
    for (std::size_t i = 1; i < v.size(); ++i) cols.push_back(v[i]); // z_2..z_{n-2}
    cols.push_back(t);
    cols.push_back(y);
    return make_witness(f, n, cols);
}

Witness lemma22_case4(const GradedQuotient& r, const std::vector<Scalar>& y,
                      WitnessTrace* trace, std::uint64_t sweep_budget) {
    const Field* f = r.field();
    unsigned n = r.nvars();
    require_case(r.dim(2) == 3, "dim R_2 must be 3");
    require_case(square_zero(r, y), "case (4) needs y^2 = 0");
    require_case(r.rank_linear_form(y) == 1, "case (4) needs y of rank 1");
    Matrix y_r1 = r.linear_map(y, 1);

    auto suitable = [&](const std::vector<Scalar>& t) {
        if (!in_col_span(y_r1, prod2(r, t, t))) return false;
        return y_r1.hstack(r.linear_map(t, 1)).rank() == 3; // y*R_1 + t*R_1 = R_2
    };

    std::vector<Scalar> t;
    if (f->finite()) {
        sweep_projective(f, n, sweep_budget, [&](const std::vector<Scalar>& cand) {
            if (suitable(cand)) { t = cand; return true; }
            return false;
        });
    } else {
        // small integer grid, first nonzero coordinate fixed to 1
        std::vector<Scalar> cand(n, f->zero());
        std::function<bool(unsigned, bool)> rec = [&](unsigned i, bool lead) -> bool {
            if (i == n) return lead && suitable(cand);
            if (!lead) {
                cand[i] = f->one();
                if (rec(i + 1, true)) return true;
                cand[i] = f->zero();
                return rec(i + 1, false);
            }
            for (long a = -2; a <= 2; ++a) {
                cand[i] = f->from_int(a);
                if (rec(i + 1, true)) return true;
            }
            cand[i] = f->zero();
            return false;
        };
        if (rec(0, false)) t = cand;
    }
    if (t.empty()) {
        if (f->finite())
            throw ExtensionNeeded(
                "QUADRATIC_SOLVE_NEEDS_EXTENSION: case (4) found no t with t^2 in y*R_1 "
                "and y*R_1 + t*R_1 = R_2 over " + f->name());
        throw InconclusiveError(
            "SEARCH_EXHAUSTED: case (4) found no suitable t in the rational grid");
    }

    trace_step(trace, "L-case4");
    trace_form(trace, "y", y);
    trace_form(trace, "t", t);

    std::vector<std::vector<Scalar>> cols = {t};
    for (auto& x : complete_with_std(f, n, {y, t})) cols.push_back(std::move(x));
    cols.push_back(y);
    Witness w = make_witness(f, n, cols);

    // the proof splits on which generators carry the leading terms; verify the
    // primary order and fall back to the variant with t below the completion
    VerifyReport first = verify_witness(r.generators(), w, false);
    if (first.ok) return w;
    std::vector<std::vector<Scalar>> alt = complete_with_std(f, n, {y, t});
    alt.push_back(t);
    alt.push_back(y);
    Witness w2 = make_witness(f, n, alt);
    VerifyReport second = verify_witness(r.generators(), w2, false);
    if (second.ok) {
        trace_step(trace, "L-case4-alt-order");
        return w2;
    }
    throw VerificationError("VERIFICATION_FAILED: case (4) basis is not quadratic: " +
                            first.failure);
}

std::vector<Scalar> lemma23_partner(const GradedQuotient& s,
                                    const std::vector<Scalar>& z, std::uint64_t seed) {
    const Field* f = s.field();
    if (s.dim(1) != 3 || s.dim(2) != 1 || !s.artinian())
        throw HypothesisError("partner search needs an Artinian quotient with "
                              "Hilbert function 1, 3, 1");
    if (vec_zero(prod2(s, z, z)))
        throw HypothesisError("partner search needs z with z^2 != 0");

    // Gram matrix of the squaring form and the multiply-by-z functional on
    // the 3-dimensional space S_1 (S_2 is one-dimensional).
    Matrix g(f, 3, 3);
    std::vector<Scalar> phi(3, f->zero());
    for (unsigned i = 0; i < 3; ++i) {
        std::vector<Scalar> ei(3, f->zero());
        ei[i] = f->one();
        phi[i] = prod2(s, ei, z)[0];
        for (unsigned j = 0; j < 3; ++j) {
            std::vector<Scalar> ej(3, f->zero());
            ej[j] = f->one();
            g.at(i, j) = prod2(s, ei, ej)[0];
        }
    }
    if (vec_zero(phi))
        throw VerificationError("partner search: multiplication by z vanishes on S_1 "
                                "although z^2 != 0");

    auto good = [&](const std::vector<Scalar>& u) {
        return qform(g, u).is_zero() && !dot(phi, u, f).is_zero();
    };
    auto finish = [&](std::vector<Scalar> u) {
        u = normalize_point(std::move(u));
        if (!good(u))
            throw VerificationError("partner search produced a bad candidate");
        return u;
    };

    std::size_t rank = g.rank();
    if (rank == 0) {
        for (unsigned i = 0; i < 3; ++i)
            if (!phi[i].is_zero()) {
                std::vector<Scalar> u(3, f->zero());
                u[i] = f->one();
                return finish(u);
            }
    } else if (rank == 1) {
        // double line v.u = 0
        std::vector<Scalar> v;
        for (unsigned i = 0; i < 3 && v.empty(); ++i)
            if (!vec_zero(g.row(i))) v = g.row(i);
        if (Matrix::from_rows(f, 3, {v, phi}).rank() == 1)
            throw VerificationError(
                "partner hypothesis violated: the squaring form is the square of the "
                "multiply-by-z functional");
        Matrix ker = Matrix::from_rows(f, 3, {v}).kernel(); // 3 x 2
        for (const auto& cand : {ker.col(0), ker.col(1), vec_add(ker.col(0), ker.col(1))})
            if (!dot(phi, cand, f).is_zero()) return finish(cand);
        throw VerificationError("partner search: functional vanishes on the double line");
    } else if (rank == 2) {
        // two lines through the kernel point m
        std::vector<Scalar> m = g.kernel().col(0);
        // complete m with two standard vectors
        std::vector<std::vector<Scalar>> comp;
        for (unsigned i = 0; i < 3 && comp.size() < 2; ++i) {
            std::vector<Scalar> e(3, f->zero());
            e[i] = f->one();
            comp.push_back(e);
            std::vector<std::vector<Scalar>> probe = comp;
            probe.push_back(m);
            if (Matrix::from_columns(f, 3, probe).rank() != probe.size()) comp.pop_back();
        }
        Scalar q00 = qform(g, comp[0]);
        Scalar q01 = qpair(g, comp[0], comp[1]);
        Scalar q11 = qform(g, comp[1]);
        bool double_root = false;
        std::vector<std::vector<Scalar>> dirs;
        try {
            dirs = binary_root_directions(f, q00, q01, q11, &double_root);
        } catch (const ExtensionNeeded&) {
            // conjugate lines: the only rational point of the conic is m
            if (!dot(phi, m, f).is_zero()) return finish(m);
            throw;
        }
        if (double_root)
            throw VerificationError("partner search: rank-2 conic degenerated to a "
                                    "double line");
        for (const auto& d : dirs) {
            std::vector<Scalar> c =
                vec_add(vec_scale(d[0], comp[0]), vec_scale(d[1], comp[1]));
            for (const auto& cand : {c, m, vec_add(c, m)})
                if (!dot(phi, cand, f).is_zero()) return finish(cand);
        }
        throw VerificationError("partner search: functional vanishes on both lines");
    }
    return finish(smooth_conic_point(g, phi, seed));
}

namespace {

// forward declaration: the rank-2 walk can restart its first case
Witness prop21_case1_body(const GradedQuotient& r, const std::vector<Scalar>& y,
                          const std::vector<Scalar>& z, WitnessTrace* trace,
                          std::uint64_t seed, std::uint64_t sweep_budget);

// V*R_1 contained in y*R_1: the distinguished-frame walk.
Witness prop21_case3_body(const GradedQuotient& r, const std::vector<Scalar>& y,
                          const std::vector<std::vector<Scalar>>& vbasis,
                          WitnessTrace* trace, std::uint64_t seed,
                          std::uint64_t sweep_budget) {
    const Field* f = r.field();
    unsigned n = r.nvars();
    trace_step(trace, "P-case3");

    GradedQuotient a = quotient_by_forms(r, vbasis);
    if (a.dim(1) != 2 || a.dim(2) != 1)
        throw VerificationError("rank-2 walk: R/ann(y) does not have Hilbert "
                                "function 1, 2, 1");

    // squaring form on the 2-dimensional A_1; its two root directions lift to
    // the frame vectors t and w.  A_1 coordinates are over variable monomials,
    // so a direction lifts by placing its entries at those variables.
    std::vector<unsigned> avars;
    for (const Monomial& m : a.basis(1))
        for (unsigned vv = 0; vv < n; ++vv)
            if (m[vv] == 1) avars.push_back(vv);
    auto alift = [&](const std::vector<Scalar>& c) {
        std::vector<Scalar> out(n, f->zero());
        for (unsigned i = 0; i < c.size(); ++i) out[avars[i]] = out[avars[i]] + c[i];
        return out;
    };
    std::vector<Scalar> ea = {f->one(), f->zero()}, eb = {f->zero(), f->one()};
    Scalar q00 = prod2(a, ea, ea)[0];
    Scalar q01 = prod2(a, ea, eb)[0];
    Scalar q11 = prod2(a, eb, eb)[0];
    if (q00.is_zero() && q01.is_zero() && q11.is_zero())
        throw VerificationError("rank-2 walk: the squaring form on R/ann(y) vanishes, "
                                "which polarization forbids in characteristic != 2");
    bool double_root = false;
    std::vector<std::vector<Scalar>> dirs =
        binary_root_directions(f, q00, q01, q11, &double_root);
    if (double_root)
        throw VerificationError("rank-2 walk: squaring form has a double root, which "
                                "would make the quotient non-Artinian");
    std::sort(dirs.begin(), dirs.end(), [](const auto& x, const auto& yv) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            int c = cmp(x[i], yv[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    std::vector<Scalar> t = alift(vec_add(vec_scale(dirs[0][0], ea), vec_scale(dirs[0][1], eb)));
    std::vector<Scalar> w = alift(vec_add(vec_scale(dirs[1][0], ea), vec_scale(dirs[1][1], eb)));

    Matrix y_r1 = r.linear_map(y, 1);
    if (!in_col_span(y_r1, prod2(r, t, t)) || !in_col_span(y_r1, prod2(r, w, w)))
        throw VerificationError("rank-2 walk: frame squares left y*R_1");

    // R_2 = <ty, wy, wt>
    std::vector<Scalar> ty = prod2(r, t, y), wy = prod2(r, w, y), wt = prod2(r, w, t);
    Matrix m3 = Matrix::from_columns(f, 3, {ty, wy, wt});
    auto m3inv = m3.inverse();
    if (!m3inv)
        throw VerificationError("rank-2 walk: (ty, wy, wt) is not a basis of R_2");
    auto lambda_of = [&](const std::vector<Scalar>& v2) {
        std::vector<Scalar> c = m3inv->apply(v2);
        if (!c[2].is_zero())
            throw VerificationError("rank-2 walk: a product escaped y*R_1");
        return std::pair<Scalar, Scalar>(c[0], c[1]);
    };

    // candidates z: the non-y basis vectors of V and their pairwise sums (the
    // sums make the all-branches-empty certificate polarization-complete)
    std::vector<std::vector<Scalar>> cands(vbasis.begin() + 1, vbasis.end());
    const std::size_t nbase = cands.size();
    for (std::size_t i = 0; i < nbase; ++i)
        for (std::size_t j = i + 1; j < nbase; ++j)
            cands.push_back(vec_add(cands[i], cands[j]));

    bool needs_extension = false;
    bool any_branch = false;
    std::vector<std::pair<Scalar, Scalar>> first_lambda;

    for (const auto& z : cands) {
        auto [l11, l12] = lambda_of(prod2(r, z, z));
        auto [l21, l22] = lambda_of(prod2(r, t, t));
        auto [l31, l32] = lambda_of(prod2(r, w, w));
        auto [l41, l42] = lambda_of(prod2(r, z, w));
        auto [l51, l52] = lambda_of(prod2(r, z, t));
        if (first_lambda.empty())
            first_lambda = {{l11, l12}, {l21, l22}, {l31, l32}, {l41, l42}, {l51, l52}};

        auto record = [&](const char* branch) {
            trace_form(trace, "case3_y", y);
            trace_form(trace, "case3_z", z);
            trace_form(trace, "case3_t", t);
            trace_form(trace, "case3_w", w);
            const Scalar* ls[10] = {&l11, &l12, &l21, &l22, &l31, &l32, &l41, &l42, &l51, &l52};
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 2; ++j)
                    trace_scalar(trace, "lambda_" + std::to_string(i + 1) + "_" +
                                            std::to_string(j + 1),
                                 *ls[2 * i + j]);
            trace_step(trace, branch);
        };

        // l = t + a z + b y needs l22 + 2a l52 + a^2 l12 = 0
        if (!l12.is_zero() || !l52.is_zero()) {
            any_branch = true;
            std::vector<Scalar> roots;
            if (l12.is_zero()) {
                roots.push_back(-l22 / (f->from_int(2) * l52));
            } else {
                Scalar disc = l52 * l52 - l12 * l22;
                std::optional<Scalar> sq = sqrt(disc);
                if (!sq) {
                    needs_extension = true;
                } else {
                    roots.push_back((-l52 + *sq) / l12);
                    if (!sq->is_zero()) roots.push_back((-l52 - *sq) / l12);
                }
            }
            for (const Scalar& aa : roots) {
                record("P-case3-t-branch");
                trace_scalar(trace, "a", aa);
                Scalar bb = -(l21 + f->from_int(2) * aa * l51 + aa * aa * l11) /
                            f->from_int(2);
                trace_scalar(trace, "b", bb);
                std::vector<Scalar> ell = vec_add_scaled(vec_add_scaled(t, aa, z), bb, y);
                if (!vec_zero(prod2(r, ell, ell)))
                    throw VerificationError("rank-2 walk: l = t + a z + b y is not "
                                            "square-zero");
                unsigned rk = r.rank_linear_form(ell);
                trace_form(trace, "ell", ell);
                if (rk == 3) return lemma22_case1(r, ell, trace);
                if (rk == 2) {
                    if (!(l52 + aa * l12).is_zero() || !(l22 + aa * l52).is_zero())
                        throw VerificationError("rank-2 walk: rank-2 l violates the "
                                                "vanishing relations");
                    Scalar gamma = -l51 - aa * l11;
                    trace_scalar(trace, "gamma", gamma);
                    std::vector<Scalar> z2 = vec_add_scaled(z, gamma, y);
                    if (!vec_zero(prod2(r, z2, ell)))
                        throw VerificationError("rank-2 walk: adjusted z is not in ann(l)");
                    if (in_col_span(r.linear_map(ell, 1), prod2(r, z2, z2)))
                        throw VerificationError("rank-2 walk: adjusted z has square in "
                                                "l*R_1 after restart");
                    trace_step(trace, "P-case3-restart");
                    return prop21_case1_body(r, ell, z2, trace, seed, sweep_budget);
                }
                throw VerificationError("rank-2 walk: l = t + a z + b y has rank < 2");
            }
        }
        // l = w + a z + b y needs l31 + 2a l41 + a^2 l11 = 0
        if (!l11.is_zero() || !l41.is_zero()) {
            any_branch = true;
            std::vector<Scalar> roots;
            if (l11.is_zero()) {
                roots.push_back(-l31 / (f->from_int(2) * l41));
            } else {
                Scalar disc = l41 * l41 - l11 * l31;
                std::optional<Scalar> sq = sqrt(disc);
                if (!sq) {
                    needs_extension = true;
                } else {
                    roots.push_back((-l41 + *sq) / l11);
                    if (!sq->is_zero()) roots.push_back((-l41 - *sq) / l11);
                }
            }
            for (const Scalar& aa : roots) {
                record("P-case3-w-branch");
                trace_scalar(trace, "a", aa);
                Scalar bb = -(l32 + f->from_int(2) * aa * l42 + aa * aa * l12) /
                            f->from_int(2);
                trace_scalar(trace, "b", bb);
                std::vector<Scalar> ell = vec_add_scaled(vec_add_scaled(w, aa, z), bb, y);
                if (!vec_zero(prod2(r, ell, ell)))
                    throw VerificationError("rank-2 walk: l = w + a z + b y is not "
                                            "square-zero");
                unsigned rk = r.rank_linear_form(ell);
                trace_form(trace, "ell", ell);
                if (rk == 3) return lemma22_case1(r, ell, trace);
                if (rk == 2) {
                    if (!(l41 + aa * l11).is_zero() || !(l31 + aa * l41).is_zero())
                        throw VerificationError("rank-2 walk: rank-2 l violates the "
                                                "vanishing relations");
                    Scalar gamma = -(l42 + aa * l12);
                    trace_scalar(trace, "gamma", gamma);
                    std::vector<Scalar> z2 = vec_add_scaled(z, gamma, y);
                    if (!vec_zero(prod2(r, z2, ell)))
                        throw VerificationError("rank-2 walk: adjusted z is not in ann(l)");
                    if (in_col_span(r.linear_map(ell, 1), prod2(r, z2, z2)))
                        throw VerificationError("rank-2 walk: adjusted z has square in "
                                                "l*R_1 after restart");
                    trace_step(trace, "P-case3-restart");
                    return prop21_case1_body(r, ell, z2, trace, seed, sweep_budget);
                }
                throw VerificationError("rank-2 walk: l = w + a z + b y has rank < 2");
            }
        }
    }

    if (needs_extension)
        throw ExtensionNeeded("QUADRATIC_SOLVE_NEEDS_EXTENSION: rank-2 walk could not "
                              "split a quadratic over " + f->name());
    if (any_branch)
        throw VerificationError("rank-2 walk: applicable branches all failed");

    // every candidate has lambda_{1,*} = lambda_{4,1} = lambda_{5,2} = 0:
    // then V^2 = 0 and y_1 = z - lambda_{4,2} y is a rank-1 square-zero form
    for (std::size_t i = 0; i < vbasis.size(); ++i)
        for (std::size_t j = i; j < vbasis.size(); ++j)
            if (!vec_zero(prod2(r, vbasis[i], vbasis[j])))
                throw VerificationError("rank-2 walk: V^2 != 0 although no branch "
                                        "applied");
    const std::vector<Scalar>& z0 = cands[0];
    Scalar l42 = lambda_of(prod2(r, z0, w)).second;
    Scalar l51 = lambda_of(prod2(r, z0, t)).first;
    std::vector<Scalar> y1 = vec_add_scaled(z0, -l42, y);
    trace_step(trace, "P-case3-y1");
    trace_form(trace, "y1", y1);
    trace_scalar(trace, "lambda_4_2", l42);
    trace_scalar(trace, "lambda_5_1", l51);
    if (!square_zero(r, y1))
        throw VerificationError("rank-2 walk: y_1 is not square-zero");
    unsigned rk = r.rank_linear_form(y1);
    if (rk == 0)
        throw VerificationError("rank-2 walk: y_1 has rank 0 in a reduced algebra");
    if (rk != 1)
        throw VerificationError("rank-2 walk: y_1 does not have rank 1");
    return lemma22_case4(r, y1, trace, sweep_budget);
}

Witness prop21_case1_body(const GradedQuotient& r, const std::vector<Scalar>& y,
                          const std::vector<Scalar>& z, WitnessTrace* trace,
                          std::uint64_t seed, [[maybe_unused]] std::uint64_t sweep_budget) {
    const Field* f = r.field();
    unsigned n = r.nvars();
    trace_step(trace, "P-case1");
    trace_form(trace, "y", y);
    trace_form(trace, "z", z);

    Matrix y_r1 = r.linear_map(y, 1);
    std::vector<Scalar> z_sq = prod2(r, z, z);
    if (in_col_span(y_r1, z_sq))
        throw VerificationError("rank-2 walk case 1 needs z^2 outside y*R_1");

    std::vector<std::vector<Scalar>> v = ann_basis_y_first(r, y);
    std::vector<std::vector<Scalar>> zi =
        complete_within(f, n, v, {y, z}); // n - 4 further vectors

    ModSpan cls = quotient_functional(r, y_r1, z_sq); // class: [v] = cls(v) * [z^2]

    // adjust each z_i so that its square lands in y*R_1:
    // (z_i - a z)^2 = (A_i - 2 a B_i + a^2) z^2 mod y*R_1
    std::vector<std::vector<Scalar>> adjusted;
    for (std::size_t i = 0; i < zi.size(); ++i) {
        Scalar ai = cls.cls(prod2(r, zi[i], zi[i]));
        Scalar bi = cls.cls(prod2(r, zi[i], z));
        trace_scalar(trace, "A_" + std::to_string(i + 2), ai);
        trace_scalar(trace, "B_" + std::to_string(i + 2), bi);
        Scalar disc = bi * bi - ai;
        std::optional<Scalar> sq = sqrt(disc);
        if (!sq)
            throw ExtensionNeeded(
                "QUADRATIC_SOLVE_NEEDS_EXTENSION: adjusting a socle candidate needs a "
                "square root missing over " + f->name());
        Scalar root1 = bi + *sq, root2 = bi - *sq;
        Scalar a = cmp(root1, root2) <= 0 ? root1 : root2;
        std::vector<Scalar> adj = vec_add_scaled(zi[i], -a, z);
        if (!cls.cls(prod2(r, adj, adj)).is_zero())
            throw VerificationError("rank-2 walk case 1: adjusted square left y*R_1");
        trace_form(trace, "z_" + std::to_string(i + 2), adj);
        adjusted.push_back(std::move(adj));
    }

    for (const auto& cand : adjusted)
        if (!col_span_le(r.linear_map(cand, 1), y_r1))
            return lemma22_case2(r, y, cand, trace);

    // all adjusted vectors are socle modulo y: pass to the Hilbert 1,3,1
    // quotient and find the partner of z
    std::vector<std::vector<Scalar>> cut = {y};
    cut.insert(cut.end(), adjusted.begin(), adjusted.end());
    GradedQuotient s = quotient_by_forms(r, cut);
    if (s.dim(1) != 3 || s.dim(2) != 1)
        throw VerificationError("rank-2 walk case 1: socle quotient is not 1, 3, 1");
    trace_step(trace, "L-partner");

    std::vector<unsigned> svars;
    for (const Monomial& m : s.basis(1))
        for (unsigned vv = 0; vv < n; ++vv)
            if (m[vv] == 1) svars.push_back(vv);
    std::vector<Scalar> z_in_s = s.nf_coords(r.linear_form(z), 1);
    std::vector<Scalar> u_s = lemma23_partner(s, z_in_s, seed);
    std::vector<Scalar> u(n, f->zero());
    for (unsigned i = 0; i < 3; ++i) u[svars[i]] = u[svars[i]] + u_s[i];
    trace_form(trace, "partner", u);

    if (!in_col_span(y_r1, prod2(r, u, u)))
        throw VerificationError("rank-2 walk case 1: partner square left y*R_1");
    if (in_col_span(y_r1, prod2(r, u, z)))
        throw VerificationError("rank-2 walk case 1: partner product with z fell into "
                                "y*R_1");
    if (vec_zero(prod2(r, u, y))) return lemma22_case2(r, y, u, trace);
    return lemma22_case3(r, y, u, trace);
}

} // namespace

Witness prop21_rank2(const GradedQuotient& r, const std::vector<Scalar>& y,
                     WitnessTrace* trace, std::uint64_t seed,
                     std::uint64_t sweep_budget) {
    require_case(r.dim(2) == 3, "dim R_2 must be 3");
    require_case(square_zero(r, y), "rank-2 walk needs y^2 = 0");
    require_case(r.rank_linear_form(y) == 2, "rank-2 walk needs y of rank 2");
    trace_step(trace, "P-rank2");

    Matrix y_r1 = r.linear_map(y, 1);
    std::vector<std::vector<Scalar>> v = ann_basis_y_first(r, y);

    // z in V with z^2 outside y*R_1?  (basis vectors and their pairwise sums
    // decide this: if all those squares lie in y*R_1, polarization puts all
    // of V^2 there)
    std::vector<std::vector<Scalar>> cands(v.begin() + 1, v.end());
    const std::size_t nbase = cands.size();
    for (std::size_t i = 0; i < nbase; ++i)
        for (std::size_t j = i + 1; j < nbase; ++j)
            cands.push_back(vec_add(cands[i], cands[j]));
    for (const auto& z : cands)
        if (!in_col_span(y_r1, prod2(r, z, z)))
            return prop21_case1_body(r, y, z, trace, seed, sweep_budget);

    // V^2 in y*R_1; is some z*R_1 outside?
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!col_span_le(r.linear_map(v[i], 1), y_r1)) {
            trace_step(trace, "P-case2");
            return lemma22_case2(r, y, v[i], trace);
        }

    // V*R_1 inside y*R_1
    return prop21_case3_body(r, y, v, trace, seed, sweep_budget);
}

VerifyReport verify_witness(const std::vector<Polynomial>& gens, const Witness& w,
                            bool require_r3_zero) {
    VerifyReport rep;
    const unsigned n = static_cast<unsigned>(w.basis.rows());
    auto inv = w.basis.inverse();
    if (!inv) {
        rep.failure = "witness basis is singular";
        return rep;
    }
    Matrix rows_m = inv->transpose();
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(n);
    for (unsigned i = 0; i < n; ++i) rows.push_back(rows_m.row(i));
    TermOrder ord(w.kind, w.priority);
    std::vector<Polynomial> moved;
    moved.reserve(gens.size());
    for (const Polynomial& g : gens) moved.push_back(g.substitute_linear(rows, ord));

    GBResult res = buchberger(moved);
    rep.reduced = res.basis;
    for (const Polynomial& g : rep.reduced)
        rep.max_degree = std::max(rep.max_degree, g.deg());
    rep.quadratic = is_quadratic_gb(rep.reduced);
    if (!rep.quadratic) {
        for (const Polynomial& g : rep.reduced)
            if (g.deg() > 2) {
                rep.failure = "reduced basis contains " +
                              g.to_string(default_names(n)) + " of degree " +
                              std::to_string(g.deg());
                break;
            }
        return rep;
    }
    if (require_r3_zero) {
        rep.dim_r3 = rep.reduced.empty()
                         ? -1
                         : static_cast<long>(standard_monomials(rep.reduced, 3).size());
        if (rep.dim_r3 != 0) {
            rep.failure = "degree-3 standard monomials remain";
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

std::optional<Witness> search_quadratic_witness(
    const std::vector<Polynomial>& gens, unsigned random_changes, std::uint64_t seed,
    const std::vector<std::vector<Scalar>>& pinned) {
    if (gens.empty()) return std::nullopt;
    const Field* f = gens[0].field();
    const unsigned n = gens[0].nvars();

    std::vector<std::vector<unsigned>> priorities;
    if (n == 3) {
        priorities = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    } else {
        priorities.push_back(std::vector<unsigned>(n));
        std::iota(priorities.back().begin(), priorities.back().end(), 0u);
    }

    auto try_basis = [&](const Matrix& b) -> std::optional<Witness> {
        auto inv = b.inverse();
        if (!inv) return std::nullopt;
        Matrix rows_m = inv->transpose();
        std::vector<std::vector<Scalar>> rows;
        for (unsigned i = 0; i < n; ++i) rows.push_back(rows_m.row(i));
        for (const auto& pr : priorities) {
            TermOrder ord(OrderKind::DegRevLex, pr);
            std::vector<Polynomial> moved;
            for (const Polynomial& g : gens) moved.push_back(g.substitute_linear(rows, ord));
            GBResult res = buchberger(moved, 2);
            if (res.capped) continue;
            std::vector<Polynomial> red = reduced_basis(res.basis);
            if (is_quadratic_gb(red)) return Witness{b, pr, OrderKind::DegRevLex};
        }
        return std::nullopt;
    };

    if (auto w = try_basis(Matrix::identity(f, n))) return w;
    if (!pinned.empty()) {
        std::vector<std::vector<Scalar>> cols = pinned;
        Matrix pm = Matrix::from_columns(f, n, cols);
        if (pm.rank() == cols.size()) {
            for (auto& e : complete_with_std(f, n, cols)) cols.push_back(std::move(e));
            if (auto w = try_basis(Matrix::from_columns(f, n, cols))) return w;
        }
    }
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + 0x517CC1B7ULL);
    for (unsigned i = 0; i < random_changes; ++i) {
        Matrix b = rng.invertible(f, n);
        if (!pinned.empty() && i % 2 == 0) {
            for (std::size_t j = 0; j < pinned.size() && j < n; ++j)
                for (unsigned row = 0; row < n; ++row) b.at(row, j) = pinned[j][row];
            if (!b.inverse()) continue;
        }
        if (auto w = try_basis(b)) return w;
    }
    return std::nullopt;
}

CIException classify_n3(const GradedQuotient& r0, const WitnessConfig& cfg) {
    if (r0.nvars() != 3)
        throw HypothesisError("NOT_CI: the complete-intersection classification needs "
                              "exactly 3 variables");
    if (!quadratic_presentation(r0.generators()))
        throw HypothesisError("NOT_CI: presentation is not quadratic");
    GradedQuotient r = r0.max_degree() >= 3 ? r0 : GradedQuotient::build(r0.generators(), 3);
    if (!r.artinian())
        throw HypothesisError("NOT_CI: quotient is not Artinian");
    if (r.dim(1) != 3 || r.dim(2) != 3 || r.dim(3) != 1)
        throw HypothesisError("NOT_CI: Hilbert function is not 1, 3, 3, 1");

    // span of the quadric space as a net
    std::vector<std::vector<Scalar>> rows;
    for (const Polynomial& g : r.generators()) {
        // coordinates over x^2, y^2, z^2, xy, xz, yz
        rows.push_back(std::vector<Scalar>(6, r.field()->zero()));
        for (const Term& t : g.terms()) {
            unsigned idx;
            const Monomial& m = t.mono;
            if (m[0] == 2) idx = 0;
            else if (m[1] == 2) idx = 1;
            else if (m[2] == 2) idx = 2;
            else if (m[0] == 1 && m[1] == 1) idx = 3;
            else if (m[0] == 1 && m[2] == 1) idx = 4;
            else idx = 5;
            rows.back()[idx] = t.coef;
        }
    }
    Matrix span = Matrix::from_rows(r.field(), 6, rows);
    Matrix rr = span.rref(nullptr);
    std::vector<std::vector<Scalar>> net_rows;
    for (std::size_t i = 0; i < rr.rows() && net_rows.size() < 3; ++i)
        if (!vec_zero(rr.row(i))) net_rows.push_back(rr.row(i));
    if (net_rows.size() != 3)
        throw HypothesisError("NOT_CI: the quadric space does not have dimension 3");
    Net net = net_from_quadrics([&] {
        std::vector<Polynomial> qs;
        TermOrder ord(OrderKind::DegRevLex, 3);
        for (const auto& row : net_rows) {
            std::vector<Term> terms;
            const std::array<std::array<std::uint32_t, 3>, 6> exps = {{
                {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1},
            }};
            for (unsigned c = 0; c < 6; ++c)
                if (!row[c].is_zero())
                    terms.push_back(Term{
                        Monomial(std::vector<std::uint32_t>(exps[c].begin(), exps[c].end())),
                        row[c]});
            qs.push_back(Polynomial::from_terms(r.field(), ord, std::move(terms)));
        }
        return qs;
    }());

    Count q = count_square_lines(net, cfg.seed);
    CIException ci;
    ci.square_lines = q.infinite ? kInfinitelyMany : q.value;
    ci.gquadratic = q.infinite || q.value >= 1;
    if (!ci.gquadratic) return ci;

    // pin the square lines the base field can see
    std::vector<std::vector<Scalar>> pinned;
    const Field* f = r.field();
    if (f->finite() && f->order() <= 1024) {
        sweep_projective(f, 3, 2'000'000, [&](const std::vector<Scalar>& l) {
            std::vector<Scalar> sq = {l[0] * l[0], l[1] * l[1], l[2] * l[2],
                                      f->from_int(2) * l[0] * l[1],
                                      f->from_int(2) * l[0] * l[2],
                                      f->from_int(2) * l[1] * l[2]};
            Matrix ext = net.m.vstack(Matrix::from_rows(f, 6, {sq}));
            if (ext.rank() == 3) {
                std::vector<std::vector<Scalar>> probe = pinned;
                probe.push_back(l);
                if (Matrix::from_columns(f, 3, probe).rank() == probe.size())
                    pinned.push_back(l);
            }
            return pinned.size() >= 3;
        });
    }
    ci.witness = search_quadratic_witness(r.generators(), cfg.n3_random_changes,
                                          cfg.seed, pinned);
    if (ci.witness && !verify_witness(r.generators(), *ci.witness, false).ok)
        ci.witness.reset();
    ci.search_failed = !ci.witness;
    return ci;
}

namespace {

std::vector<const Field*> ladder_fields(const Field* base, unsigned cap) {
    std::vector<const Field*> out = {base};
    if (base->kind() == FieldKind::Prime)
        for (unsigned k = 2; k <= cap; ++k)
            out.push_back(extension_field(base->characteristic(), k));
    return out;
}

Witness compose_with_reduction(const TrivialExtensionReduction& red,
                               const Witness& core_w, const Field* fk, unsigned n) {
    Matrix embed = red.embed.field() == fk ? red.embed : red.embed.lift_field(fk);
    Matrix left = embed * core_w.basis; // n x m
    std::vector<std::vector<Scalar>> cols;
    for (std::size_t j = 0; j < left.cols(); ++j) cols.push_back(left.col(j));
    for (const auto& rem : red.removed_basis) cols.push_back(lift_vec(rem, fk));
    Matrix b = Matrix::from_columns(fk, n, cols);
    std::vector<unsigned> pr = core_w.priority;
    for (unsigned i = static_cast<unsigned>(left.cols()); i < n; ++i) pr.push_back(i);
    return Witness{std::move(b), std::move(pr), core_w.kind};
}

} // namespace

WitnessOutcome find_witness(const GradedQuotient& r0, const WitnessConfig& cfg) {
    if (!quadratic_presentation(r0.generators()))
        throw HypothesisError("HYPOTHESIS_VIOLATION: the presentation is not quadratic");
    GradedQuotient r = r0.max_degree() >= 3 ? r0 : GradedQuotient::build(r0.generators(), 3);
    if (!r.artinian())
        throw HypothesisError("HYPOTHESIS_VIOLATION: the quotient is not Artinian");
    if (r.dim(2) != 3)
        throw HypothesisError("HYPOTHESIS_VIOLATION: dim R_2 = " +
                              std::to_string(r.dim(2)) + ", the pipeline needs 3");

    const unsigned n = r.nvars();
    TrivialExtensionReduction red = trivial_extension_reduce(r);
    const unsigned m = red.core.nvars();
    if (m < 3)
        throw VerificationError("trivial reduction produced fewer than 3 core "
                                "variables although dim R_2 = 3");

    WitnessOutcome out;
    if (m == 3) {
        CIException ci = classify_n3(red.core, cfg);
        out.kind = OutcomeKind::CI;
        out.trace.work_field = r.field();
        out.trace.path.push_back("CI");
        if (ci.witness) {
            Witness composed = compose_with_reduction(red, *ci.witness, r.field(), n);
            VerifyReport check = verify_witness(r.generators(), composed, false);
            if (!check.ok)
                throw VerificationError("VERIFICATION_FAILED: " + check.failure);
            ci.witness = composed;
            out.witness = composed;
            out.verification = check;
        }
        out.ci = ci;
        return out;
    }

    std::vector<std::string> reasons;
    for (const Field* fk : ladder_fields(r.field(), cfg.extension_cap)) {
        GradedQuotient core = fk == r.field() ? red.core : red.core.lift_field(fk);
        SquareZeroSearchOptions opts;
        opts.extension_cap = 1; // the ladder out here does the escalating
        opts.exhaustive_budget = cfg.sweep_budget;
        opts.seed = cfg.seed;
        SquareZeroForms classes;
        try {
            classes = square_zero_forms(core, opts);
        } catch (const InconclusiveError& e) {
            reasons.push_back(std::string(e.what()) + " [" + fk->name() + "]");
            continue;
        }
        if (classes.classes.empty())
            throw VerificationError("square-zero search returned an empty certified "
                                    "list for n >= 4, which cannot happen over a "
                                    "closure");
        // prefer rank 3, then rank 1, then rank 2
        auto pref = [](unsigned rank) { return rank == 3 ? 0 : rank == 1 ? 1 : 2; };
        const SquareZeroClass* pick = &classes.classes.front();
        for (const SquareZeroClass& c : classes.classes)
            if (pref(c.rank) < pref(pick->rank)) pick = &c;

        WitnessTrace tr;
        tr.work_field = fk;
        try {
            Witness core_w = [&]() -> Witness {
                switch (pick->rank) {
                    case 3: return lemma22_case1(core, pick->coords, &tr);
                    case 1: return lemma22_case4(core, pick->coords, &tr, cfg.sweep_budget);
                    case 2:
                        return prop21_rank2(core, pick->coords, &tr, cfg.seed,
                                            cfg.sweep_budget);
                    default:
                        throw VerificationError("square-zero class of rank 0 in the "
                                                "reduced core");
                }
            }();
            Witness composed = compose_with_reduction(red, core_w, fk, n);
            std::vector<Polynomial> gens;
            for (const Polynomial& g : r.generators())
                gens.push_back(fk == r.field() ? g : g.lift_field(fk));
            VerifyReport check = verify_witness(gens, composed, true);
            if (!check.ok)
                throw VerificationError("VERIFICATION_FAILED: " + check.failure);
            out.kind = OutcomeKind::Witness;
            out.witness = composed;
            out.trace = tr;
            out.verification = check;
            return out;
        } catch (const InconclusiveError& e) {
            reasons.push_back(std::string(e.what()) + " [" + fk->name() + "]");
            continue;
        }
    }

    out.kind = OutcomeKind::Inconclusive;
    std::ostringstream msg;
    msg << "SEARCH_EXHAUSTED: no witness found";
    for (const std::string& s : reasons) msg << "; " << s;
    out.reason = msg.str();
    return out;
}

bool case2_applicable(const GradedQuotient& r, const std::vector<Scalar>& y,
                      unsigned extension_cap, std::uint64_t budget) {
    if (!r.field()->finite())
        throw HypothesisError("applicability probes sweep finite fields only");
    if (!square_zero(r, y) || r.rank_linear_form(y) != 2) return false;
    const Field* base = r.field();
    for (const Field* fk : ladder_fields(base, extension_cap)) {
        GradedQuotient rk = fk == base ? r : r.lift_field(fk);
        std::vector<Scalar> yk = lift_vec(y, fk);
        Matrix y_r1 = rk.linear_map(yk, 1);
        std::vector<std::vector<Scalar>> v = rk.annihilator(yk);
        bool found = false;
        sweep_projective(fk, static_cast<unsigned>(v.size()), budget,
                         [&](const std::vector<Scalar>& c) {
                             std::vector<Scalar> z(rk.nvars(), fk->zero());
                             for (std::size_t i = 0; i < v.size(); ++i)
                                 z = vec_add_scaled(z, c[i], v[i]);
                             if (!in_col_span(y_r1, prod2(rk, z, z))) return false;
                             if (col_span_le(rk.linear_map(z, 1), y_r1)) return false;
                             found = true;
                             return true;
                         });
        if (found) return true;
    }
    return false;
}

bool case3_applicable(const GradedQuotient& r, const std::vector<Scalar>& y,
                      unsigned extension_cap, std::uint64_t budget) {
    if (!r.field()->finite())
        throw HypothesisError("applicability probes sweep finite fields only");
    if (!square_zero(r, y) || r.rank_linear_form(y) != 2) return false;
    const Field* base = r.field();
    for (const Field* fk : ladder_fields(base, extension_cap)) {
        GradedQuotient rk = fk == base ? r : r.lift_field(fk);
        std::vector<Scalar> yk = lift_vec(y, fk);
        Matrix y_r1 = rk.linear_map(yk, 1);
        std::vector<std::vector<Scalar>> v = rk.annihilator(yk);
        bool found = false;
        sweep_projective(fk, rk.nvars(), budget, [&](const std::vector<Scalar>& t) {
            if (vec_zero(prod2(rk, t, yk))) return false;
            if (!in_col_span(y_r1, prod2(rk, t, t))) return false;
            for (const auto& vi : v)
                if (!in_col_span(y_r1, prod2(rk, t, vi))) {
                    found = true;
                    return true;
                }
            return false;
        });
        if (found) return true;
    }
    return false;
}

} // namespace qgb
