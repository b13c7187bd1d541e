#include "qgb/algebra.hpp"

#include <algorithm>
#include <set>

#include "qgb/error.hpp"
#include "qgb/rng.hpp"
#include "qgb/solve.hpp"

namespace qgb {

GradedQuotient GradedQuotient::build(const std::vector<Polynomial>& gens,
                                     unsigned max_degree) {
    if (gens.empty())
        throw std::logic_error("build_quotient: generator list may not be empty");
    if (max_degree < 2)
        throw HypothesisError("build_quotient: degree bound must be at least 2");
    GradedQuotient q;
    q.field_ = gens.front().field();
    q.nvars_ = gens.front().nvars();
    q.max_degree_ = max_degree;
    q.order_ = TermOrder(OrderKind::DegRevLex, q.nvars_);
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.homogeneous())
            throw HypothesisError("build_quotient: generators must be homogeneous");
        q.gens_.push_back(g.reorder(q.order_));
    }
    GBResult gb = buchberger(q.gens_);
    q.gb_ = std::move(gb.basis);
    q.artinian_ = is_zero_dimensional(q.gb_, q.nvars_);

    for (unsigned d = 0; d <= max_degree; ++d) {
        std::vector<Monomial> basis;
        for (const auto& m : monomials_of_degree(q.nvars_, d, q.order_)) {
            bool divisible = false;
            for (const auto& g : q.gb_)
                if (g.leading_monomial().divides(m)) { divisible = true; break; }
            if (!divisible) basis.push_back(m);
        }
        std::map<std::vector<std::uint32_t>, unsigned> index;
        for (unsigned i = 0; i < basis.size(); ++i) index[basis[i].exponents()] = i;
        q.bases_.push_back(std::move(basis));
        q.index_.push_back(std::move(index));
    }
    for (unsigned d = 0; d < max_degree; ++d) {
        std::vector<Matrix> maps;
        for (unsigned v = 0; v < q.nvars_; ++v) {
            Matrix m(q.field_, q.dim(d + 1), q.dim(d));
            const Monomial xv = Monomial::variable(q.nvars_, v);
            for (unsigned j = 0; j < q.dim(d); ++j) {
                const Polynomial p = Polynomial::from_monomial(
                    q.field_, q.order_, q.bases_[d][j] * xv, q.field_->one());
                const std::vector<Scalar> col = q.nf_coords(p, d + 1);
                for (unsigned i = 0; i < col.size(); ++i) m.at(i, j) = col[i];
            }
            maps.push_back(std::move(m));
        }
        q.var_maps_.push_back(std::move(maps));
    }
    return q;
}

std::vector<unsigned> GradedQuotient::hilbert() const {
    std::vector<unsigned> h;
    for (unsigned d = 0; d <= max_degree_; ++d) h.push_back(dim(d));
    return h;
}

unsigned GradedQuotient::basis_index(const Monomial& m, unsigned d) const {
    const auto& index = index_.at(d);
    const auto it = index.find(m.exponents());
    if (it == index.end())
        throw std::logic_error("basis_index: monomial is not standard");
    return it->second;
}

std::vector<Scalar> GradedQuotient::nf_coords(const Polynomial& f, unsigned d) const {
    const Polynomial r = reduce(f.reorder(order_), gb_);
    std::vector<Scalar> out(dim(d), field_->zero());
    for (const auto& t : r.terms()) {
        if (t.mono.deg() != d)
            throw std::logic_error("nf_coords: polynomial degree does not match");
        out[basis_index(t.mono, d)] = t.coef;
    }
    return out;
}

const Matrix& GradedQuotient::var_map(unsigned v, unsigned d) const {
    return var_maps_.at(d).at(v);
}

namespace {

// Index of the variable a degree-1 standard monomial stands for.
unsigned variable_of(const Monomial& m) {
    for (unsigned v = 0; v < m.nvars(); ++v)
        if (m[v] == 1) return v;
    throw std::logic_error("variable_of: not a degree-1 monomial");
}

} // namespace

Matrix GradedQuotient::linear_map(const std::vector<Scalar>& coords, unsigned d) const {
    if (coords.size() != dim(1))
        throw std::logic_error("linear_map: coordinate length must equal dim R_1");
    Matrix out(field_, dim(d + 1), dim(d));
    for (unsigned i = 0; i < out.rows(); ++i)
        for (unsigned j = 0; j < out.cols(); ++j) out.at(i, j) = field_->zero();
    for (unsigned t = 0; t < coords.size(); ++t) {
        if (coords[t].is_zero()) continue;
        const Matrix& m = var_map(variable_of(bases_[1][t]), d);
        for (unsigned i = 0; i < out.rows(); ++i)
            for (unsigned j = 0; j < out.cols(); ++j)
                out.at(i, j) += coords[t] * m.at(i, j);
    }
    return out;
}

unsigned GradedQuotient::rank_linear_form(const std::vector<Scalar>& coords) const {
    return static_cast<unsigned>(linear_map(coords, 1).rank());
}

std::vector<std::vector<Scalar>> GradedQuotient::annihilator(
    const std::vector<Scalar>& y) const {
    const Matrix ker = linear_map(y, 1).kernel();
    std::vector<std::vector<Scalar>> basis;
    for (unsigned j = 0; j < ker.cols(); ++j) basis.push_back(ker.col(j));
    return basis;
}

Polynomial GradedQuotient::from_coords(const std::vector<Scalar>& coords,
                                       unsigned d) const {
    if (coords.size() != dim(d))
        throw std::logic_error("from_coords: coordinate length must equal dim R_d");
    std::vector<Term> terms;
    for (unsigned i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) terms.push_back({bases_[d][i], coords[i]});
    return Polynomial::from_terms(field_, order_, std::move(terms));
}

Polynomial GradedQuotient::linear_form(const std::vector<Scalar>& coords) const {
    return from_coords(coords, 1);
}

GradedQuotient GradedQuotient::lift_field(const Field* target) const {
    std::vector<Polynomial> lifted;
    if (gens_.empty()) {
        lifted.push_back(Polynomial(target, order_));
    } else {
        for (const auto& g : gens_) lifted.push_back(g.lift_field(target));
    }
    return build(lifted, max_degree_);
}

bool quadratic_presentation(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.homogeneous() || g.deg() != 2) return false;
    }
    return true;
}

bool sweep_projective(const Field* f, unsigned n, std::uint64_t budget,
                      const std::function<bool(const std::vector<Scalar>&)>& visit) {
    if (!f->finite())
        throw std::logic_error("sweep_projective: finite field required");
    mpz_class total = 0, power = 1;
    for (unsigned i = 0; i < n; ++i) {
        total += power;
        power *= f->order();
    }
    if (total > mpz_class(static_cast<unsigned long>(budget))) return false;
    const std::uint64_t q = mpz_get_ui(f->order().get_mpz_t());
    std::vector<Scalar> point(n, f->zero());
    for (unsigned lead = 0; lead < n; ++lead) {
        for (unsigned i = 0; i < n; ++i) point[i] = f->zero();
        point[lead] = f->one();
        const unsigned free_count = n - lead - 1;
        std::vector<std::uint64_t> digits(free_count, 0);
        while (true) {
            for (unsigned i = 0; i < free_count; ++i)
                point[lead + 1 + i] = f->element(digits[i]);
            if (visit(point)) return true;
            unsigned pos = free_count;
            while (pos > 0) {
                --pos;
                if (++digits[pos] < q) break;
                digits[pos] = 0;
                if (pos == 0) { pos = free_count + 1; break; }
            }
            if (free_count == 0 || pos == free_count + 1) break;
        }
    }
    return true;
}

namespace {

// Coordinates in R_2 of the products of the degree-one basis elements,
// symmetric in (i, j).
std::vector<std::vector<std::vector<Scalar>>> pair_product_table(
    const GradedQuotient& r) {
    const unsigned n = r.dim(1);
    std::vector<std::vector<std::vector<Scalar>>> table(
        n, std::vector<std::vector<Scalar>>(n));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i; j < n; ++j) {
            const Polynomial p = Polynomial::from_monomial(
                r.field(), r.order(), r.basis(1)[i] * r.basis(1)[j], r.field()->one());
            table[i][j] = table[j][i] = r.nf_coords(p, 2);
        }
    }
    return table;
}

// The square map as explicit quadratic forms: polynomial q_m in n variables
// whose value at (a_0..a_{n-1}) is the m-th R_2-coordinate of (sum a_i e_i)^2.
std::vector<Polynomial> square_system(const GradedQuotient& r) {
    const Field* f = r.field();
    const unsigned n = r.dim(1);
    const unsigned m = r.dim(2);
    const TermOrder ord(OrderKind::DegRevLex, n);
    const auto table = pair_product_table(r);
    const Scalar two = f->from_int(2);
    std::vector<Polynomial> sys;
    for (unsigned c = 0; c < m; ++c) {
        std::vector<Term> terms;
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = i; j < n; ++j) {
                Scalar coef = table[i][j][c];
                if (i != j) coef = coef * two;
                if (coef.is_zero()) continue;
                Monomial mono = Monomial::variable(n, i) * Monomial::variable(n, j);
                terms.push_back({std::move(mono), std::move(coef)});
            }
        }
        sys.push_back(Polynomial::from_terms(f, ord, std::move(terms)));
    }
    return sys;
}

using PointSet = std::set<std::vector<Scalar>,
                          bool (*)(const std::vector<Scalar>&, const std::vector<Scalar>&)>;

bool point_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

// Exhaustive prime-field sweep with word arithmetic.  Returns all projective
// square-zero classes.
std::vector<std::vector<Scalar>> prime_sweep(const GradedQuotient& r) {
    const Field* f = r.field();
    const std::uint64_t p = f->characteristic();
    const unsigned n = r.dim(1);
    const unsigned m = r.dim(2);
    const auto table = pair_product_table(r);
    // coef[c][i][j] for i <= j, off-diagonal entries pre-doubled.
    std::vector<std::vector<std::vector<std::uint64_t>>> coef(
        m, std::vector<std::vector<std::uint64_t>>(n, std::vector<std::uint64_t>(n, 0)));
    for (unsigned c = 0; c < m; ++c)
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i; j < n; ++j) {
                std::uint64_t v = table[i][j][c].residue();
                if (i != j) v = v * 2 % p;
                coef[c][i][j] = v;
            }
    std::vector<std::vector<Scalar>> found;
    std::vector<std::uint64_t> a(n, 0);
    for (unsigned lead = 0; lead < n; ++lead) {
        std::fill(a.begin(), a.end(), 0);
        a[lead] = 1;
        const unsigned free_count = n - lead - 1;
        std::vector<std::uint64_t> digits(free_count, 0);
        while (true) {
            for (unsigned i = 0; i < free_count; ++i) a[lead + 1 + i] = digits[i];
            bool zero = true;
            for (unsigned c = 0; c < m && zero; ++c) {
                unsigned __int128 acc = 0;
                for (unsigned i = lead; i < n; ++i) {
                    if (a[i] == 0) continue;
                    for (unsigned j = i; j < n; ++j) {
                        if (a[j] == 0 || coef[c][i][j] == 0) continue;
                        acc += static_cast<unsigned __int128>(coef[c][i][j] * a[i] % p) * a[j];
                    }
                }
                if (acc % p != 0) zero = false;
            }
            if (zero) {
                std::vector<Scalar> pt;
                pt.reserve(n);
                for (unsigned i = 0; i < n; ++i) pt.push_back(f->element(a[i]));
                found.push_back(std::move(pt));
            }
            unsigned pos = free_count;
            bool done = (free_count == 0);
            while (pos > 0) {
                --pos;
                if (++digits[pos] < p) break;
                digits[pos] = 0;
                if (pos == 0) done = true;
            }
            if (done) break;
        }
    }
    return found;
}

// Collect points of the square-zero variety over `f` by solving the system,
// slicing with random hyperplanes when it is not zero-dimensional.
std::vector<std::vector<Scalar>> variety_points(const std::vector<Polynomial>& system,
                                                const Field* f, unsigned n,
                                                unsigned slice_trials,
                                                std::uint64_t seed) {
    if (system.empty()) return {}; // unconstrained locus cannot be enumerated
    std::vector<Polynomial> lifted;
    for (const auto& g : system) lifted.push_back(g.lift_field(f));
    PointSet collected(point_less);
    try {
        for (auto& pt : projective_points(lifted)) collected.insert(std::move(pt));
        std::vector<std::vector<Scalar>> out(collected.begin(), collected.end());
        return out;
    } catch (const InconclusiveError&) {
        // positive-dimensional: fall through to slicing
    }
    Rng rng(seed ^ 0x517cc1b727220a95ULL);
    const TermOrder ord(OrderKind::DegRevLex, n);
    for (unsigned trial = 0; trial < slice_trials; ++trial) {
        std::vector<Polynomial> sliced = lifted;
        bool solved = false;
        for (unsigned extra = 1; extra + 2 <= n && !solved; ++extra) {
            std::vector<Term> terms;
            for (unsigned i = 0; i < n; ++i) {
                const Scalar c = rng.scalar(f);
                if (!c.is_zero()) terms.push_back({Monomial::variable(n, i), c});
            }
            sliced.push_back(Polynomial::from_terms(f, ord, std::move(terms)));
            try {
                for (auto& pt : projective_points(sliced)) collected.insert(std::move(pt));
                solved = true;
            } catch (const InconclusiveError&) {
                continue; // still positive-dimensional: add another hyperplane
            }
        }
    }
    return std::vector<std::vector<Scalar>>(collected.begin(), collected.end());
}

} // namespace

SquareZeroForms square_zero_forms(const GradedQuotient& r,
                                  const SquareZeroSearchOptions& opts) {
    const Field* f = r.field();
    const unsigned n = r.dim(1);
    if (n == 0)
        throw HypothesisError("square_zero_forms: R_1 is zero");
    const std::vector<Polynomial> system = square_system(r);

    auto with_ranks = [](const GradedQuotient& q,
                         std::vector<std::vector<Scalar>> pts) {
        std::vector<SquareZeroClass> classes;
        for (auto& pt : pts) {
            SquareZeroClass c;
            c.rank = q.rank_linear_form(pt);
            c.coords = std::move(pt);
            classes.push_back(std::move(c));
        }
        std::sort(classes.begin(), classes.end(),
                  [](const SquareZeroClass& a, const SquareZeroClass& b) {
                      return point_less(a.coords, b.coords);
                  });
        return classes;
    };

    if (f->finite()) {
        // Exhaustive sweep over P(R_1)(f) when affordable.
        mpz_class points = 0, power = 1;
        for (unsigned i = 0; i < n; ++i) {
            points += power;
            power *= f->order();
        }
        if (points <= mpz_class(static_cast<unsigned long>(opts.exhaustive_budget))) {
            std::vector<std::vector<Scalar>> pts;
            if (f->degree() == 1) {
                pts = prime_sweep(r);
            } else {
                sweep_projective(f, n, opts.exhaustive_budget,
                                 [&](const std::vector<Scalar>& pt) {
                                     for (const auto& g : system)
                                         if (!g.evaluate(pt).is_zero()) return false;
                                     pts.push_back(pt);
                                     return false;
                                 });
            }
            if (!pts.empty()) return {f, with_ranks(r, std::move(pts)), true};
        } else {
            const auto pts = variety_points(system, f, n, opts.slice_trials, opts.seed);
            if (!pts.empty()) return {f, with_ranks(r, pts), false};
        }
    } else {
        const auto pts = variety_points(system, f, n, opts.slice_trials, opts.seed);
        if (!pts.empty()) return {f, with_ranks(r, pts), false};
    }

    // Nothing over the base field.  For n = 3 the count of closure points of
    // the square locus is computable and certifies true nonexistence.
    if (n == 3) {
        if (count_projective_points(system, opts.seed) == 0)
            return {f, {}, true};
    }

    if (f->finite() && f->degree() == 1) {
        for (unsigned k = 2; k <= opts.extension_cap; ++k) {
            const Field* ext = extension_field(f->characteristic(), k);
            mpz_class points = 0, power = 1;
            for (unsigned i = 0; i < n; ++i) {
                points += power;
                power *= ext->order();
            }
            std::vector<std::vector<Scalar>> pts;
            bool complete = false;
            if (points <= mpz_class(static_cast<unsigned long>(opts.exhaustive_budget))) {
                std::vector<Polynomial> lifted;
                for (const auto& g : system) lifted.push_back(g.lift_field(ext));
                sweep_projective(ext, n, opts.exhaustive_budget,
                                 [&](const std::vector<Scalar>& pt) {
                                     for (const auto& g : lifted)
                                         if (!g.evaluate(pt).is_zero()) return false;
                                     pts.push_back(pt);
                                     return false;
                                 });
                complete = true;
            } else {
                pts = variety_points(system, ext, n, opts.slice_trials, opts.seed + k);
            }
            if (!pts.empty())
                return {ext, with_ranks(r.lift_field(ext), std::move(pts)), complete};
        }
    }

    throw InconclusiveError(
        "SEARCH_EXHAUSTED: no square-zero linear form found within the searched "
        "fields; the closure may still contain one");
}

TrivialExtensionReduction trivial_extension_reduce(const GradedQuotient& r) {
    const Field* f = r.field();
    const unsigned n = r.dim(1);
    const unsigned d2 = r.dim(2);
    const auto table = pair_product_table(r);

    // c is a rank-0 direction iff sum_i c_i (e_i e_j) = 0 in R_2 for every j.
    Matrix constraints(f, n * d2, n);
    for (unsigned j = 0; j < n; ++j)
        for (unsigned i = 0; i < n; ++i)
            for (unsigned m = 0; m < d2; ++m)
                constraints.at(j * d2 + m, i) = table[i][j][m];
    const Matrix ker = constraints.kernel();
    const unsigned removed = static_cast<unsigned>(ker.cols());
    if (removed == 0) {
        return {r, 0, Matrix::identity(f, n), {}};
    }

    std::vector<std::size_t> pivots;
    ker.transpose().rref(&pivots);
    std::vector<unsigned> kept;
    for (unsigned i = 0; i < n; ++i)
        if (std::find(pivots.begin(), pivots.end(), i) == pivots.end())
            kept.push_back(i);
    const unsigned m = static_cast<unsigned>(kept.size());

    Matrix embed(f, n, m);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < m; ++j)
            embed.at(i, j) = (kept[j] == i) ? f->one() : f->zero();

    // Quadrics of the core: kernel of Sym^2(span of kept variables) -> R_2.
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned a = 0; a < m; ++a)
        for (unsigned b = a; b < m; ++b) pairs.push_back({a, b});
    Matrix sym(f, d2, static_cast<unsigned>(pairs.size()));
    for (unsigned c = 0; c < pairs.size(); ++c)
        for (unsigned row = 0; row < d2; ++row)
            sym.at(row, c) = table[kept[pairs[c].first]][kept[pairs[c].second]][row];
    const Matrix rel = sym.kernel();

    const TermOrder ord(OrderKind::DegRevLex, m);
    std::vector<Polynomial> core_gens;
    for (unsigned c = 0; c < rel.cols(); ++c) {
        std::vector<Term> terms;
        for (unsigned t = 0; t < pairs.size(); ++t) {
            const Scalar& v = rel.at(t, c);
            if (v.is_zero()) continue;
            terms.push_back({Monomial::variable(m, pairs[t].first) *
                                 Monomial::variable(m, pairs[t].second),
                             v});
        }
        core_gens.push_back(Polynomial::from_terms(f, ord, std::move(terms)));
    }
    if (core_gens.empty()) core_gens.push_back(Polynomial(f, ord));
    GradedQuotient core = GradedQuotient::build(core_gens, r.max_degree());
    for (unsigned d = 2; d <= r.max_degree(); ++d)
        if (core.dim(d) != r.dim(d))
            throw VerificationError(
                "trivial_extension_reduce: core dimensions disagree with input");

    std::vector<std::vector<Scalar>> removed_basis;
    for (unsigned j = 0; j < removed; ++j) removed_basis.push_back(ker.col(j));
    return {std::move(core), removed, std::move(embed), std::move(removed_basis)};
}

GradedQuotient quotient_by_forms(const GradedQuotient& r,
                                 const std::vector<std::vector<Scalar>>& forms) {
    if (forms.empty()) return r;
    Matrix check = Matrix::from_columns(r.field(), r.dim(1), forms);
    if (check.rank() != forms.size())
        throw HypothesisError("quotient_by_forms: forms must be linearly independent");
    std::vector<Polynomial> gens = r.generators();
    for (const auto& c : forms) gens.push_back(r.linear_form(c));
    return GradedQuotient::build(gens, r.max_degree());
}

} // namespace qgb
