#include "qgb/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "qgb/error.hpp"
#include "qgb/rng.hpp"
#include "qgb/solve.hpp"
#include "qgb/univariate.hpp"

namespace qgb {

namespace {

Polynomial spair(const Polynomial& f, const Polynomial& g) {
    const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial s(f.field(), f.order());
    s = s.sub_mul(-f.leading().coef.inverse(), l.divide(f.leading_monomial()), f);
    s = s.sub_mul(g.leading().coef.inverse(), l.divide(g.leading_monomial()), g);
    return s;
}

} // namespace

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& gens) {
    const Field* field = f.field();
    const Polynomial one = Polynomial::constant(field, f.order(), field->one());
    Polynomial p = f;
    std::vector<Term> kept;
    while (!p.is_zero()) {
        const Term t = p.leading();
        const Polynomial* red = nullptr;
        for (const auto& g : gens) {
            if (!g.is_zero() && g.leading_monomial().divides(t.mono)) {
                red = &g;
                break;
            }
        }
        if (red) {
            p = p.sub_mul(t.coef / red->leading().coef,
                          t.mono.divide(red->leading_monomial()), *red);
        } else {
            kept.push_back(t);
            p = p.sub_mul(t.coef, t.mono, one);
        }
    }
    return Polynomial::from_terms(field, f.order(), std::move(kept));
}

GBResult buchberger(const std::vector<Polynomial>& gens,
                    std::optional<unsigned> degree_cap) {
    std::vector<Polynomial> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic());
    if (basis.empty()) return {basis, false};

    // (degree of lcm, insertion serial, index, index): processed ascending.
    using Key = std::tuple<std::uint32_t, std::uint64_t, std::size_t, std::size_t>;
    std::set<Key> queue;
    std::uint64_t serial = 0;
    auto add_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            const Monomial& a = basis[i].leading_monomial();
            const Monomial& b = basis[k].leading_monomial();
            if (a.coprime(b)) continue;
            queue.insert({Monomial::lcm(a, b).deg(), serial++, i, k});
        }
    };
    for (std::size_t k = 1; k < basis.size(); ++k) add_pairs(k);

    while (!queue.empty()) {
        const auto [d, ser, i, j] = *queue.begin();
        (void)d;
        (void)ser;
        queue.erase(queue.begin());
        Polynomial h = reduce(spair(basis[i], basis[j]), basis);
        if (h.is_zero()) continue;
        if (degree_cap && h.deg() > *degree_cap) return {std::move(basis), true};
        basis.push_back(h.monic());
        add_pairs(basis.size() - 1);
    }
    return {reduced_basis(std::move(basis)), false};
}

std::vector<Polynomial> reduced_basis(std::vector<Polynomial> basis) {
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const Polynomial& g) { return g.is_zero(); }),
                basis.end());
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        const Monomial& mi = basis[i].leading_monomial();
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (j == i) continue;
            const Monomial& mj = basis[j].leading_monomial();
            if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i].monic());
    }
    // Interreduce tails until stable; each replacement strictly shrinks the
    // monomial multiset, so this terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = reduce(minimal[i], others).monic();
            if (r != minimal[i]) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const Polynomial& a, const Polynomial& b) {
                  return a.order().compare(a.leading_monomial(),
                                           b.leading_monomial()) > 0;
              });
    return minimal;
}

bool is_quadratic_gb(const std::vector<Polynomial>& basis) {
    for (const auto& g : basis)
        if (g.deg() > 2) return false;
    return true;
}

std::vector<Monomial> standard_monomials(const std::vector<Polynomial>& basis,
                                         unsigned d) {
    if (basis.empty())
        throw std::logic_error("standard_monomials: empty basis has no variable count");
    const unsigned n = basis.front().nvars();
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(n, d, basis.front().order())) {
        bool divisible = false;
        for (const auto& g : basis) {
            if (g.leading_monomial().divides(m)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) out.push_back(m);
    }
    return out;
}

std::vector<unsigned> hilbert_function(const std::vector<Polynomial>& basis,
                                       unsigned up_to) {
    std::vector<unsigned> h;
    for (unsigned d = 0; d <= up_to; ++d)
        h.push_back(static_cast<unsigned>(standard_monomials(basis, d).size()));
    return h;
}

unsigned cone_dimension(const std::vector<Polynomial>& basis, unsigned nvars) {
    std::vector<Monomial> lts;
    for (const auto& g : basis)
        if (!g.is_zero()) lts.push_back(g.leading_monomial());
    unsigned best = 0;
    for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        bool independent = true;
        for (const auto& m : lts) {
            bool supported = true; // support of m contained in the subset
            for (unsigned v = 0; v < nvars; ++v) {
                if (m[v] > 0 && !(mask & (1u << v))) {
                    supported = false;
                    break;
                }
            }
            if (supported) {
                independent = false;
                break;
            }
        }
        if (independent)
            best = std::max(best, static_cast<unsigned>(__builtin_popcount(mask)));
    }
    return best;
}

bool is_zero_dimensional(const std::vector<Polynomial>& basis, unsigned nvars) {
    return cone_dimension(basis, nvars) == 0;
}

namespace {

Polynomial embed_univariate(const Univariate& u, unsigned nvars, unsigned var,
                            const TermOrder& ord) {
    std::vector<Term> terms;
    for (int i = 0; i <= u.deg(); ++i) {
        const Scalar c = u.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        std::vector<std::uint32_t> exps(nvars, 0);
        exps[var] = static_cast<std::uint32_t>(i);
        terms.push_back(Term{Monomial(std::move(exps)), c});
    }
    return Polynomial::from_terms(u.field(), ord, std::move(terms));
}

// Generator of I \cap k[x_keep] for a zero-dimensional ideal, found as the
// gcd of the lex basis elements supported on x_keep alone (the other variable
// is made most significant so it gets eliminated).
Univariate chart_eliminant(const std::vector<Polynomial>& gens, unsigned keep) {
    const unsigned n = gens.front().nvars();
    const Field* field = gens.front().field();
    std::vector<unsigned> prio;
    for (unsigned v = 0; v < n; ++v)
        if (v != keep) prio.push_back(v);
    prio.push_back(keep);
    const TermOrder lex(OrderKind::Lex, prio);
    std::vector<Polynomial> lexed;
    for (const auto& g : gens) lexed.push_back(g.reorder(lex));
    GBResult gb = buchberger(lexed);
    std::vector<Univariate> elim;
    for (const auto& g : gb.basis) {
        bool keep_only = true;
        for (unsigned v = 0; v < n; ++v)
            if (v != keep && g.leading_monomial()[v] > 0) {
                keep_only = false;
                break;
            }
        if (keep_only) elim.push_back(to_univariate(g, keep));
    }
    Univariate e = Univariate::constant(field, field->zero());
    for (const auto& u : elim) e = gcd(e, u);
    if (e.is_zero())
        throw std::logic_error("chart_point_count: chart is not zero-dimensional");
    return e;
}

// Number of closure points of a finite affine variety in <= 2 variables.
// Adjoining the squarefree part of the eliminant of every variable makes the
// ideal radical (the field is perfect), so the count is the dimension of the
// quotient -- exact with no genericity assumption.
long chart_point_count(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw std::logic_error("chart_point_count: no generators");
    const unsigned n = gens.front().nvars();
    const Field* field = gens.front().field();
    if (n == 0) {
        for (const auto& g : gens)
            if (!g.is_zero()) return 0;
        return 1;
    }
    std::vector<Polynomial> nonzero;
    for (const auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty())
        throw std::logic_error("chart_point_count: chart is not zero-dimensional");
    if (n == 1) {
        Univariate e = Univariate::constant(field, field->zero());
        for (const auto& g : nonzero) e = gcd(e, to_univariate(g, 0));
        if (e.deg() == 0) return 0;
        return squarefree_part(e).deg();
    }
    std::vector<Polynomial> radical = nonzero;
    const TermOrder& ord = nonzero.front().order();
    for (unsigned v = 0; v < n; ++v) {
        Univariate e = chart_eliminant(nonzero, v);
        if (e.deg() == 0) return 0;
        radical.push_back(embed_univariate(squarefree_part(e), n, v, ord));
    }
    GBResult gb = buchberger(radical);
    long total = 0;
    for (unsigned d = 0;; ++d) {
        const std::size_t std_d = standard_monomials(gb.basis, d).size();
        if (std_d == 0) break;
        total += static_cast<long>(std_d);
    }
    return total;
}

} // namespace

long count_projective_points(const std::vector<Polynomial>& gens,
                             std::uint64_t seed) {
    if (gens.empty())
        throw std::logic_error("count_projective_points: no generators");
    const Field* field = gens.front().field();
    if (gens.front().nvars() != 3)
        throw std::logic_error("count_projective_points: exactly 3 variables required");
    std::vector<Polynomial> nonzero;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.homogeneous())
            throw HypothesisError("count_projective_points: generators must be homogeneous");
        nonzero.push_back(g);
    }
    if (nonzero.empty()) return kInfinitelyMany; // all of P^2
    GBResult gb = buchberger(nonzero);
    if (gb.basis.front().deg() == 0) return 0; // unit ideal
    const unsigned dim = cone_dimension(gb.basis, 3);
    if (dim == 0) return 0;       // cone supported at the origin only
    if (dim >= 2) return kInfinitelyMany;

    Rng rng(seed * 1000003ULL + 17);
    long counts[3] = {0, 0, 0};
    for (int trial = 0; trial < 3; ++trial) {
        const Matrix m = rng.invertible(field, 3);
        std::vector<std::vector<Scalar>> rows(3);
        for (unsigned i = 0; i < 3; ++i) rows[i] = m.row(i);
        std::vector<Polynomial> moved;
        for (const auto& g : nonzero)
            moved.push_back(g.substitute_linear(rows, g.order()));
        long total = 0;
        for (unsigned chart = 0; chart < 3; ++chart) {
            const unsigned free_vars = 2 - chart;
            const TermOrder ord(OrderKind::DegRevLex, free_vars);
            std::vector<Polynomial> images;
            for (unsigned i = 0; i < 3; ++i) {
                if (i < chart)
                    images.push_back(Polynomial(field, ord));
                else if (i == chart)
                    images.push_back(Polynomial::constant(field, ord, field->one()));
                else
                    images.push_back(Polynomial::variable(field, ord, i - chart - 1));
            }
            std::vector<Polynomial> affine;
            for (const auto& g : moved) affine.push_back(g.substitute(images));
            total += chart_point_count(affine);
        }
        counts[trial] = total;
    }
    if (counts[0] == counts[1] && counts[1] == counts[2]) return counts[0];
    throw InconclusiveError(
        "RANDOMNESS_EXHAUSTED: projective point-count trials disagree");
}

} // namespace qgb
