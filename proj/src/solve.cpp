#include "qgb/solve.hpp"

#include <stdexcept>

#include "qgb/error.hpp"
#include "qgb/groebner.hpp"

namespace qgb {

Univariate to_univariate(const Polynomial& f, unsigned var) {
    const Field* field = f.field();
    std::vector<Scalar> c;
    for (const auto& t : f.terms()) {
        for (unsigned v = 0; v < f.nvars(); ++v)
            if (v != var && t.mono[v] > 0)
                throw std::logic_error("to_univariate: polynomial involves another variable");
        const std::size_t e = t.mono[var];
        if (c.size() <= e) c.resize(e + 1, field->zero());
        c[e] = c[e] + t.coef;
    }
    return Univariate(field, std::move(c));
}

std::vector<std::vector<Scalar>> affine_points(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw std::logic_error("affine_points: no generators");
    const Field* field = gens.front().field();
    const unsigned n = gens.front().nvars();
    std::vector<Polynomial> nonzero;
    for (const auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (n == 0) {
        if (nonzero.empty()) return {{}};
        return {};
    }
    if (nonzero.empty())
        throw InconclusiveError("affine_points: system is not zero-dimensional");

    // Univariate eliminant of the last variable via a lex Groebner basis.
    std::vector<Univariate> elim;
    if (n == 1) {
        for (const auto& g : nonzero) elim.push_back(to_univariate(g, 0));
    } else {
        const TermOrder lex(OrderKind::Lex, n);
        std::vector<Polynomial> lexed;
        for (const auto& g : nonzero) lexed.push_back(g.reorder(lex));
        const GBResult gb = buchberger(lexed);
        if (cone_dimension(gb.basis, n) > 0)
            throw InconclusiveError("affine_points: system is not zero-dimensional");
        for (const auto& g : gb.basis) {
            bool last_only = true;
            for (unsigned v = 0; v + 1 < n; ++v)
                if (g.leading_monomial()[v] > 0) { last_only = false; break; }
            if (last_only) elim.push_back(to_univariate(g, n - 1));
        }
    }
    if (elim.empty())
        throw InconclusiveError("affine_points: system is not zero-dimensional");
    Univariate g = Univariate::constant(field, field->zero());
    for (const auto& e : elim) g = gcd(g, e);
    if (g.is_zero())
        throw InconclusiveError("affine_points: system is not zero-dimensional");

    std::vector<std::vector<Scalar>> points;
    if (g.deg() == 0) return points; // unit ideal: no points
    for (const Scalar& r : roots(g)) {
        const TermOrder sub_ord(OrderKind::DegRevLex, n - 1);
        std::vector<Polynomial> images;
        for (unsigned i = 0; i + 1 < n; ++i)
            images.push_back(Polynomial::variable(field, sub_ord, i));
        images.push_back(Polynomial::constant(field, sub_ord, r));
        std::vector<Polynomial> restricted;
        for (const auto& f : nonzero) restricted.push_back(f.substitute(images));
        for (auto& p : affine_points(restricted)) {
            p.push_back(r);
            points.push_back(std::move(p));
        }
    }
    return points;
}

std::vector<std::vector<Scalar>> projective_points(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw std::logic_error("projective_points: no generators");
    const Field* field = gens.front().field();
    const unsigned n = gens.front().nvars();
    for (const auto& g : gens)
        if (!g.is_zero() && !g.homogeneous())
            throw std::logic_error("projective_points: generators must be homogeneous");
    std::vector<std::vector<Scalar>> points;
    for (unsigned chart = 0; chart < n; ++chart) {
        const unsigned free_vars = n - chart - 1;
        const TermOrder ord(OrderKind::DegRevLex, free_vars);
        std::vector<Polynomial> images;
        for (unsigned i = 0; i < n; ++i) {
            if (i < chart)
                images.push_back(Polynomial(field, ord));
            else if (i == chart)
                images.push_back(Polynomial::constant(field, ord, field->one()));
            else
                images.push_back(Polynomial::variable(field, ord, i - chart - 1));
        }
        std::vector<Polynomial> affine;
        for (const auto& g : gens)
            if (!g.is_zero()) affine.push_back(g.substitute(images));
        if (affine.empty())
            throw std::logic_error("projective_points: zero ideal has infinitely many points");
        for (auto& p : affine_points(affine)) {
            std::vector<Scalar> full;
            for (unsigned i = 0; i < chart; ++i) full.push_back(field->zero());
            full.push_back(field->one());
            for (auto& c : p) full.push_back(std::move(c));
            points.push_back(std::move(full));
        }
    }
    return points;
}

} // namespace qgb
