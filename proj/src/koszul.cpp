#include "qgb/koszul.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qgb/error.hpp"

namespace qgb {

namespace {

// A free module F = (+)_l R(-d_l), realized degreewise over the quotient's
// standard monomial bases.
struct FreeModule {
    std::vector<unsigned> degrees; // d_l of each generator

    unsigned dim_at(const GradedQuotient& r, unsigned e) const {
        unsigned n = 0;
        for (unsigned d : degrees)
            if (e >= d) n += r.dim(e - d);
        return n;
    }
};

// An element of F of degree e, stored as one normal-form polynomial per
// generator slot (the slot for generator l is homogeneous of degree e - d_l).
using Tuple = std::vector<Polynomial>;

std::vector<Scalar> tuple_coords(const GradedQuotient& r, const FreeModule& f,
                                 const Tuple& t, unsigned e) {
    std::vector<Scalar> out;
    for (std::size_t l = 0; l < f.degrees.size(); ++l) {
        if (e < f.degrees[l]) continue;
        std::vector<Scalar> c = r.nf_coords(t[l], e - f.degrees[l]);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

Tuple tuple_from_coords(const GradedQuotient& r, const FreeModule& f,
                        const std::vector<Scalar>& coords, unsigned e) {
    Tuple t;
    std::size_t pos = 0;
    for (unsigned d : f.degrees) {
        if (e < d) {
            t.push_back(Polynomial::constant(r.field(), r.order(), r.field()->zero()));
            continue;
        }
        unsigned k = r.dim(e - d);
        std::vector<Scalar> slice(coords.begin() + pos, coords.begin() + pos + k);
        pos += k;
        t.push_back(r.from_coords(slice, e - d));
    }
    return t;
}

// Incremental column-echelon span: each vector is reduced once against the
// stored pivot rows (kept with first nonzero entry = pivot, normalized to 1),
// so testing a growing family costs one reduction per vector instead of one
// full elimination per vector.
class EchelonSpan {
public:
    // Reduces v against the span; absorbs it and returns true when it is
    // independent of the vectors added so far.
    bool add(std::vector<Scalar> v) {
        for (const auto& [pivot, row] : rows_) {
            if (pivot >= v.size() || v[pivot].is_zero()) continue;
            const Scalar c = v[pivot];
            for (std::size_t j = pivot; j < v.size(); ++j)
                if (!row[j].is_zero()) v[j] -= c * row[j];
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            const Scalar inv = v[i].inverse();
            for (std::size_t j = i; j < v.size(); ++j) v[j] *= inv;
            rows_.emplace(i, std::move(v));
            return true;
        }
        return false;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::map<std::size_t, std::vector<Scalar>> rows_;
};

} // namespace

BettiTable betti(const GradedQuotient& r0, unsigned max_i, unsigned max_j) {
    if (max_j < max_i)
        throw HypothesisError("DEGREE_BOUND_EXCEEDED: the internal degree bound must "
                              "be at least the homological bound");
    GradedQuotient r = r0.max_degree() >= std::max(max_j, 2u)
                           ? r0
                           : GradedQuotient::build(r0.generators(), std::max(max_j, 2u));
    const Field* field = r.field();
    const unsigned n = r.dim(1);
    TermOrder ord = r.order();

    BettiTable table;
    table.max_i = max_i;
    table.max_j = max_j;
    table.beta.assign(max_i + 1, std::vector<long>(max_j + 1, 0));
    table.beta[0][0] = 1;
    if (max_i == 0) return table;

    // Step 1 is the maximal ideal: one generator per variable of R_1 mapping
    // into F_0 = R.  Generators of the current free module F_i are tuples in
    // F_{i-1}; F_0 tuples have a single slot of degree 0.
    FreeModule prev;             // F_{i-1}
    prev.degrees = {0};
    FreeModule cur;              // F_i
    std::vector<Tuple> cur_gens; // images in F_{i-1} of the generators of F_i
    for (const Monomial& m : r.basis(1)) {
        cur.degrees.push_back(1);
        cur_gens.push_back({Polynomial::from_monomial(field, ord, m, field->one())});
    }
    table.beta[1][1] = static_cast<long>(n);

    for (unsigned i = 1; i < max_i; ++i) {
        // Syzygies of cur_gens: kernel of phi_i : F_i -> F_{i-1}, degree by
        // degree; minimal generators = complement of R_1 * (lower kernels).
        FreeModule next;
        std::vector<Tuple> next_gens;

        // phi_i in degree e, as a matrix from F_i,e to F_{i-1},e; columns are
        // m_b * gen_l for each generator l and monomial m_b in R_{e - d_l}.
        auto phi_at = [&](unsigned e) {
            std::vector<std::vector<Scalar>> cols;
            for (std::size_t l = 0; l < cur.degrees.size(); ++l) {
                if (e < cur.degrees[l]) continue;
                for (const Monomial& b : r.basis(e - cur.degrees[l])) {
                    Tuple img;
                    for (const Polynomial& comp : cur_gens[l])
                        img.push_back(comp * Polynomial::from_monomial(field, ord, b,
                                                                       field->one()));
                    cols.push_back(tuple_coords(r, prev, img, e));
                }
            }
            unsigned rows = prev.dim_at(r, e);
            return cols.empty() ? Matrix(field, rows, 0)
                                : Matrix::from_columns(field, rows, cols);
        };

        // kernel bases per degree (coordinates in F_i,e)
        std::vector<std::vector<std::vector<Scalar>>> kernels(max_j + 1);
        for (unsigned e = 1; e <= max_j; ++e) {
            if (cur.dim_at(r, e) == 0) continue;
            Matrix ker = phi_at(e).kernel();
            for (std::size_t c = 0; c < ker.cols(); ++c)
                kernels[e].push_back(ker.col(c));
        }

        for (unsigned e = 1; e <= max_j; ++e) {
            if (kernels[e].empty()) continue;
            // span of R_1 * Z_{e-1} inside F_i,e
            EchelonSpan span;
            for (const auto& kv : kernels[e - 1]) {
                Tuple kt = tuple_from_coords(r, cur, kv, e - 1);
                for (const Monomial& vm : r.basis(1)) {
                    Tuple prod;
                    for (const Polynomial& comp : kt)
                        prod.push_back(comp * Polynomial::from_monomial(
                                                  field, ord, vm, field->one()));
                    span.add(tuple_coords(r, cur, prod, e));
                }
            }
            const std::size_t base_rank = span.rank();
            for (const auto& kv : kernels[e]) {
                if (span.add(kv)) {
                    next.degrees.push_back(e);
                    next_gens.push_back(tuple_from_coords(r, cur, kv, e));
                }
            }
            table.beta[i + 1][e] = static_cast<long>(span.rank() - base_rank);
        }

        prev = cur;
        cur = next;
        cur_gens = next_gens;
        if (cur_gens.empty()) break; // resolution terminated (only if R regular)
    }
    return table;
}

bool is_linear_up_to(const BettiTable& t) { return !first_nonlinear(t).has_value(); }

std::optional<std::pair<unsigned, unsigned>> first_nonlinear(const BettiTable& t) {
    for (unsigned i = 0; i <= t.max_i; ++i)
        for (unsigned j = i + 1; j <= t.max_j; ++j)
            if (t.beta[i][j] != 0) return std::make_pair(i, j);
    return std::nullopt;
}

bool euler_check(const BettiTable& t, const std::vector<unsigned>& hf) {
    unsigned up_to = std::min(t.max_i, t.max_j);
    if (hf.size() < up_to + 1) return false;
    for (unsigned e = 1; e <= up_to; ++e) {
        long sum = 0;
        for (unsigned i = 0; i <= t.max_i; ++i)
            for (unsigned j = i; j <= std::min(e, t.max_j); ++j) {
                long term = t.beta[i][j] * static_cast<long>(hf[e - j]);
                sum += (i % 2 == 0) ? term : -term;
            }
        if (sum != 0) return false;
    }
    return true;
}

std::string render_betti(const BettiTable& t) {
    // column widths
    std::vector<long> totals(t.max_i + 1, 0);
    for (unsigned i = 0; i <= t.max_i; ++i)
        for (unsigned j = 0; j <= t.max_j; ++j) totals[i] += t.beta[i][j];
    unsigned max_d = 0;
    for (unsigned i = 0; i <= t.max_i; ++i)
        for (unsigned j = i; j <= t.max_j; ++j)
            if (t.beta[i][j] != 0) max_d = std::max(max_d, j - i);

    std::vector<std::size_t> width(t.max_i + 1, 1);
    auto cell = [&](unsigned i, unsigned d) -> std::string {
        unsigned j = i + d;
        if (j > t.max_j) return "";
        return t.beta[i][j] == 0 ? "." : std::to_string(t.beta[i][j]);
    };
    for (unsigned i = 0; i <= t.max_i; ++i) {
        width[i] = std::max(width[i], std::to_string(i).size());
        width[i] = std::max(width[i], std::to_string(totals[i]).size());
        for (unsigned d = 0; d <= max_d; ++d) width[i] = std::max(width[i], cell(i, d).size());
    }

    std::ostringstream out;
    auto row = [&](const std::string& label, const std::function<std::string(unsigned)>& f) {
        out << label;
        for (unsigned i = 0; i <= t.max_i; ++i) {
            std::string s = f(i);
            out << "  " << std::string(width[i] - s.size(), ' ') << s;
        }
        out << "\n";
    };
    row("      ", [&](unsigned i) { return std::to_string(i); });
    row("total:", [&](unsigned i) { return std::to_string(totals[i]); });
    for (unsigned d = 0; d <= max_d; ++d)
        row(std::string(5 - std::min<std::size_t>(5, std::to_string(d).size()), ' ') +
                std::to_string(d) + ":",
            [&](unsigned i) { return cell(i, d); });
    return out.str();
}

} // namespace qgb
