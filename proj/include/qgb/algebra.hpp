#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qgb/groebner.hpp"
#include "qgb/matrix.hpp"
#include "qgb/polynomial.hpp"

namespace qgb {

// A standard graded quotient R = K[x_0..x_{n-1}]/I realized degreewise as
// finite-dimensional vector spaces: a Groebner basis of I, the standard
// monomial basis of each R_d for d <= D, and multiplication-by-variable
// matrices R_d -> R_{d+1}.  Immutable after build.
class GradedQuotient {
public:
    // `gens` are homogeneous polynomials (degree 1 generators are allowed, as
    // produced by quotient_by_forms).  D >= 2.
    static GradedQuotient build(const std::vector<Polynomial>& gens, unsigned max_degree);

    const Field* field() const { return field_; }
    unsigned nvars() const { return nvars_; }
    unsigned max_degree() const { return max_degree_; }
    const TermOrder& order() const { return order_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const std::vector<Polynomial>& groebner() const { return gb_; }

    const std::vector<Monomial>& basis(unsigned d) const { return bases_.at(d); }
    unsigned dim(unsigned d) const { return static_cast<unsigned>(bases_.at(d).size()); }
    std::vector<unsigned> hilbert() const;
    bool artinian() const { return artinian_; }

    // Index of a standard monomial in basis(d); throws if not standard.
    unsigned basis_index(const Monomial& m, unsigned d) const;

    // Normal form of `f` (homogeneous of degree d, or zero) as a coordinate
    // vector in basis(d).
    std::vector<Scalar> nf_coords(const Polynomial& f, unsigned d) const;

    // Multiplication by variable v as a matrix basis(d) -> basis(d+1).
    const Matrix& var_map(unsigned v, unsigned d) const;

    // Multiplication by the linear form with coordinates `coords` in basis(1).
    Matrix linear_map(const std::vector<Scalar>& coords, unsigned d) const;

    // dim of (linear form) * R_1 inside R_2.
    unsigned rank_linear_form(const std::vector<Scalar>& coords) const;

    // Basis of {u in R_1 : u*y = 0}, as coordinate vectors in basis(1).
    std::vector<std::vector<Scalar>> annihilator(const std::vector<Scalar>& y) const;

    // Back and forth between coordinate vectors and polynomials.
    Polynomial from_coords(const std::vector<Scalar>& coords, unsigned d) const;
    Polynomial linear_form(const std::vector<Scalar>& coords) const;

    // The same presentation with coefficients moved into `target`.
    GradedQuotient lift_field(const Field* target) const;

private:
    GradedQuotient() : order_(OrderKind::DegRevLex, 0) {}

    const Field* field_ = nullptr;
    unsigned nvars_ = 0;
    unsigned max_degree_ = 0;
    TermOrder order_;
    std::vector<Polynomial> gens_;
    std::vector<Polynomial> gb_;
    std::vector<std::vector<Monomial>> bases_;
    std::vector<std::map<std::vector<std::uint32_t>, unsigned>> index_;
    // var_maps_[d][v]: basis(d) -> basis(d+1), for d < max_degree.
    std::vector<std::vector<Matrix>> var_maps_;
    bool artinian_ = false;
};

// True when every generator is homogeneous of degree exactly 2.
bool quadratic_presentation(const std::vector<Polynomial>& gens);

// Enumerate representatives of the projective space P(F^n), normalized so the
// first nonzero coordinate is 1, calling `visit` on each; stops early when
// `visit` returns true.  Returns false without enumerating anything if the
// number of points exceeds `budget`.  Requires a finite field.
bool sweep_projective(const Field* f, unsigned n, std::uint64_t budget,
                      const std::function<bool(const std::vector<Scalar>&)>& visit);

struct SquareZeroClass {
    std::vector<Scalar> coords; // normalized: first nonzero coordinate is 1
    unsigned rank = 0;
};

struct SquareZeroSearchOptions {
    unsigned extension_cap = 3;                    // search F_{p^k} for k <= cap
    std::uint64_t exhaustive_budget = 10'000'000;  // max points for a full sweep
    unsigned slice_trials = 64;                    // random hyperplane slices
    std::uint64_t seed = 0;
};

struct SquareZeroForms {
    const Field* search_field = nullptr; // field over which the classes live
    std::vector<SquareZeroClass> classes;
    bool complete = false; // true when the listed classes are provably all of
                           // them over search_field (exhaustive sweep), or all
                           // of them over the closure (n = 3 count check)
};

// All (or, when exhaustion is impossible within budget, some) projective
// classes of linear forms with square zero in R_2, each with its rank.
// Searches the base field first and then extensions up to the configured
// degree cap; throws InconclusiveError (SEARCH_EXHAUSTED) when nothing was
// found and nonexistence over the closure could not be certified.
SquareZeroForms square_zero_forms(const GradedQuotient& r,
                                  const SquareZeroSearchOptions& opts = {});

struct TrivialExtensionReduction {
    GradedQuotient core;  // presented on fresh variables u_0..u_{m-1}
    unsigned removed = 0; // number of rank-0 directions eliminated
    // Old coordinates of the core variables: n x m matrix, column j = the
    // R_1 vector realizing core variable u_j.
    Matrix embed;
    // Basis of the span of rank-0 forms, in old coordinates.
    std::vector<std::vector<Scalar>> removed_basis;
};

// Quotient by the span of all rank-0 linear forms (the trivial-fiber-extension
// directions).  Idempotent; dims of the core agree with dims of R in degrees
// greater than 1.
TrivialExtensionReduction trivial_extension_reduce(const GradedQuotient& r);

// Presentation extended by linear forms (coordinates in basis(1)), rebuilt.
GradedQuotient quotient_by_forms(const GradedQuotient& r,
                                 const std::vector<std::vector<Scalar>>& forms);

} // namespace qgb
