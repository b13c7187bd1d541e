#pragma once

#include "qgb/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qgb {

// Result of a Buchberger run.  When `capped` is true the computation was
// aborted because a basis element of degree greater than the requested cap
// appeared; `basis` then holds the raw intermediate basis, not a reduced one.
struct GBResult {
    std::vector<Polynomial> basis;
    bool capped = false;
};

// Full normal form of `f` modulo the list `gens`.  Terms are rewritten from
// the largest downwards; the first generator (in list order) whose leading
// monomial divides the current term is used.  The result has no term
// divisible by any leading monomial of `gens`.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& gens);

// Buchberger's algorithm.  Pairs are processed in ascending order of
// (degree of the lcm of the leading monomials, insertion serial); pairs with
// coprime leading monomials are skipped.  If `degree_cap` is set, the run
// aborts with `capped = true` as soon as a nonzero normal form of degree
// greater than the cap would join the basis.  For homogeneous input this
// abort is exact: it happens if and only if the reduced basis contains an
// element of degree greater than the cap.  Without a cap the returned basis
// is the reduced one (monic, auto-reduced, canonically sorted).
GBResult buchberger(const std::vector<Polynomial>& gens,
                    std::optional<unsigned> degree_cap = std::nullopt);

// Turn a Groebner basis into the reduced Groebner basis: drop elements whose
// leading monomial is divisible by another's, fully reduce each element
// modulo the rest, make everything monic and sort by descending leading
// monomial.
std::vector<Polynomial> reduced_basis(std::vector<Polynomial> basis);

// True when every element of the (reduced) basis has degree at most 2.
bool is_quadratic_gb(const std::vector<Polynomial>& basis);

// Monomials of degree `d` not divisible by any leading monomial of `basis`,
// in descending order.  `nvars` and the order are taken from the basis; the
// basis must be nonempty (a zero ideal has no intrinsic variable count).
std::vector<Monomial> standard_monomials(const std::vector<Polynomial>& basis,
                                         unsigned d);

// Dimensions of the quotient in degrees 0..up_to.
std::vector<unsigned> hilbert_function(const std::vector<Polynomial>& basis,
                                       unsigned up_to);

// Krull dimension of S/in(I): the largest number of variables spanning a
// coordinate subspace not contained in the zero set of the leading terms.
unsigned cone_dimension(const std::vector<Polynomial>& basis,
                        unsigned nvars);

// Every variable has a pure power among the leading monomials.
bool is_zero_dimensional(const std::vector<Polynomial>& basis,
                         unsigned nvars);

inline constexpr long kInfinitelyMany = -1;

// Number of points, over the algebraic closure, of the projective zero set
// in P^2 of a list of homogeneous polynomials in exactly 3 variables.
// Returns kInfinitelyMany when the zero set has positive dimension.
// Counting runs three independent trials, each applying a random invertible
// change of coordinates and splitting P^2 into the standard affine charts;
// each chart ideal is made radical by adjoining the squarefree part of its
// eliminant in every variable, so the chart count is the exact dimension of
// the quotient.  If the trials disagree (engine bug, since each trial is
// exact) an InconclusiveError with reason RANDOMNESS_EXHAUSTED is thrown.
long count_projective_points(const std::vector<Polynomial>& gens,
                             std::uint64_t seed = 0);

}  // namespace qgb
