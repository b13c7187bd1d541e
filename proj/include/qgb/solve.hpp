#pragma once

#include "qgb/polynomial.hpp"
#include "qgb/univariate.hpp"

#include <vector>

namespace qgb {

// Univariate image of a polynomial supported on the single variable `var`
// (all other exponents must be zero).
Univariate to_univariate(const Polynomial& f, unsigned var);

// All points with coordinates in the coefficient field of the affine zero
// set of `gens`.  The zero set must be finite over the algebraic closure;
// points whose coordinates live in a proper extension are simply not
// returned.  Solved by lexicographic elimination: the last variable is
// eliminated to a univariate polynomial, its roots are back-substituted and
// the smaller system is solved recursively.
std::vector<std::vector<Scalar>> affine_points(const std::vector<Polynomial>& gens);

// All points with coordinates in the coefficient field of the projective
// zero set of the homogeneous `gens`, one representative per point,
// normalized so that the first nonzero coordinate (in variable order) is 1.
// The projective zero set must be finite over the closure.
std::vector<std::vector<Scalar>> projective_points(const std::vector<Polynomial>& gens);

} // namespace qgb
