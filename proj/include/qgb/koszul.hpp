#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgb/algebra.hpp"

namespace qgb {

// Graded Betti numbers beta_{i,j} of the residue field K over a graded
// quotient R, truncated to homological degree <= max_i and internal degree
// <= max_j.  Entries outside the bounds are unknown, not zero.
struct BettiTable {
    unsigned max_i = 0;
    unsigned max_j = 0;
    // beta[i][j] for 0 <= i <= max_i, 0 <= j <= max_j
    std::vector<std::vector<long>> beta;

    long at(unsigned i, unsigned j) const {
        return i <= max_i && j <= max_j ? beta[i][j] : 0;
    }
};

// Minimal free resolution of K over R by degreewise exact linear algebra:
// kernels of the current presentation map degree by degree, with minimal
// generators split off as the complement of (maximal ideal) * kernel.
// Requires max_j >= max_i (throws HypothesisError DEGREE_BOUND_EXCEEDED
// otherwise); rebuilds R internally when it was built to a smaller degree.
BettiTable betti(const GradedQuotient& r, unsigned max_i, unsigned max_j);

// True iff every computed entry with j != i vanishes (the truncated
// resolution is by matrices of linear forms).
bool is_linear_up_to(const BettiTable& t);

// Smallest (i, j) with j > i and beta_{i,j} != 0, ordered by i then j.
std::optional<std::pair<unsigned, unsigned>> first_nonlinear(const BettiTable& t);

// Coefficientwise check of H_R(t) * sum_{i,j} (-1)^i beta_{i,j} t^j = 1 in
// degrees 1..min(max_i, max_j); `hf` must reach that degree.  Minimality
// (beta_{i,j} = 0 for j < i) makes the truncated identity exact.
bool euler_check(const BettiTable& t, const std::vector<unsigned>& hf);

// Macaulay-style layout: row d holds beta_{i, i+d}, plus a total row.
std::string render_betti(const BettiTable& t);

} // namespace qgb
