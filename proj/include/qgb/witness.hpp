#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgb/algebra.hpp"
#include "qgb/error.hpp"
#include "qgb/matrix.hpp"

namespace qgb {

// Thrown by the constructive steps when they need a square root (or a point
// on a conic) that does not exist over the current coefficient field.  The
// pipeline catches it and retries over the next extension field; if it
// escapes, it reads as an inconclusive result.
class ExtensionNeeded : public InconclusiveError {
public:
    explicit ExtensionNeeded(const std::string& msg) : InconclusiveError(msg) {}
};

// A G-quadraticity certificate.  Column j of `basis` holds the coefficients,
// in the original variables, of the linear form that becomes new variable j;
// `priority` lists the new variables most significant first.
struct Witness {
    Matrix basis;
    std::vector<unsigned> priority;
    OrderKind kind = OrderKind::DegRevLex;
};

// Record of the constructive path taken, with the named forms and scalars it
// produced (coordinates are in basis(1) of the presentation that step ran on).
struct WitnessTrace {
    std::vector<std::string> path;
    std::map<std::string, std::vector<Scalar>> forms;
    std::map<std::string, Scalar> scalars;
    const Field* work_field = nullptr;
};

// Result of the independent witness check.
struct VerifyReport {
    bool ok = false;
    bool quadratic = false;
    unsigned max_degree = 0;     // largest degree in the reduced basis
    long dim_r3 = -1;            // standard monomials in degree 3; -1 = not checked
    std::vector<Polynomial> reduced;  // reduced Groebner basis, new coordinates
    std::string failure;         // offending element, when !ok
};

// Classification data for the 3-variable complete-intersection exception.
struct CIException {
    bool gquadratic = false;  // true iff the net of quadrics contains a square
    long square_lines = 0;    // kInfinitelyMany when infinitely many
    std::optional<Witness> witness;
    bool search_failed = false;  // gquadratic, but the bounded search found
                                 // no explicit witness
};

enum class OutcomeKind { Witness, CI, Inconclusive };

struct WitnessOutcome {
    OutcomeKind kind = OutcomeKind::Inconclusive;
    std::optional<Witness> witness;   // set for Witness, and for CI when found
    WitnessTrace trace;
    VerifyReport verification;        // filled whenever `witness` is set
    std::optional<CIException> ci;    // set for CI
    std::string reason;               // set for Inconclusive
};

struct WitnessConfig {
    std::uint64_t seed = 0;
    unsigned extension_cap = 6;               // try F_{p^k} for k <= cap
    std::uint64_t sweep_budget = 10'000'000;  // max points per projective sweep
    unsigned n3_random_changes = 200;         // bounded search attempts (n = 3)
};

// Main pipeline.  Requires a quadratic presentation of an Artinian standard
// graded algebra with dim R_2 = 3 (HypothesisError otherwise).  Splits off
// trivial fiber-extension directions, then either classifies the 3-variable
// core as a complete intersection or constructs a witness from a square-zero
// linear form, escalating the coefficient field when a step needs roots that
// do not exist.  Every returned witness is re-verified independently.
WitnessOutcome find_witness(const GradedQuotient& r, const WitnessConfig& cfg = {});

// Independent check: transport `gens` into the witness coordinates, run an
// uncapped Buchberger under the witness order, and test that the reduced
// basis is quadratic (and, when `require_r3_zero`, that no standard monomial
// of degree 3 survives).
VerifyReport verify_witness(const std::vector<Polynomial>& gens, const Witness& w,
                            bool require_r3_zero);

// Bounded heuristic for 3-variable ideals: try the identity and then random
// invertible coordinate changes (installing the `pinned` columns first when
// given), each under all six degrevlex priorities; return the first witness
// whose capped Buchberger run yields a quadratic reduced basis.
std::optional<Witness> search_quadratic_witness(
    const std::vector<Polynomial>& gens, unsigned random_changes,
    std::uint64_t seed, const std::vector<std::vector<Scalar>>& pinned = {});

// 3-variable core: an Artinian quadratic algebra with dim R_2 = 3 on three
// variables is a complete intersection (Hilbert 1,3,3,1; HypothesisError
// NOT_CI otherwise).  It is G-quadratic iff its net of quadrics contains the
// square of a linear form; when it does, a bounded search tries to produce
// an explicit witness.
CIException classify_n3(const GradedQuotient& r, const WitnessConfig& cfg = {});

// The constructive cases.  Each checks its hypotheses (HypothesisError with
// reason CASE_HYPOTHESIS_FAILED otherwise) and returns a witness; `y`, `z`,
// `t` are coordinate vectors in basis(1).
//
// (1) y square-zero of rank 3: new variables (x_2..x_n, y), y least
//     significant.
Witness lemma22_case1(const GradedQuotient& r, const std::vector<Scalar>& y,
                      WitnessTrace* trace = nullptr);
// (2) y square-zero of rank 2, z in ann(y) with z^2 in yR_1 and
//     zR_1 not contained in yR_1: new variables (x_3..x_n, z, y).
Witness lemma22_case2(const GradedQuotient& r, const std::vector<Scalar>& y,
                      const std::vector<Scalar>& z, WitnessTrace* trace = nullptr);
// (3) y square-zero of rank 2, t outside ann(y) with t^2 in yR_1 and
//     t*ann(y) not contained in yR_1: new variables (w, z_2..z_{n-2}, t, y)
//     where (y, z_i) is a basis of ann(y) and w completes.
Witness lemma22_case3(const GradedQuotient& r, const std::vector<Scalar>& y,
                      const std::vector<Scalar>& t, WitnessTrace* trace = nullptr);
// (4) y square-zero of rank 1: finds t with t^2 in yR_1 and
//     R_2 = yR_1 + tR_1 (sweeping the base field; ExtensionNeeded when the
//     sweep finds none), new variables (t, x_3..x_n, y).
Witness lemma22_case4(const GradedQuotient& r, const std::vector<Scalar>& y,
                      WitnessTrace* trace = nullptr,
                      std::uint64_t sweep_budget = 10'000'000);

// Rank-2 reduction: given square-zero y of rank 2, walks the case analysis
// (V^2 vs yR_1, the lambda matrix of a distinguished frame, partner search
// in the Hilbert 1,3,1 quotient) and dispatches to one of the cases above.
Witness prop21_rank2(const GradedQuotient& r, const std::vector<Scalar>& y,
                     WitnessTrace* trace = nullptr, std::uint64_t seed = 0,
                     std::uint64_t sweep_budget = 10'000'000);

// Partner search in a quotient S with Hilbert function 1,3,1: given z with
// z^2 != 0, find u with u^2 = 0 and uz != 0 (always possible over the
// closure; ExtensionNeeded when only an extension carries one).
std::vector<Scalar> lemma23_partner(const GradedQuotient& s,
                                    const std::vector<Scalar>& z,
                                    std::uint64_t seed = 0);

// Applicability probes over finite fields (used by the worked-example tests):
// does some form in the swept fields satisfy the hypotheses of case (2) /
// case (3) for this y?
bool case2_applicable(const GradedQuotient& r, const std::vector<Scalar>& y,
                      unsigned extension_cap = 2,
                      std::uint64_t budget = 2'000'000);
bool case3_applicable(const GradedQuotient& r, const std::vector<Scalar>& y,
                      unsigned extension_cap = 2,
                      std::uint64_t budget = 2'000'000);

} // namespace qgb
