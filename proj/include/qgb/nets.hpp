#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgb/algebra.hpp"
#include "qgb/matrix.hpp"
#include "qgb/polynomial.hpp"

namespace qgb {

// Fixed monomial basis for quadratic forms in three variables x, y, z:
//   index 0: x^2, 1: y^2, 2: z^2, 3: xy, 4: xz, 5: yz.
inline constexpr unsigned kNetMonomials = 6;

// A net of conics: a 3-dimensional space of quadratic forms in x, y, z,
// stored as a 3 x 6 coefficient matrix of rank 3 over the basis above.
struct Net {
    Matrix m;                    // 3 x 6, rank 3; row = one spanning quadric
    std::optional<int> type;     // 1..15 when built from a normal form
    std::optional<Scalar> j;     // Hesse parameter (normal form 15 only)

    const Field* field() const { return m.field(); }
};

// A count of projective objects that may be infinite.
struct Count {
    long value = 0;   // meaningful only when !infinite
    bool infinite = false;
    bool operator==(const Count& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};
inline Count finite_count(long v) { return Count{v, false}; }
inline Count infinite_count() { return Count{0, true}; }
std::string to_string(const Count& c);

// Hilbert-function shape of the quotient by the net, degrees 0..5:
//   a: 1,3,3,1,0,0   b: 1,3,3,3,3,3   c: 1,3,3,4,5,6
//   d: 1,3,3,2,2,2   e: 1,3,3,1,1,1
enum class HilbertClass { a, b, c, d, e };
char hilbert_class_letter(HilbertClass h);
const std::vector<unsigned>& hilbert_class_profile(HilbertClass h);

// Status of the quadratic-Groebner-basis column of the classification table.
enum class GQuadStatus {
    yes_with_certificate, // a verified quadratic reduced Groebner basis exists
    no_by_series_e,       // ruled out: no quadratic monomial ideal in three
                          // variables has Hilbert function 1,3,3,1,1,...
    search_failed,        // the bounded search found nothing (no certificate
                          // either way)
};
std::string to_string(GQuadStatus s);

// The fifteen normal forms, over a field of characteristic 0 or p >= 5.
// `j` may be supplied only for k = 15 and must satisfy j^3 not in
// {0, 1, -1/8}; it defaults to 2.  Throws HypothesisError otherwise.
Net normal_form(int k, const Field* f, std::optional<Scalar> j = std::nullopt);

// The rows of the net as polynomials in K[x, y, z] (degrevlex).
std::vector<Polynomial> net_quadrics(const Net& v);

// Build a net from three linearly independent quadratic forms in 3 variables.
// Throws HypothesisError when the input is not three independent quadrics.
Net net_from_quadrics(const std::vector<Polynomial>& gens);

// The net transformed by the linear substitution x_i -> sum_j rows[i][j] x_j.
// The substitution must be invertible.
Net apply_linear(const Net& v, const std::vector<std::vector<Scalar>>& rows);

// True when the two nets span the same subspace of quadratic forms.
bool same_span(const Net& a, const Net& b);

// Apolarity dual: the 3-dimensional kernel of the pairing
// <ax^2+...+f yz, a'x^2+...+f'yz> = 2aa' + 2bb' + 2cc' + dd' + ee' + ff'.
// An involution on nets (up to span).
Net dual_net(const Net& v);

// Number of projective classes of linear forms l with l^2 in the net.
Count count_square_lines(const Net& v, std::uint64_t seed = 0);

// Number of projective base points of the net (common zeros of its quadrics).
Count count_base_points(const Net& v, std::uint64_t seed = 0);

// If the net is the span of the partial derivatives of a cubic form, returns
// such a cubic (deterministically); otherwise nullopt.  The decision is exact
// for characteristic 0 and p >= 5.
std::optional<Polynomial> is_gradient_type(const Net& v);

// Hilbert-function class of K[x,y,z]/(net), degrees 0..5.
// Throws HypothesisError (NO_MATCH) if the profile is none of the five.
HilbertClass hilbert_class(const Net& v);

// Identify the type 1..15 of an arbitrary net from the invariant fingerprint
// (Hilbert class, #square lines, #base points, gradient type).  Throws
// InconclusiveError (NO_MATCH) when the fingerprint is not in the table.
int classify_by_fingerprint(const Net& v, std::uint64_t seed = 0);

// One expected row of the classification table (literature values).
struct TableRow {
    int type = 0;
    HilbertClass hclass = HilbertClass::a;
    Count q;            // square lines
    Count p;            // base points
    bool koszul = false;
    bool gquad = false; // is the quotient G-quadratic
    const char* wall = "";
    bool gradient = false;
    int dual = 0;       // type of the apolar dual net
};
const std::vector<TableRow>& expected_table();

// One computed row.
struct NetReport {
    int type = 0;
    HilbertClass hclass = HilbertClass::a;
    Count q;
    Count p;
    std::optional<Polynomial> gradient_cubic;
    int dual_type = 0;
    GQuadStatus gquad = GQuadStatus::search_failed;
    bool gquad_given_coords = false;   // certificate found without changing
                                       // coordinates
    // When a certificate exists: the coordinate change (column j = new basis
    // vector j in old coordinates), the degrevlex priority used (most
    // significant variable first) and the verified reduced basis.
    std::optional<Matrix> gquad_change;
    std::vector<unsigned> gquad_priority;
    std::vector<Polynomial> gquad_basis;
    std::string wall_name;
    bool koszul_literature = false;
};

struct TableReproduction {
    const Field* field = nullptr;
    std::vector<NetReport> rows;
    std::vector<std::string> mismatches; // empty means clean reproduction
    bool ok() const { return mismatches.empty(); }
};

// Recompute every column of the table (except the Koszul column and the
// names, which are literature labels) over `f` and diff against the expected
// values.  Deterministic for a fixed seed.
TableReproduction reproduce_table(const Field* f, std::uint64_t seed = 0);

// Certificate helper behind no_by_series_e: true when no ideal generated by
// quadratic monomials in 3 variables has Hilbert function 1,3,3,1,1 in
// degrees 0..4 (checked by enumerating all 64 subsets).
bool no_quadratic_monomial_ideal_has_series_e();

// Plain-text and CSV renderings of a reproduced table.
std::string render_table_text(const TableReproduction& t);
std::string render_table_csv(const TableReproduction& t);

} // namespace qgb
