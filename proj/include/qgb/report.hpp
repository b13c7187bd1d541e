#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qgb/algebra.hpp"
#include "qgb/ideal_io.hpp"
#include "qgb/koszul.hpp"
#include "qgb/nets.hpp"
#include "qgb/witness.hpp"

namespace qgb {

using ordered_json = nlohmann::ordered_json;

// --------------------------------------------------------------------------
// JSON serialization (stable key order, deterministic content).  Scalars
// print in the ideal-file grammar over Q and prime fields; extension-field
// elements print as coefficient tuples.
std::string scalar_string(const Scalar& s);
ordered_json json_vector(const std::vector<Scalar>& v);
ordered_json json_matrix(const Matrix& m);
ordered_json json_polynomials(const std::vector<Polynomial>& ps,
                              const std::vector<std::string>& names);
ordered_json json_count(const Count& c);
ordered_json json_witness(const Witness& w, const std::vector<std::string>& names);
ordered_json json_verify(const VerifyReport& v);
ordered_json json_trace(const WitnessTrace& t);
ordered_json json_outcome(const WitnessOutcome& o, const std::vector<std::string>& names);
ordered_json json_betti(const BettiTable& t);
ordered_json json_table(const TableReproduction& t);

// --------------------------------------------------------------------------
// Reduce a rational ideal file mod p.  Throws HypothesisError when p is not
// an admissible characteristic, a coefficient denominator vanishes mod p, or
// the generators' span drops rank (a degenerate reduction).  Finite-field
// input is passed through when it already lives over F_p.
IdealFile reduce_mod_p(const IdealFile& in, std::uint64_t p);

// --------------------------------------------------------------------------
// Everything `analyze` reports about one input ideal.
struct AnalysisReport {
    IdealFile input;
    std::vector<unsigned> dims;  // dim R_d for d = 0..max_degree
    bool artinian = false;
    bool quadratic = false;
    // Nonempty when the input violates the pipeline hypotheses (not a
    // quadratic presentation, not Artinian, or dim R_2 != 3); the witness
    // pipeline and square-zero search are skipped in that case.
    std::string hypothesis_error;
    unsigned removed_directions = 0;  // rank-0 directions split off
    // Number of projective classes of linear forms per rank of l*R_1.
    std::map<unsigned, long> rank_spectrum;
    bool rank_spectrum_exact = false;  // exhaustive over the base field
    std::optional<SquareZeroForms> square_zero;
    std::string square_zero_note;
    std::optional<WitnessOutcome> outcome;
    // Net-of-conics classification, attempted for 3-variable inputs.
    std::optional<int> net_type;
    std::optional<char> net_hclass;
    std::optional<Count> net_q, net_p;
    std::string net_note;
    // Optional Koszul summary (graded Betti numbers of K over R).
    std::optional<BettiTable> betti_table;
};

AnalysisReport analyze_ideal(const IdealFile& in, const WitnessConfig& cfg = {},
                             unsigned max_degree = 3, bool with_betti = false);
ordered_json analysis_json(const AnalysisReport& a);
std::string render_analysis(const AnalysisReport& a);
int analysis_exit_code(const AnalysisReport& a);

// --------------------------------------------------------------------------
// Random corpus of conforming algebras: sample dim S_2 - 3 independent
// random quadrics (so dim R_2 = 3), reject non-Artinian or
// rank-0-containing samples, run the witness pipeline on the rest and
// verify every certificate.
struct CorpusItem {
    std::uint64_t sample_seed = 0;  // regenerates the sample deterministically
    OutcomeKind kind = OutcomeKind::Inconclusive;
    std::string field;   // field the witness lives over (when found)
    std::string detail;  // constructive path, or the inconclusive reason
    bool verified = false;
};
struct CorpusStats {
    unsigned nvars = 0;
    unsigned requested = 0;
    unsigned produced = 0;  // conforming samples analyzed
    unsigned rejected = 0;  // nonconforming samples skipped
    unsigned witnesses = 0;
    unsigned ci = 0;
    unsigned inconclusive = 0;
    unsigned verification_failures = 0;
    std::vector<CorpusItem> items;
    double seconds = 0.0;
};

// One sampling attempt; nullopt when the sample is rejected.
std::optional<std::vector<Polynomial>> sample_conforming(const Field* f, unsigned nvars,
                                                         std::uint64_t sample_seed);
CorpusStats run_corpus(const Field* f, unsigned nvars, unsigned count,
                       std::uint64_t seed, const WitnessConfig& cfg = {});
ordered_json corpus_json(const CorpusStats& c);
std::string render_corpus(const CorpusStats& c);

// --------------------------------------------------------------------------
// Randomized engine self-checks.
struct PropertySuite {
    std::string name;
    unsigned cases = 0;
    unsigned failures = 0;
    std::string first_failure;
};
std::vector<PropertySuite> run_property_suites(std::uint64_t seed, unsigned cases);
std::string render_properties(const std::vector<PropertySuite>& suites);

// --------------------------------------------------------------------------
// Acceptance suite: one pass/fail line per criterion.
struct AcceptanceItem {
    int criterion = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};
struct AcceptanceOptions {
    std::uint64_t seed = 0;
    std::uint64_t p = 101;
    std::string fixtures;            // empty: $QGB_FIXTURES or "fixtures"
    unsigned corpus_count = 100;     // samples per variable count in criterion 5
    unsigned property_cases = 1000;  // cases per property suite in criterion 9
};
std::vector<AcceptanceItem> run_acceptance_suite(const AcceptanceOptions& opt = {});
std::string render_acceptance(const std::vector<AcceptanceItem>& items);
ordered_json acceptance_json(const std::vector<AcceptanceItem>& items);

// Directory holding the checked-in ideal files ($QGB_FIXTURES or "fixtures").
std::string fixtures_dir();

}  // namespace qgb
