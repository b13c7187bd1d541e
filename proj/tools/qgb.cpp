// qgb: quadratic Groebner-basis witnesses for Artinian quadratic algebras
// with dim R_2 = 3, plus the nets-of-conics classification tooling.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "qgb/report.hpp"

namespace {

using namespace qgb;

struct GlobalOptions {
    std::optional<std::uint64_t> p;
    std::uint64_t seed = 0;
    bool json = false;
    unsigned max_degree = 3;
};

IdealFile load_input(const std::string& path, const GlobalOptions& g) {
    IdealFile in = load_ideal(path);
    if (g.p && !(in.field->finite() && in.field->degree() == 1 &&
                 in.field->characteristic() == *g.p))
        in = reduce_mod_p(in, *g.p);
    return in;
}

const Field* table_field(const GlobalOptions& g) { return prime_field(g.p.value_or(101)); }

void emit(const GlobalOptions& g, const ordered_json& j, const std::string& text) {
    if (g.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_analyze(const GlobalOptions& g, const std::string& path, bool with_betti) {
    const IdealFile in = load_input(path, g);
    WitnessConfig cfg;
    cfg.seed = g.seed;
    const AnalysisReport a = analyze_ideal(in, cfg, g.max_degree, with_betti);
    emit(g, analysis_json(a), render_analysis(a));
    return analysis_exit_code(a);
}

int cmd_witness(const GlobalOptions& g, const std::string& path) {
    const IdealFile in = load_input(path, g);
    WitnessConfig cfg;
    cfg.seed = g.seed;
    const GradedQuotient r = GradedQuotient::build(in.gens, std::max(3u, g.max_degree));
    const WitnessOutcome o = find_witness(r, cfg);

    std::ostringstream os;
    const std::vector<std::string>& names = in.names;
    switch (o.kind) {
        case OutcomeKind::Witness: os << "witness found\n"; break;
        case OutcomeKind::CI:
            os << "3-variable complete intersection: "
               << (o.ci->gquadratic ? "G-quadratic" : "not G-quadratic") << "\n";
            break;
        case OutcomeKind::Inconclusive: os << "inconclusive: " << o.reason << "\n"; break;
    }
    if (!o.trace.path.empty()) {
        os << "path:";
        for (const auto& step : o.trace.path) os << " " << step;
        os << "\n";
    }
    if (o.witness) {
        const Witness& w = *o.witness;
        const std::vector<std::string> new_names =
            default_names(static_cast<unsigned>(w.basis.cols()));
        os << "new variables:\n";
        for (std::size_t j = 0; j < w.basis.cols(); ++j) {
            os << "  " << new_names[j] << " =";
            for (std::size_t i = 0; i < w.basis.rows(); ++i)
                if (!w.basis.at(i, j).is_zero())
                    os << " + (" << w.basis.at(i, j).to_string() << ")*" << names[i];
            os << "\n";
        }
        os << "priority (most significant first):";
        for (unsigned v : w.priority) os << " " << new_names[v];
        os << "\n";
        os << "verification: " << (o.verification.ok ? "ok" : "FAILED") << ", max degree "
           << o.verification.max_degree << ", dim R_3 = " << o.verification.dim_r3 << "\n";
        os << "reduced basis (new coordinates):\n";
        for (const auto& p : o.verification.reduced)
            os << "  " << p.to_string(new_names) << "\n";
    }
    emit(g, json_outcome(o, names), os.str());
    if (o.kind == OutcomeKind::Inconclusive) return static_cast<int>(ExitCode::Inconclusive);
    return 0;
}

int cmd_nets_table(const GlobalOptions& g, bool csv) {
    const TableReproduction t = reproduce_table(table_field(g), g.seed);
    emit(g, json_table(t), csv ? render_table_csv(t) : render_table_text(t));
    return t.ok() ? 0 : static_cast<int>(ExitCode::Verification);
}

int cmd_nets_show(const GlobalOptions& g, int type, const std::string& j_param) {
    const Field* f = table_field(g);
    std::optional<Scalar> j;
    if (!j_param.empty()) j = f->from_string(j_param);
    const Net v = normal_form(type, f, j);
    const std::vector<std::string> names = default_names(3);

    ordered_json out;
    std::ostringstream os;
    out["type"] = type;
    os << "type " << type << " over " << f->name() << "\n";
    out["quadrics"] = json_polynomials(net_quadrics(v), names);
    os << "quadrics:\n";
    for (const auto& q : net_quadrics(v)) os << "  " << q.to_string(names) << "\n";
    const HilbertClass h = hilbert_class(v);
    out["hilbert_class"] = std::string(1, hilbert_class_letter(h));
    os << "hilbert class: " << hilbert_class_letter(h) << " (";
    const auto& profile = hilbert_class_profile(h);
    for (std::size_t i = 0; i < profile.size(); ++i) os << (i ? ", " : "") << profile[i];
    os << ")\n";
    const Count q = count_square_lines(v, g.seed);
    const Count p = count_base_points(v, g.seed);
    out["square_lines"] = json_count(q);
    out["base_points"] = json_count(p);
    os << "square lines: " << to_string(q) << "\n";
    os << "base points: " << to_string(p) << "\n";
    const auto cubic = is_gradient_type(v);
    out["gradient"] = cubic.has_value();
    os << "gradient type: " << (cubic ? "yes" : "no");
    if (cubic) {
        out["gradient_cubic"] = cubic->to_string(names);
        os << " (" << cubic->to_string(names) << ")";
    }
    os << "\n";
    const int dual_type = classify_by_fingerprint(dual_net(v), g.seed);
    out["dual_type"] = dual_type;
    os << "dual type: " << dual_type << "\n";
    emit(g, out, os.str());
    return 0;
}

int cmd_koszul(const GlobalOptions& g, const std::string& path, unsigned max_i,
               std::optional<unsigned> max_j_opt) {
    const IdealFile in = load_input(path, g);
    const unsigned max_j = max_j_opt.value_or(max_i);
    const BettiTable t = betti(GradedQuotient::build(in.gens, 2), max_i, max_j);
    const std::vector<unsigned> hf =
        hilbert_function(buchberger(in.gens).basis, std::min(max_i, max_j));

    std::ostringstream os;
    os << render_betti(t);
    os << "linear through (" << max_i << ", " << max_j
       << "): " << (is_linear_up_to(t) ? "yes" : "no") << "\n";
    if (const auto nl = first_nonlinear(t))
        os << "first nonlinear entry: (" << nl->first << ", " << nl->second << ") = "
           << t.at(nl->first, nl->second) << "\n";
    os << "euler check: " << (euler_check(t, hf) ? "ok" : "FAILED") << "\n";

    ordered_json out = json_betti(t);
    out["euler_check"] = euler_check(t, hf);
    emit(g, out, os.str());
    return 0;
}

int cmd_corpus(const GlobalOptions& g, unsigned nvars, unsigned count) {
    const Field* f = table_field(g);
    const CorpusStats st = run_corpus(f, nvars, count, g.seed);
    emit(g, corpus_json(st), render_corpus(st));
    return st.verification_failures == 0 ? 0 : static_cast<int>(ExitCode::Verification);
}

int cmd_reproduce(const GlobalOptions& g, const std::string& fixtures, unsigned corpus_count,
                  unsigned property_cases) {
    AcceptanceOptions opt;
    opt.seed = g.seed;
    opt.p = g.p.value_or(101);
    opt.fixtures = fixtures;
    opt.corpus_count = corpus_count;
    opt.property_cases = property_cases;
    const auto items = run_acceptance_suite(opt);
    emit(g, acceptance_json(items), render_acceptance(items));
    for (const auto& item : items)
        if (!item.passed) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadratic Groebner-basis witnesses and nets-of-conics classification"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--p", g.p, "prime characteristic: reduce rational input mod p / field for net and corpus commands");
    app.add_option("--seed", g.seed, "seed for all randomized searches");
    app.add_flag("--json", g.json, "emit JSON instead of text");
    app.add_option("--max-degree", g.max_degree, "graded depth for analyze/witness")
        ->default_val(3);

    std::string path;
    bool with_betti = false;
    auto* analyze = app.add_subcommand("analyze", "full report on an ideal file");
    analyze->add_option("file", path, "ideal file")->required();
    analyze->add_flag("--betti", with_betti, "include a Betti-table summary");

    auto* witness = app.add_subcommand("witness", "run only the witness pipeline");
    witness->add_option("file", path, "ideal file")->required();

    auto* nets = app.add_subcommand("nets", "nets-of-conics classification");
    nets->require_subcommand(1);
    bool csv = false;
    auto* table = nets->add_subcommand("table", "recompute the 15-row classification table");
    table->add_flag("--csv", csv, "render as CSV");
    int show_type = 0;
    std::string j_param;
    auto* show = nets->add_subcommand("show", "one normal form and its invariants");
    show->add_option("type", show_type, "normal form number (1-15)")->required();
    show->add_option("--j", j_param, "Hesse parameter (type 15 only)");

    unsigned max_i = 4;
    std::optional<unsigned> max_j;
    auto* koszul = app.add_subcommand("koszul", "Betti table of the residue field");
    koszul->add_option("file", path, "ideal file")->required();
    koszul->add_option("--max-i", max_i, "homological degree bound")->default_val(4);
    koszul->add_option("--max-j", max_j, "internal degree bound (default: --max-i)");

    unsigned nvars = 4, count = 20;
    auto* corpus = app.add_subcommand("corpus", "random conforming algebras through the pipeline");
    corpus->add_option("--nvars", nvars, "number of variables")->default_val(4);
    corpus->add_option("--count", count, "number of conforming samples")->default_val(20);

    std::string fixtures;
    unsigned corpus_count = 100, property_cases = 1000;
    auto* reproduce = app.add_subcommand("reproduce", "run the full acceptance suite");
    reproduce->add_option("--fixtures", fixtures, "fixtures directory");
    reproduce->add_option("--corpus-count", corpus_count, "corpus samples per variable count")
        ->default_val(100);
    reproduce->add_option("--property-cases", property_cases, "cases per property suite")
        ->default_val(1000);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(qgb::ExitCode::Parse);
    }

    try {
        if (*analyze) return cmd_analyze(g, path, with_betti);
        if (*witness) return cmd_witness(g, path);
        if (*table) return cmd_nets_table(g, csv);
        if (*show) return cmd_nets_show(g, show_type, j_param);
        if (*koszul) return cmd_koszul(g, path, max_i, max_j);
        if (*corpus) return cmd_corpus(g, nvars, count);
        if (*reproduce) return cmd_reproduce(g, fixtures, corpus_count, property_cases);
    } catch (const qgb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return static_cast<int>(qgb::ExitCode::Verification);
    }
    return 0;
}
