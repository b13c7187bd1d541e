#include "qgb/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <future>
#include <sstream>
#include <thread>

#include "qgb/rng.hpp"

namespace qgb {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(const Clock::time_point& t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// splitmix64: decorrelates (seed, counter) pairs into per-item seeds.
std::uint64_t scramble(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + counter * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string linear_form_string(const std::vector<Scalar>& coords,
                               const std::vector<std::string>& names,
                               const Field* f) {
    TermOrder ord(OrderKind::DegRevLex, static_cast<unsigned>(coords.size()));
    std::vector<Term> terms;
    for (unsigned i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero())
            terms.push_back({Monomial::variable(static_cast<unsigned>(coords.size()), i),
                             coords[i]});
    return Polynomial::from_terms(f, ord, std::move(terms)).to_string(names);
}

}  // namespace

// ---------------------------------------------------------------------------
// JSON serializers

std::string scalar_string(const Scalar& s) { return s.to_string(); }

ordered_json json_vector(const std::vector<Scalar>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& s : v) a.push_back(scalar_string(s));
    return a;
}

ordered_json json_matrix(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    ordered_json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = std::move(rows);
    return out;
}

ordered_json json_polynomials(const std::vector<Polynomial>& ps,
                              const std::vector<std::string>& names) {
    ordered_json a = ordered_json::array();
    for (const auto& p : ps) a.push_back(p.to_string(names));
    return a;
}

ordered_json json_count(const Count& c) {
    ordered_json out;
    out["finite"] = !c.infinite;
    if (!c.infinite) out["value"] = c.value;
    return out;
}

ordered_json json_witness(const Witness& w, const std::vector<std::string>& names) {
    ordered_json out;
    out["order"] = w.kind == OrderKind::DegRevLex ? "degrevlex" : "lex";
    out["priority"] = w.priority;
    out["basis"] = json_matrix(w.basis);
    ordered_json vars = ordered_json::array();
    const std::vector<std::string> new_names = default_names(static_cast<unsigned>(w.basis.cols()));
    for (std::size_t j = 0; j < w.basis.cols(); ++j)
        vars.push_back(new_names[j] + " = " +
                       linear_form_string(w.basis.col(j), names, w.basis.field()));
    out["new_variables"] = std::move(vars);
    return out;
}

ordered_json json_verify(const VerifyReport& v) {
    ordered_json out;
    out["ok"] = v.ok;
    out["quadratic"] = v.quadratic;
    out["max_degree"] = v.max_degree;
    out["dim_r3"] = v.dim_r3;
    unsigned nvars = v.reduced.empty() ? 0 : v.reduced.front().nvars();
    out["reduced_basis"] = json_polynomials(v.reduced, default_names(nvars));
    if (!v.failure.empty()) out["failure"] = v.failure;
    return out;
}

ordered_json json_trace(const WitnessTrace& t) {
    ordered_json out;
    out["path"] = t.path;
    ordered_json forms = ordered_json::object();
    for (const auto& [name, coords] : t.forms) forms[name] = json_vector(coords);
    out["forms"] = std::move(forms);
    ordered_json scalars = ordered_json::object();
    for (const auto& [name, s] : t.scalars) scalars[name] = scalar_string(s);
    out["scalars"] = std::move(scalars);
    if (t.work_field) out["field"] = t.work_field->name();
    return out;
}

ordered_json json_outcome(const WitnessOutcome& o, const std::vector<std::string>& names) {
    ordered_json out;
    switch (o.kind) {
        case OutcomeKind::Witness: out["kind"] = "witness"; break;
        case OutcomeKind::CI: out["kind"] = "ci"; break;
        case OutcomeKind::Inconclusive: out["kind"] = "inconclusive"; break;
    }
    if (o.witness) {
        out["witness"] = json_witness(*o.witness, names);
        out["verification"] = json_verify(o.verification);
    }
    out["trace"] = json_trace(o.trace);
    if (o.ci) {
        ordered_json ci;
        ci["gquadratic"] = o.ci->gquadratic;
        ci["square_lines"] = o.ci->square_lines == kInfinitelyMany
                                 ? ordered_json("inf")
                                 : ordered_json(o.ci->square_lines);
        ci["search_failed"] = o.ci->search_failed;
        out["ci"] = std::move(ci);
    }
    if (!o.reason.empty()) out["reason"] = o.reason;
    return out;
}

ordered_json json_betti(const BettiTable& t) {
    ordered_json out;
    out["max_i"] = t.max_i;
    out["max_j"] = t.max_j;
    out["beta"] = t.beta;
    out["linear"] = is_linear_up_to(t);
    if (auto nl = first_nonlinear(t)) {
        out["first_nonlinear"] = ordered_json::array({nl->first, nl->second});
    } else {
        out["first_nonlinear"] = nullptr;
    }
    return out;
}

ordered_json json_table(const TableReproduction& t) {
    ordered_json out;
    out["field"] = t.field ? t.field->name() : "";
    out["ok"] = t.ok();
    out["mismatches"] = t.mismatches;
    ordered_json rows = ordered_json::array();
    const std::vector<std::string> names = default_names(3);
    for (const auto& r : t.rows) {
        ordered_json row;
        row["type"] = r.type;
        row["hilbert_class"] = std::string(1, hilbert_class_letter(r.hclass));
        row["square_lines"] = json_count(r.q);
        row["base_points"] = json_count(r.p);
        row["gradient"] = r.gradient_cubic.has_value();
        if (r.gradient_cubic) row["gradient_cubic"] = r.gradient_cubic->to_string(names);
        row["dual_type"] = r.dual_type;
        row["gquad"] = to_string(r.gquad);
        row["gquad_given_coords"] = r.gquad_given_coords;
        if (r.gquad_change) {
            row["gquad_change"] = json_matrix(*r.gquad_change);
            row["gquad_priority"] = r.gquad_priority;
            row["gquad_basis"] = json_polynomials(r.gquad_basis, names);
        }
        row["wall"] = r.wall_name;
        row["koszul_literature"] = r.koszul_literature;
        rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    return out;
}

// ---------------------------------------------------------------------------
// Reduction mod p

IdealFile reduce_mod_p(const IdealFile& in, std::uint64_t p) {
    const Field* fp = prime_field(p);
    if (in.field == fp) return in;
    if (in.field->finite())
        throw HypothesisError("REDUCE_MOD_P: input already lives over " + in.field->name() +
                              "; only rational input can be reduced mod " + std::to_string(p));

    const unsigned n = static_cast<unsigned>(in.names.size());
    const TermOrder ord(OrderKind::DegRevLex, n);
    IdealFile out;
    out.field = fp;
    out.names = in.names;
    for (const auto& g : in.gens) {
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            Scalar c = fp->from_mpq(t.coef.rational());  // throws on denominator hit
            if (!c.is_zero()) terms.push_back({t.mono, c});
        }
        out.gens.push_back(Polynomial::from_terms(fp, ord, std::move(terms)));
    }

    // Degeneration check: the reduced generators must span a space of the
    // same dimension as the rational ones.
    auto span_rank = [](const std::vector<Polynomial>& gens, const Field* f) {
        std::map<std::vector<std::uint32_t>, std::size_t> col;
        for (const auto& g : gens)
            for (const auto& t : g.terms())
                col.emplace(t.mono.exponents(), col.size());
        if (col.empty()) return static_cast<std::size_t>(0);
        Matrix m(f, gens.size(), col.size());
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (const auto& t : gens[i].terms())
                m.at(i, col.at(t.mono.exponents())) = t.coef;
        return m.rank();
    };
    if (span_rank(out.gens, fp) != span_rank(in.gens, in.field))
        throw HypothesisError("REDUCE_MOD_P: the generators degenerate mod " +
                              std::to_string(p) + " (their span drops rank)");
    return out;
}

// ---------------------------------------------------------------------------
// analyze

AnalysisReport analyze_ideal(const IdealFile& in, const WitnessConfig& cfg,
                             unsigned max_degree, bool with_betti) {
    if (in.gens.empty())
        throw HypothesisError("ANALYZE: the ideal file lists no generators");
    AnalysisReport a;
    a.input = in;
    const unsigned n = static_cast<unsigned>(in.names.size());
    a.quadratic = quadratic_presentation(in.gens);

    const unsigned depth = std::max(3u, max_degree);
    GradedQuotient r = GradedQuotient::build(in.gens, depth);
    a.dims = r.hilbert();
    a.artinian = r.artinian();

    // Rank spectrum of R_1: exhaustive over small finite fields, sampled
    // otherwise.
    {
        const Field* f = r.field();
        bool exhaustive = false;
        if (f->finite()) {
            mpz_class points = 0, power = 1;
            for (unsigned i = 0; i < n; ++i) {
                points += power;
                power *= f->order();
            }
            exhaustive = points <= 60'000;
        }
        if (exhaustive) {
            sweep_projective(f, n, 60'000, [&](const std::vector<Scalar>& pt) {
                ++a.rank_spectrum[r.rank_linear_form(pt)];
                return false;
            });
            a.rank_spectrum_exact = true;
        } else {
            Rng rng(scramble(cfg.seed, 0x5bec));
            for (unsigned i = 0; i < n; ++i) {
                std::vector<Scalar> e(n, f->zero());
                e[i] = f->one();
                ++a.rank_spectrum[r.rank_linear_form(e)];
            }
            for (unsigned trial = 0; trial < 400; ++trial) {
                std::vector<Scalar> v(n, f->zero());
                bool nonzero = false;
                for (auto& c : v) {
                    c = rng.scalar(f);
                    nonzero = nonzero || !c.is_zero();
                }
                if (!nonzero) continue;
                ++a.rank_spectrum[r.rank_linear_form(v)];
            }
            a.rank_spectrum_exact = false;
        }
    }

    if (!a.quadratic) {
        a.hypothesis_error =
            "HYPOTHESIS_VIOLATION: the generators are not all homogeneous of degree 2";
    } else if (!a.artinian) {
        a.hypothesis_error = "HYPOTHESIS_VIOLATION: the quotient is not Artinian";
    } else if (r.dim(2) != 3) {
        a.hypothesis_error = "HYPOTHESIS_VIOLATION: dim R_2 = " + std::to_string(r.dim(2)) +
                             ", the pipeline requires dim R_2 = 3";
    }

    // Net-of-conics classification for 3-variable inputs.
    if (n == 3) {
        try {
            Net v = net_from_quadrics(in.gens);
            a.net_hclass = hilbert_class_letter(hilbert_class(v));
            a.net_q = count_square_lines(v, cfg.seed);
            a.net_p = count_base_points(v, cfg.seed);
            a.net_type = classify_by_fingerprint(v, cfg.seed);
        } catch (const Error& e) {
            a.net_note = e.what();
        }
    }

    if (a.hypothesis_error.empty()) {
        a.removed_directions = trivial_extension_reduce(r).removed;
        SquareZeroSearchOptions opts;
        opts.extension_cap = 2;
        opts.exhaustive_budget = 2'000'000;
        opts.seed = cfg.seed;
        try {
            a.square_zero = square_zero_forms(r, opts);
        } catch (const InconclusiveError& e) {
            a.square_zero_note = e.what();
        }
        a.outcome = find_witness(r, cfg);
    }

    if (with_betti) a.betti_table = betti(r, 4, 4);
    return a;
}

int analysis_exit_code(const AnalysisReport& a) {
    if (!a.hypothesis_error.empty()) return static_cast<int>(ExitCode::Hypothesis);
    if (a.outcome && a.outcome->kind == OutcomeKind::Inconclusive)
        return static_cast<int>(ExitCode::Inconclusive);
    return static_cast<int>(ExitCode::Ok);
}

ordered_json analysis_json(const AnalysisReport& a) {
    ordered_json out;
    ordered_json input;
    input["field"] = a.input.field->name();
    input["variables"] = a.input.names;
    input["generators"] = json_polynomials(a.input.gens, a.input.names);
    out["input"] = std::move(input);
    out["quadratic_presentation"] = a.quadratic;
    out["hilbert_function"] = a.dims;
    out["artinian"] = a.artinian;
    ordered_json spectrum = ordered_json::object();
    for (const auto& [rank, count] : a.rank_spectrum)
        spectrum[std::to_string(rank)] = count;
    out["rank_spectrum"] = std::move(spectrum);
    out["rank_spectrum_exact"] = a.rank_spectrum_exact;
    if (!a.hypothesis_error.empty()) out["hypothesis_error"] = a.hypothesis_error;
    out["removed_directions"] = a.removed_directions;
    if (a.square_zero) {
        ordered_json sz;
        sz["field"] = a.square_zero->search_field->name();
        sz["complete"] = a.square_zero->complete;
        ordered_json classes = ordered_json::array();
        const std::vector<std::string> search_names = a.input.names;
        for (const auto& c : a.square_zero->classes) {
            ordered_json cls;
            cls["coords"] = json_vector(c.coords);
            cls["form"] = linear_form_string(c.coords, search_names,
                                             a.square_zero->search_field);
            cls["rank"] = c.rank;
            classes.push_back(std::move(cls));
        }
        sz["classes"] = std::move(classes);
        out["square_zero"] = std::move(sz);
    } else if (!a.square_zero_note.empty()) {
        out["square_zero_note"] = a.square_zero_note;
    }
    if (a.outcome) out["outcome"] = json_outcome(*a.outcome, a.input.names);
    if (a.net_type || !a.net_note.empty()) {
        ordered_json net;
        if (a.net_type) net["type"] = *a.net_type;
        if (a.net_hclass) net["hilbert_class"] = std::string(1, *a.net_hclass);
        if (a.net_q) net["square_lines"] = json_count(*a.net_q);
        if (a.net_p) net["base_points"] = json_count(*a.net_p);
        if (!a.net_note.empty()) net["note"] = a.net_note;
        out["net"] = std::move(net);
    }
    if (a.betti_table) out["betti"] = json_betti(*a.betti_table);
    out["exit_code"] = analysis_exit_code(a);
    return out;
}

std::string render_analysis(const AnalysisReport& a) {
    std::ostringstream os;
    os << "input: " << a.input.names.size() << " variables (" << join(a.input.names, ", ")
       << ") over " << a.input.field->name() << ", " << a.input.gens.size()
       << " generators\n";
    os << "quadratic presentation: " << (a.quadratic ? "yes" : "no") << "\n";
    os << "hilbert function (degrees 0.." << a.dims.size() - 1 << "): ";
    for (std::size_t i = 0; i < a.dims.size(); ++i) os << (i ? ", " : "") << a.dims[i];
    os << "\n";
    os << "artinian: " << (a.artinian ? "yes" : "no") << "\n";
    os << "rank spectrum of R_1 (" << (a.rank_spectrum_exact ? "exhaustive" : "sampled")
       << "):";
    for (const auto& [rank, count] : a.rank_spectrum)
        os << " rank " << rank << ": " << count << ";";
    os << "\n";
    if (!a.hypothesis_error.empty()) {
        os << "hypothesis check: " << a.hypothesis_error << "\n";
    } else {
        os << "trivial directions removed: " << a.removed_directions << "\n";
        if (a.square_zero) {
            os << "square-zero classes over " << a.square_zero->search_field->name() << " ("
               << (a.square_zero->complete ? "complete" : "partial") << "):\n";
            for (const auto& c : a.square_zero->classes)
                os << "  " << linear_form_string(c.coords, a.input.names,
                                                 a.square_zero->search_field)
                   << "   (rank " << c.rank << ")\n";
        } else if (!a.square_zero_note.empty()) {
            os << "square-zero search: " << a.square_zero_note << "\n";
        }
        if (a.outcome) {
            const WitnessOutcome& o = *a.outcome;
            if (o.kind == OutcomeKind::Inconclusive) {
                os << "witness pipeline: inconclusive — " << o.reason << "\n";
            } else {
                if (o.kind == OutcomeKind::CI) {
                    os << "witness pipeline: 3-variable complete intersection, "
                       << (o.ci->gquadratic ? "G-quadratic" : "not G-quadratic");
                    if (o.ci->gquadratic && !o.witness)
                        os << " (bounded certificate search failed)";
                    os << "\n";
                } else {
                    os << "witness pipeline: witness found\n";
                }
                if (!o.trace.path.empty())
                    os << "  constructive path: " << join(o.trace.path, " -> ") << "\n";
                if (o.witness) {
                    const Witness& w = *o.witness;
                    const std::vector<std::string> new_names =
                        default_names(static_cast<unsigned>(w.basis.cols()));
                    os << "  new variables (listed by index):\n";
                    for (std::size_t j = 0; j < w.basis.cols(); ++j)
                        os << "    " << new_names[j] << " = "
                           << linear_form_string(w.basis.col(j), a.input.names,
                                                 w.basis.field())
                           << "\n";
                    os << "  order: "
                       << (w.kind == OrderKind::DegRevLex ? "degrevlex" : "lex")
                       << ", priority (most significant first):";
                    for (unsigned v : w.priority) os << " " << new_names[v];
                    os << "\n";
                    const VerifyReport& ver = o.verification;
                    os << "  verification: " << (ver.ok ? "ok" : "FAILED")
                       << ", max degree " << ver.max_degree;
                    if (ver.dim_r3 >= 0) os << ", dim R_3 = " << ver.dim_r3;
                    os << "\n";
                    os << "  reduced basis (new coordinates):\n";
                    for (const auto& g : ver.reduced)
                        os << "    " << g.to_string(new_names) << "\n";
                }
            }
        }
    }
    if (a.net_type) {
        os << "net classification: type " << *a.net_type;
        if (a.net_hclass) os << " (hilbert class " << *a.net_hclass;
        if (a.net_q) os << ", square lines " << to_string(*a.net_q);
        if (a.net_p) os << ", base points " << to_string(*a.net_p);
        if (a.net_hclass) os << ")";
        os << "\n";
    } else if (!a.net_note.empty()) {
        os << "net classification: " << a.net_note << "\n";
    }
    if (a.betti_table) {
        os << "betti table of the residue field (i <= " << a.betti_table->max_i
           << ", j <= " << a.betti_table->max_j << "): "
           << (is_linear_up_to(*a.betti_table) ? "linear" : "not linear") << "\n";
        os << render_betti(*a.betti_table);
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// corpus

std::optional<std::vector<Polynomial>> sample_conforming(const Field* f, unsigned nvars,
                                                         std::uint64_t sample_seed) {
    const unsigned dim_s2 = nvars * (nvars + 1) / 2;
    if (nvars < 3)
        throw HypothesisError("CORPUS: need at least 3 variables");
    const unsigned k = dim_s2 - 3;
    const TermOrder ord(OrderKind::DegRevLex, nvars);
    const std::vector<Monomial> mons = monomials_of_degree(nvars, 2, ord);

    Rng rng(sample_seed);
    std::vector<Polynomial> gens;
    Matrix coef(f, k, dim_s2);
    for (unsigned i = 0; i < k; ++i) {
        std::vector<Term> terms;
        for (unsigned j = 0; j < dim_s2; ++j) {
            Scalar c = rng.scalar(f);
            coef.at(i, j) = c;
            if (!c.is_zero()) terms.push_back({mons[j], c});
        }
        gens.push_back(Polynomial::from_terms(f, ord, std::move(terms)));
    }
    if (coef.rank() != k) return std::nullopt;  // dependent quadrics

    GradedQuotient r = GradedQuotient::build(gens, 3);
    if (!r.artinian() || r.dim(2) != 3) return std::nullopt;

    // Reject samples containing a rank-0 direction: l with l * R_1 = 0.
    Matrix stacked = r.var_map(0, 1);
    for (unsigned v = 1; v < nvars; ++v) stacked = stacked.vstack(r.var_map(v, 1));
    if (stacked.rank() != nvars) return std::nullopt;

    return gens;
}

CorpusStats run_corpus(const Field* f, unsigned nvars, unsigned count,
                       std::uint64_t seed, const WitnessConfig& cfg) {
    const auto t0 = Clock::now();
    CorpusStats st;
    st.nvars = nvars;
    st.requested = count;

    // Pre-warm the extension ladder so parallel workers only read the field
    // registry.
    if (f->finite() && f->degree() == 1)
        for (unsigned k = 2; k <= cfg.extension_cap; ++k)
            extension_field(f->characteristic(), k);

    struct AttemptResult {
        bool conforming = false;
        CorpusItem item;
    };
    auto run_attempt = [&](std::uint64_t attempt) {
        AttemptResult res;
        const std::uint64_t sample_seed = scramble(seed, attempt + 1);
        auto gens = sample_conforming(f, nvars, sample_seed);
        if (!gens) return res;
        res.conforming = true;
        res.item.sample_seed = sample_seed;
        GradedQuotient r = GradedQuotient::build(*gens, 3);
        WitnessConfig item_cfg = cfg;
        item_cfg.seed = scramble(sample_seed, 0xC0);
        try {
            WitnessOutcome o = find_witness(r, item_cfg);
            res.item.kind = o.kind;
            if (o.witness) {
                res.item.field = o.witness->basis.field()->name();
                res.item.verified = o.verification.ok && o.verification.quadratic &&
                                    (o.kind != OutcomeKind::Witness || o.verification.dim_r3 == 0);
                res.item.detail = join(o.trace.path, " -> ");
            } else if (o.kind == OutcomeKind::CI) {
                res.item.detail = o.ci->gquadratic ? "ci: gquadratic, no certificate"
                                                   : "ci: not gquadratic";
                res.item.verified = true;
            } else {
                res.item.detail = o.reason;
            }
        } catch (const VerificationError& e) {
            res.item.kind = OutcomeKind::Inconclusive;
            res.item.detail = std::string("VERIFICATION_FAILED: ") + e.what();
            res.item.verified = false;
        }
        return res;
    };

    const unsigned workers =
        std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::uint64_t next_attempt = 0;
    std::vector<CorpusItem> taken;
    while (taken.size() < count && next_attempt < static_cast<std::uint64_t>(count) * 50 + 100) {
        const std::uint64_t block =
            std::max<std::uint64_t>(workers, (count - taken.size()) + (count - taken.size()) / 4 + 2);
        std::vector<std::future<AttemptResult>> futs;
        for (std::uint64_t i = 0; i < block; ++i) {
            const std::uint64_t attempt = next_attempt + i;
            futs.push_back(std::async(std::launch::async,
                                      [&run_attempt, attempt] { return run_attempt(attempt); }));
        }
        for (auto& fut : futs) {
            AttemptResult res = fut.get();
            if (taken.size() >= count) continue;  // drain remaining futures
            if (!res.conforming) {
                ++st.rejected;
                continue;
            }
            taken.push_back(std::move(res.item));
        }
        next_attempt += block;
    }

    st.produced = static_cast<unsigned>(taken.size());
    for (const auto& item : taken) {
        switch (item.kind) {
            case OutcomeKind::Witness: ++st.witnesses; break;
            case OutcomeKind::CI: ++st.ci; break;
            case OutcomeKind::Inconclusive: ++st.inconclusive; break;
        }
        if (item.kind == OutcomeKind::Witness && !item.verified) ++st.verification_failures;
        if (item.detail.rfind("VERIFICATION_FAILED", 0) == 0) ++st.verification_failures;
    }
    std::sort(taken.begin(), taken.end(),
              [](const CorpusItem& a, const CorpusItem& b) { return a.sample_seed < b.sample_seed; });
    st.items = std::move(taken);
    st.seconds = seconds_since(t0);
    return st;
}

ordered_json corpus_json(const CorpusStats& c) {
    ordered_json out;
    out["nvars"] = c.nvars;
    out["requested"] = c.requested;
    out["produced"] = c.produced;
    out["rejected"] = c.rejected;
    out["witnesses"] = c.witnesses;
    out["ci"] = c.ci;
    out["inconclusive"] = c.inconclusive;
    out["verification_failures"] = c.verification_failures;
    out["seconds"] = c.seconds;
    ordered_json items = ordered_json::array();
    for (const auto& it : c.items) {
        ordered_json j;
        j["sample_seed"] = it.sample_seed;
        switch (it.kind) {
            case OutcomeKind::Witness: j["kind"] = "witness"; break;
            case OutcomeKind::CI: j["kind"] = "ci"; break;
            case OutcomeKind::Inconclusive: j["kind"] = "inconclusive"; break;
        }
        if (!it.field.empty()) j["field"] = it.field;
        j["verified"] = it.verified;
        j["detail"] = it.detail;
        items.push_back(std::move(j));
    }
    out["items"] = std::move(items);
    return out;
}

std::string render_corpus(const CorpusStats& c) {
    std::ostringstream os;
    os << "corpus: " << c.produced << "/" << c.requested << " conforming samples on "
       << c.nvars << " variables (" << c.rejected << " rejected) in " << c.seconds
       << " s\n";
    os << "  witnesses: " << c.witnesses << ", complete intersections: " << c.ci
       << ", inconclusive: " << c.inconclusive << ", verification failures: "
       << c.verification_failures << "\n";
    std::map<std::string, unsigned> paths;
    for (const auto& it : c.items)
        if (it.kind == OutcomeKind::Witness) ++paths[it.detail];
    for (const auto& [path, count] : paths)
        os << "  path " << path << ": " << count << "\n";
    for (const auto& it : c.items)
        if (it.kind == OutcomeKind::Inconclusive)
            os << "  inconclusive sample " << it.sample_seed << ": " << it.detail << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// property suites

namespace {

Monomial random_monomial(Rng& rng, unsigned nvars, std::uint32_t max_exp) {
    Monomial m(nvars);
    for (unsigned i = 0; i < nvars; ++i)
        m.set(i, static_cast<std::uint32_t>(rng.next(max_exp + 1)));
    return m;
}

TermOrder random_order(Rng& rng, unsigned nvars) {
    std::vector<unsigned> priority(nvars);
    for (unsigned i = 0; i < nvars; ++i) priority[i] = i;
    for (unsigned i = nvars; i > 1; --i)
        std::swap(priority[i - 1], priority[rng.next(i)]);
    return TermOrder(rng.next(2) ? OrderKind::Lex : OrderKind::DegRevLex,
                     std::move(priority));
}

Polynomial random_homogeneous(Rng& rng, const Field* f, const TermOrder& ord,
                              unsigned degree) {
    const std::vector<Monomial> mons =
        monomials_of_degree(ord.nvars(), degree, ord);
    std::vector<Term> terms;
    for (const auto& m : mons) {
        Scalar c = rng.scalar(f);
        if (!c.is_zero()) terms.push_back({m, c});
    }
    return Polynomial::from_terms(f, ord, std::move(terms));
}

Polynomial nonzero_random_homogeneous(Rng& rng, const Field* f, const TermOrder& ord,
                                      unsigned degree) {
    for (int tries = 0; tries < 64; ++tries) {
        Polynomial p = random_homogeneous(rng, f, ord, degree);
        if (!p.is_zero()) return p;
    }
    throw std::logic_error("random homogeneous polynomial generation failed");
}

const Field* suite_field(unsigned index) {
    switch (index % 5) {
        case 0:
        case 1: return prime_field(101);
        case 2: return prime_field(5);
        case 3: return prime_field(7);
        default: return rationals();
    }
}

int sign_of(int v) { return v < 0 ? -1 : v > 0 ? 1 : 0; }

void record_failure(PropertySuite& suite, unsigned case_index, const std::string& what) {
    ++suite.failures;
    if (suite.first_failure.empty())
        suite.first_failure = "case " + std::to_string(case_index) + ": " + what;
}

PropertySuite suite_order_axioms(std::uint64_t seed, unsigned cases) {
    PropertySuite suite{"term order axioms", cases, 0, ""};
    Rng rng(scramble(seed, 1));
    for (unsigned i = 0; i < cases; ++i) {
        const unsigned nvars = 1 + static_cast<unsigned>(rng.next(4));
        const TermOrder ord = random_order(rng, nvars);
        const Monomial a = random_monomial(rng, nvars, 3);
        const Monomial b = random_monomial(rng, nvars, 3);
        const Monomial c = random_monomial(rng, nvars, 3);
        const Monomial m = random_monomial(rng, nvars, 2);
        if (ord.compare(a, a) != 0) {
            record_failure(suite, i, "compare(a, a) != 0");
            continue;
        }
        if (sign_of(ord.compare(a, b)) != -sign_of(ord.compare(b, a))) {
            record_failure(suite, i, "compare is not antisymmetric");
            continue;
        }
        if (ord.compare(a, b) == 0 && a != b) {
            record_failure(suite, i, "distinct monomials compare equal");
            continue;
        }
        if (ord.compare(a, b) <= 0 && ord.compare(b, c) <= 0 && ord.compare(a, c) > 0) {
            record_failure(suite, i, "compare is not transitive");
            continue;
        }
        if (sign_of(ord.compare(a, b)) != sign_of(ord.compare(a * m, b * m))) {
            record_failure(suite, i, "compare is not multiplication-invariant");
            continue;
        }
        const Monomial one(nvars);
        if (ord.compare(one, a) > 0) {
            record_failure(suite, i, "1 > a for some monomial a");
            continue;
        }
    }
    return suite;
}

PropertySuite suite_reduce_idempotence(std::uint64_t seed, unsigned cases) {
    PropertySuite suite{"reduce idempotence", cases, 0, ""};
    Rng rng(scramble(seed, 2));
    for (unsigned i = 0; i < cases; ++i) {
        const Field* f = suite_field(i);
        const unsigned nvars = 3;
        const TermOrder ord = random_order(rng, nvars);
        std::vector<Polynomial> gens;
        const unsigned ngens = 1 + static_cast<unsigned>(rng.next(3));
        for (unsigned g = 0; g < ngens; ++g)
            gens.push_back(nonzero_random_homogeneous(rng, f, ord, 2));
        const Polynomial p =
            random_homogeneous(rng, f, ord, 2 + static_cast<unsigned>(rng.next(2)));
        const Polynomial r = reduce(p, gens);
        if (reduce(r, gens) != r) {
            record_failure(suite, i, "reduce is not idempotent");
            continue;
        }
        bool divisible = false;
        for (const auto& t : r.terms())
            for (const auto& g : gens)
                if (g.leading_monomial().divides(t.mono)) divisible = true;
        if (divisible) {
            record_failure(suite, i, "normal form keeps a divisible term");
            continue;
        }
        bool self_ok = true;
        for (const auto& g : gens)
            if (!reduce(g, gens).is_zero()) self_ok = false;
        if (!self_ok) {
            record_failure(suite, i, "a generator does not reduce to zero");
            continue;
        }
    }
    return suite;
}

PropertySuite suite_spair_closure(std::uint64_t seed, unsigned cases) {
    PropertySuite suite{"buchberger S-pair closure", cases, 0, ""};
    Rng rng(scramble(seed, 3));
    for (unsigned i = 0; i < cases; ++i) {
        const Field* f = suite_field(i);
        const unsigned nvars = 3;
        const TermOrder ord = random_order(rng, nvars);
        std::vector<Polynomial> gens;
        const unsigned ngens = 2 + static_cast<unsigned>(rng.next(2));
        for (unsigned g = 0; g < ngens; ++g)
            gens.push_back(nonzero_random_homogeneous(rng, f, ord, 2));
        const std::vector<Polynomial> gb = buchberger(gens).basis;
        bool ok = true;
        for (const auto& g : gens)
            if (!reduce(g, gb).is_zero()) {
                record_failure(suite, i, "input generator not in the ideal of the basis");
                ok = false;
                break;
            }
        if (!ok) continue;
        for (std::size_t a = 0; a < gb.size() && ok; ++a) {
            for (std::size_t b = a + 1; b < gb.size() && ok; ++b) {
                const Monomial lcm =
                    Monomial::lcm(gb[a].leading_monomial(), gb[b].leading_monomial());
                const Polynomial s =
                    gb[a] * Polynomial::from_monomial(
                                f, ord, lcm.divide(gb[a].leading_monomial()), f->one()) -
                    gb[b] * Polynomial::from_monomial(
                                f, ord, lcm.divide(gb[b].leading_monomial()), f->one());
                if (!reduce(s, gb).is_zero()) {
                    record_failure(suite, i, "an S-polynomial does not reduce to zero");
                    ok = false;
                }
            }
        }
        if (!ok) continue;
        for (std::size_t a = 0; a < gb.size() && ok; ++a) {
            if (!gb[a].leading().coef.is_one()) {
                record_failure(suite, i, "basis element not monic");
                ok = false;
                break;
            }
            for (std::size_t b = 0; b < gb.size(); ++b) {
                if (a == b) continue;
                for (const auto& t : gb[a].terms())
                    if (gb[b].leading_monomial().divides(t.mono)) {
                        record_failure(suite, i, "basis not auto-reduced");
                        ok = false;
                    }
                if (!ok) break;
            }
        }
    }
    return suite;
}

PropertySuite suite_coordinate_invariance(std::uint64_t seed, unsigned cases) {
    PropertySuite suite{"coordinate-change invariance", cases, 0, ""};
    Rng rng(scramble(seed, 4));
    for (unsigned i = 0; i < cases; ++i) {
        const Field* f = i % 3 == 2 ? prime_field(7) : prime_field(101);
        const unsigned nvars = 3;
        const TermOrder ord(OrderKind::DegRevLex, nvars);
        std::vector<Polynomial> gens;
        for (unsigned g = 0; g < 3; ++g)
            gens.push_back(nonzero_random_homogeneous(rng, f, ord, 2));
        const Matrix change = rng.invertible(f, nvars);
        std::vector<std::vector<Scalar>> rows;
        for (unsigned r = 0; r < nvars; ++r) rows.push_back(change.row(r));
        const TermOrder ord2 = random_order(rng, nvars);
        std::vector<Polynomial> gens2;
        for (const auto& g : gens) gens2.push_back(g.substitute_linear(rows, ord2));
        const std::vector<unsigned> h1 = hilbert_function(buchberger(gens).basis, 4);
        const std::vector<unsigned> h2 = hilbert_function(buchberger(gens2).basis, 4);
        if (h1 != h2) {
            record_failure(suite, i, "hilbert function changed under a coordinate change");
            continue;
        }
        const BettiTable b1 = betti(GradedQuotient::build(gens, 2), 3, 3);
        const BettiTable b2 = betti(GradedQuotient::build(gens2, 2), 3, 3);
        if (b1.beta != b2.beta) {
            record_failure(suite, i, "betti numbers changed under a coordinate change");
            continue;
        }
    }
    return suite;
}

}  // namespace

std::vector<PropertySuite> run_property_suites(std::uint64_t seed, unsigned cases) {
    std::vector<PropertySuite> suites;
    suites.push_back(suite_order_axioms(seed, cases));
    suites.push_back(suite_reduce_idempotence(seed, cases));
    suites.push_back(suite_spair_closure(seed, cases));
    suites.push_back(suite_coordinate_invariance(seed, cases));
    return suites;
}

std::string render_properties(const std::vector<PropertySuite>& suites) {
    std::ostringstream os;
    for (const auto& s : suites) {
        os << s.name << ": " << s.cases - s.failures << "/" << s.cases << " passed";
        if (s.failures) os << " — first failure: " << s.first_failure;
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// acceptance

std::string fixtures_dir() {
    if (const char* env = std::getenv("QGB_FIXTURES")) return env;
    return "fixtures";
}

namespace {

struct Degeneration {
    const char* fixture;
    std::uint64_t p;
    const char* what;
};

// Small-prime degenerations of the checked-in worked examples, established
// by exhaustive sweeps during development.  Each entry names the square-zero
// class whose rank differs mod p from its rank in characteristic 0.
constexpr Degeneration kKnownDegenerations[] = {
    {"vandermonde_squares", 5, "the class t+z+w+y drops to rank 2"},
    {"vandermonde_squares", 7, "the class t+3z+2w+6y drops to rank 2"},
    {"vandermonde_squares", 11, "the coordinate direction w becomes square-zero of rank 2"},
};

const char* known_degeneration(const std::string& fixture, std::uint64_t p) {
    for (const auto& d : kKnownDegenerations)
        if (fixture == d.fixture && p == d.p) return d.what;
    return nullptr;
}

std::vector<Scalar> unit_vec(const Field* f, unsigned n, unsigned i) {
    std::vector<Scalar> v(n, f->zero());
    v[i] = f->one();
    return v;
}

bool same_class_set(const std::vector<SquareZeroClass>& classes,
                    std::vector<std::vector<Scalar>> expected) {
    if (classes.size() != expected.size()) return false;
    for (const auto& c : classes) {
        bool found = false;
        for (auto it = expected.begin(); it != expected.end(); ++it)
            if (*it == c.coords) {
                expected.erase(it);
                found = true;
                break;
            }
        if (!found) return false;
    }
    return expected.empty();
}

struct CriterionContext {
    AcceptanceOptions opt;
    const Field* f = nullptr;
    std::string dir;
};

using CriterionBody = std::function<bool(const CriterionContext&, std::string&)>;

AcceptanceItem run_criterion(const CriterionContext& ctx, int number, std::string name,
                             const CriterionBody& body) {
    AcceptanceItem item;
    item.criterion = number;
    item.name = std::move(name);
    const auto t0 = Clock::now();
    try {
        item.passed = body(ctx, item.detail);
    } catch (const std::exception& e) {
        item.passed = false;
        if (!item.detail.empty()) item.detail += "; ";
        item.detail += std::string("exception: ") + e.what();
    }
    item.seconds = seconds_since(t0);
    return item;
}

// criterion 1: full classification-table reproduction
bool criterion_table(const CriterionContext& ctx, std::string& detail) {
    const auto t0 = Clock::now();
    TableReproduction tr = reproduce_table(ctx.f, ctx.opt.seed);
    const double secs = seconds_since(t0);
    if (!tr.ok()) {
        detail = std::to_string(tr.mismatches.size()) + " mismatches: " +
                 join(tr.mismatches, " | ");
        return false;
    }
    std::ostringstream os;
    os << "15/15 rows match (hilbert class, square lines, base points, gradient, "
          "dual, gquad status) over "
       << ctx.f->name() << " in " << secs << " s";
    detail = os.str();
    return secs < 60.0;
}

// criterion 2: the gquad column, given-coordinates certificates included
bool criterion_gquad_column(const CriterionContext& ctx, std::string& detail) {
    const Field* f = ctx.f;
    std::vector<std::string> notes;
    bool all_expected = true;

    auto given_coords_ok = [&](const std::vector<Polynomial>& gens) {
        std::optional<Witness> w = search_quadratic_witness(gens, 0, ctx.opt.seed);
        if (!w) return false;
        if (!(w->basis == Matrix::identity(f, 3))) return false;
        VerifyReport ver = verify_witness(gens, *w, false);
        return ver.ok && ver.quadratic;
    };

    unsigned given_ok = 0;
    std::vector<int> given_rows = {1, 2, 3, 4, 5, 7, 8, 9, 10, 11};
    std::vector<int> given_failed;
    for (int k : given_rows) {
        if (given_coords_ok(net_quadrics(normal_form(k, f))))
            ++given_ok;
        else
            given_failed.push_back(k);
    }
    if (!given_failed.empty()) {
        all_expected = false;
        std::string rows;
        for (int k : given_failed) rows += " " + std::to_string(k);
        notes.push_back("given-coordinates certificate missing for rows" + rows);
    } else {
        notes.push_back("rows 1-5, 7-11: given-coordinates certificates verified");
    }

    // row 6 after the substitution x -> x, y -> x - z, z -> x - y
    {
        std::vector<std::vector<Scalar>> rows = {
            {f->one(), f->zero(), f->zero()},
            {f->one(), f->zero(), f->from_int(-1)},
            {f->one(), f->from_int(-1), f->zero()},
        };
        std::vector<Polynomial> gens;
        const TermOrder ord(OrderKind::DegRevLex, 3);
        for (const auto& g : net_quadrics(normal_form(6, f)))
            gens.push_back(g.substitute_linear(rows, ord));
        if (given_coords_ok(gens)) {
            notes.push_back("row 6: certificate verified after the stated substitution");
        } else {
            all_expected = false;
            notes.push_back("row 6: substitution did not yield a certificate");
        }
    }

    // rows 12 and 14: impossible by the series argument
    {
        bool series_ok = no_quadratic_monomial_ideal_has_series_e() &&
                         hilbert_class(normal_form(12, f)) == HilbertClass::e &&
                         hilbert_class(normal_form(14, f)) == HilbertClass::e;
        if (series_ok) {
            notes.push_back(
                "rows 12/14: certified not G-quadratic (no quadratic monomial ideal in 3 "
                "variables has the 1,3,3,1,1 profile; both rows have that profile)");
        } else {
            all_expected = false;
            notes.push_back("rows 12/14: series certificate failed");
        }
    }

    // row 15: bounded search must fail
    {
        WitnessConfig cfg;
        cfg.seed = ctx.opt.seed;
        cfg.n3_random_changes = 50;
        CIException ci =
            classify_n3(GradedQuotient::build(net_quadrics(normal_form(15, f)), 3), cfg);
        if (!ci.witness && !ci.gquadratic) {
            notes.push_back("row 15: no certificate (no square line; reported search_failed)");
        } else {
            all_expected = false;
            notes.push_back("row 15: unexpected certificate or square line");
        }
    }

    // row 13 in the given coordinates: expected here, but provably impossible.
    bool row13_given = false;
    {
        const std::vector<Polynomial> gens13 = net_quadrics(normal_form(13, f));
        row13_given = given_coords_ok(gens13);
        WitnessConfig cfg;
        cfg.seed = ctx.opt.seed;
        CIException ci = classify_n3(GradedQuotient::build(gens13, 3), cfg);
        const bool changed_ok =
            ci.witness && verify_witness(gens13, *ci.witness, false).ok;
        if (row13_given) {
            notes.push_back("row 13: given-coordinates certificate found (unexpected)");
        } else {
            notes.push_back(
                std::string("row 13: no given-coordinates certificate exists — a quadratic "
                            "Groebner basis of this 1,3,3,1 algebra must have initial "
                            "terms {x^2, y^2, z^2} (the only quadratic monomial triple "
                            "with that profile), but every element of the span "
                            "(x^2, yz, xy+y^2+z^2) containing z^2 also contains xy and "
                            "y^2 with the same coefficient, so z^2 and y^2 cannot both "
                            "be initial terms under one order; a verified certificate "
                            "after a coordinate change ") +
                (changed_ok ? "is produced instead" : "was NOT produced (engine problem)"));
            if (!changed_ok) all_expected = false;
        }
    }

    detail = join(notes, "; ");
    // The criterion as stated demands a given-coordinates certificate for row
    // 13; that is impossible, so this criterion reports an honest failure.
    return all_expected && row13_given;
}

// criterion 3: apolarity duality
bool criterion_duality(const CriterionContext& ctx, std::string& detail) {
    static const int partner[16] = {0, 2, 1, 4, 3, 6, 5, 8, 7, 10, 9, 11, 12, 14, 13, 15};
    std::vector<std::string> problems;
    for (int k = 1; k <= 15; ++k) {
        const Net v = normal_form(k, ctx.f);
        const Net d = dual_net(v);
        const Count qv = count_square_lines(v, ctx.opt.seed);
        const Count pv = count_base_points(v, ctx.opt.seed);
        const Count qd = count_square_lines(d, ctx.opt.seed);
        const Count pd = count_base_points(d, ctx.opt.seed);
        if (!(qd == pv) || !(pd == qv))
            problems.push_back("row " + std::to_string(k) + ": counts do not swap");
        int dual_type = classify_by_fingerprint(d, ctx.opt.seed);
        if (dual_type != partner[k])
            problems.push_back("row " + std::to_string(k) + ": dual classified as " +
                               std::to_string(dual_type) + ", expected " +
                               std::to_string(partner[k]));
    }
    if (!problems.empty()) {
        detail = join(problems, "; ");
        return false;
    }
    detail =
        "q/p swap under duality and dual-type partners verified for all 15 rows "
        "(11, 12, 15 self-dual)";
    return true;
}

// criterion 4: worked-example square-zero data across primes
bool criterion_examples(const CriterionContext& ctx, std::string& detail) {
    struct ExampleClaim {
        const char* file;
        std::function<std::optional<std::string>(const GradedQuotient&,
                                                 const SquareZeroForms&)>
            check;
    };
    // Variable order in all four files: t, z, w, y.
    const unsigned T = 0, Z = 1, W = 2, Y = 3;

    std::vector<ExampleClaim> claims;
    claims.push_back(
        {"vandermonde_squares", [](const GradedQuotient&, const SquareZeroForms& s)
                                    -> std::optional<std::string> {
             for (const auto& c : s.classes)
                 if (c.rank != 3)
                     return "square-zero class of rank " + std::to_string(c.rank) +
                            " found; expected all rank 3";
             return std::nullopt;
         }});
    claims.push_back({"rank_two_only",
                      [&](const GradedQuotient& r, const SquareZeroForms& s)
                          -> std::optional<std::string> {
                          const Field* f = r.field();
                          if (!same_class_set(s.classes, {unit_vec(f, 4, T), unit_vec(f, 4, Y)}))
                              return "square-zero classes differ from {t, y}";
                          for (const auto& c : s.classes)
                              if (c.rank != 2) return "a class does not have rank 2";
                          if (!case2_applicable(r, unit_vec(f, 4, Y), 1))
                              return "the two-step reduction does not apply to y";
                          if (!case2_applicable(r, unit_vec(f, 4, T), 1))
                              return "the two-step reduction does not apply to t";
                          return std::nullopt;
                      }});
    claims.push_back({"three_directions",
                      [&](const GradedQuotient& r, const SquareZeroForms& s)
                          -> std::optional<std::string> {
                          const Field* f = r.field();
                          if (!same_class_set(s.classes, {unit_vec(f, 4, T), unit_vec(f, 4, W),
                                                          unit_vec(f, 4, Y)}))
                              return "square-zero classes differ from {t, w, y}";
                          for (const auto& c : s.classes)
                              if (c.rank != 2) return "a class does not have rank 2";
                          if (!case3_applicable(r, unit_vec(f, 4, T), 1))
                              return "the outside-annihilator reduction does not apply to t";
                          if (!case3_applicable(r, unit_vec(f, 4, W), 1))
                              return "the outside-annihilator reduction does not apply to w";
                          if (case2_applicable(r, unit_vec(f, 4, Y), 1))
                              return "the two-step reduction unexpectedly applies to y";
                          if (case3_applicable(r, unit_vec(f, 4, Y), 1))
                              return "the outside-annihilator reduction unexpectedly applies to y";
                          return std::nullopt;
                      }});
    claims.push_back({"square_zero_line",
                      [&](const GradedQuotient& r, const SquareZeroForms& s)
                          -> std::optional<std::string> {
                          const Field* f = r.field();
                          std::vector<std::vector<Scalar>> rank1;
                          for (const auto& c : s.classes)
                              if (c.rank == 1) rank1.push_back(c.coords);
                          // y - z and 2y - z, normalized to first nonzero = 1.
                          std::vector<Scalar> a(4, f->zero()), b(4, f->zero());
                          a[Z] = f->one();
                          a[Y] = f->from_int(-1);
                          b[Z] = f->one();
                          b[Y] = f->from_int(-2);
                          std::vector<SquareZeroClass> wrapped;
                          for (auto& v : rank1) wrapped.push_back({v, 1});
                          if (!same_class_set(wrapped, {a, b}))
                              return "rank-1 classes differ from {y - z, 2y - z}";
                          return std::nullopt;
                      }});

    const std::vector<std::uint64_t> primes = {5, 7, 11, 101};
    unsigned checked = 0, matched = 0;
    std::vector<std::string> skips, failures;
    for (const auto& claim : claims) {
        const IdealFile raw = load_ideal(ctx.dir + "/" + claim.file + ".ideal");
        for (std::uint64_t p : primes) {
            ++checked;
            const std::string tag = std::string(claim.file) + " @ p=" + std::to_string(p);
            std::optional<std::string> problem;
            try {
                const IdealFile red = reduce_mod_p(raw, p);
                GradedQuotient r = GradedQuotient::build(red.gens, 3);
                SquareZeroSearchOptions opts;
                opts.extension_cap = 1;
                opts.exhaustive_budget = 2'000'000;
                opts.seed = ctx.opt.seed;
                const SquareZeroForms s = square_zero_forms(r, opts);
                if (!s.complete)
                    problem = "square-zero sweep was not exhaustive";
                else
                    problem = claim.check(r, s);
            } catch (const Error& e) {
                problem = e.what();
            }
            if (!problem) {
                ++matched;
            } else if (const char* reason = known_degeneration(claim.file, p)) {
                skips.push_back("skip " + tag + " (degenerate: " + reason + ")");
            } else {
                failures.push_back(tag + ": " + *problem);
            }
        }
    }
    std::ostringstream os;
    os << matched << "/" << checked << " (example, p) pairs match exactly";
    if (!skips.empty()) os << "; " << join(skips, "; ");
    if (!failures.empty()) os << "; FAILURES: " << join(failures, "; ");
    detail = os.str();
    return failures.empty();
}

// criterion 5: random witness corpus
bool criterion_corpus(const CriterionContext& ctx, std::string& detail) {
    const auto t0 = Clock::now();
    std::vector<std::string> notes;
    bool ok = true;
    for (unsigned nvars : {4u, 5u}) {
        CorpusStats st =
            run_corpus(ctx.f, nvars, ctx.opt.corpus_count, scramble(ctx.opt.seed, nvars));
        std::ostringstream os;
        os << "n=" << nvars << ": " << st.witnesses << " witnesses, " << st.inconclusive
           << " inconclusive, " << st.verification_failures << " verification failures ("
           << st.rejected << " rejected, " << st.seconds << " s)";
        notes.push_back(os.str());
        if (st.produced != ctx.opt.corpus_count || st.verification_failures != 0) ok = false;
        // Any inconclusive sample must not carry a demonstrable base-field
        // square-zero form.
        for (const auto& item : st.items) {
            if (item.kind != OutcomeKind::Inconclusive) continue;
            auto gens = sample_conforming(ctx.f, nvars, item.sample_seed);
            if (!gens) continue;
            try {
                SquareZeroSearchOptions opts;
                opts.extension_cap = 1;
                opts.seed = ctx.opt.seed;
                SquareZeroForms s =
                    square_zero_forms(GradedQuotient::build(*gens, 3), opts);
                if (!s.classes.empty()) {
                    ok = false;
                    notes.push_back("sample " + std::to_string(item.sample_seed) +
                                    " has a base-field square-zero form but no witness");
                }
            } catch (const InconclusiveError&) {
                notes.push_back("sample " + std::to_string(item.sample_seed) +
                                ": no base-field square-zero form demonstrable");
            }
        }
    }
    const double secs = seconds_since(t0);
    notes.push_back("total " + std::to_string(secs) + " s");
    detail = join(notes, "; ");
    return ok && secs < 600.0;
}

// criterion 6: fingerprint classifier under random coordinate changes
bool criterion_classifier(const CriterionContext& ctx, std::string& detail) {
    Rng rng(scramble(ctx.opt.seed, 6));
    unsigned ok = 0;
    const unsigned rounds = 50;
    std::vector<std::string> problems;
    for (unsigned i = 0; i < rounds; ++i) {
        const int k = 1 + static_cast<int>(rng.next(15));
        const Net v = normal_form(k, ctx.f);
        const Matrix change = rng.invertible(ctx.f, 3);
        std::vector<std::vector<Scalar>> rows;
        for (unsigned r = 0; r < 3; ++r) rows.push_back(change.row(r));
        const Net moved = apply_linear(v, rows);
        int classified = 0;
        try {
            classified = classify_by_fingerprint(moved, scramble(ctx.opt.seed, 600 + i));
        } catch (const Error& e) {
            problems.push_back("round " + std::to_string(i) + " (type " + std::to_string(k) +
                               "): " + e.what());
            continue;
        }
        if (classified == k)
            ++ok;
        else
            problems.push_back("round " + std::to_string(i) + ": type " + std::to_string(k) +
                               " classified as " + std::to_string(classified));
    }
    std::ostringstream os;
    os << ok << "/" << rounds << " random coordinate changes classified back";
    if (!problems.empty()) os << "; " << join(problems, "; ");
    detail = os.str();
    return ok == rounds;
}

// criterion 7: Koszul evidence via truncated Betti tables
bool criterion_koszul(const CriterionContext& ctx, std::string& detail) {
    const Field* f = ctx.f;
    std::vector<std::string> notes;
    bool ok = true;

    auto check_linear = [&](const std::string& label, const std::vector<Polynomial>& gens) {
        const BettiTable t = betti(GradedQuotient::build(gens, 2), 5, 5);
        const std::vector<unsigned> hf = hilbert_function(buchberger(gens).basis, 5);
        const bool linear = is_linear_up_to(t);
        const bool euler = euler_check(t, hf);
        if (!linear || !euler) {
            ok = false;
            notes.push_back(label + ": " + (linear ? "" : "nonlinear entry found ") +
                            (euler ? "" : "euler check failed"));
        }
        return linear && euler;
    };

    // (x^2, y^2, z^2)
    {
        const TermOrder ord(OrderKind::DegRevLex, 3);
        std::vector<Polynomial> gens;
        for (unsigned i = 0; i < 3; ++i) {
            const Polynomial x = Polynomial::variable(f, ord, i);
            gens.push_back(x * x);
        }
        if (check_linear("pure squares", gens))
            notes.push_back("pure squares: linear through (5, 5)");
    }

    // every checked-in witness fixture, reduced mod p
    const std::vector<std::string> fixture_files = {
        "vandermonde_squares", "rank_two_only", "three_directions", "square_zero_line",
        "trivial_extension"};
    unsigned fixtures_linear = 0;
    for (const auto& file : fixture_files) {
        const IdealFile raw = load_ideal(ctx.dir + "/" + file + ".ideal");
        const IdealFile red = reduce_mod_p(raw, ctx.opt.p);
        if (check_linear(file, red.gens)) ++fixtures_linear;
    }
    notes.push_back(std::to_string(fixtures_linear) + "/" +
                    std::to_string(fixture_files.size()) +
                    " witness fixtures linear through (5, 5)");

    // nets 12 and 14: first nonlinear entry, frozen regression value (3, 4)
    for (int k : {12, 14}) {
        const std::vector<Polynomial> gens = net_quadrics(normal_form(k, f));
        const BettiTable t = betti(GradedQuotient::build(gens, 2), 5, 5);
        const std::vector<unsigned> hf = hilbert_function(buchberger(gens).basis, 5);
        const auto nl = first_nonlinear(t);
        if (!euler_check(t, hf)) {
            ok = false;
            notes.push_back("net " + std::to_string(k) + ": euler check failed");
        }
        if (!nl) {
            ok = false;
            notes.push_back("net " + std::to_string(k) + ": no nonlinear entry through (5, 5)");
        } else if (*nl != std::make_pair(3u, 4u)) {
            ok = false;
            notes.push_back("net " + std::to_string(k) + ": first nonlinear entry at (" +
                            std::to_string(nl->first) + ", " + std::to_string(nl->second) +
                            "), frozen value is (3, 4)");
        } else {
            notes.push_back("net " + std::to_string(k) + ": first nonlinear entry (3, 4), beta = " +
                            std::to_string(t.at(3, 4)));
        }
    }

    detail = join(notes, "; ");
    return ok;
}

// criterion 8: the five Hilbert profiles
bool criterion_profiles(const CriterionContext& ctx, std::string& detail) {
    const std::map<char, std::vector<unsigned>> expected = {
        {'a', {1, 3, 3, 1, 0, 0}}, {'b', {1, 3, 3, 3, 3, 3}}, {'c', {1, 3, 3, 4, 5, 6}},
        {'d', {1, 3, 3, 2, 2, 2}}, {'e', {1, 3, 3, 1, 1, 1}},
    };
    std::vector<std::string> problems;
    for (const auto& [letter, profile] : expected) {
        HilbertClass h;
        switch (letter) {
            case 'a': h = HilbertClass::a; break;
            case 'b': h = HilbertClass::b; break;
            case 'c': h = HilbertClass::c; break;
            case 'd': h = HilbertClass::d; break;
            default: h = HilbertClass::e; break;
        }
        if (hilbert_class_profile(h) != profile)
            problems.push_back(std::string("profile ") + letter + " table value differs");
    }
    for (const auto& row : expected_table()) {
        const std::vector<unsigned> h =
            hilbert_function(buchberger(net_quadrics(normal_form(row.type, ctx.f))).basis, 5);
        if (h != expected.at(hilbert_class_letter(row.hclass)))
            problems.push_back("row " + std::to_string(row.type) +
                               ": recomputed profile differs from class " +
                               hilbert_class_letter(row.hclass));
    }
    if (!problems.empty()) {
        detail = join(problems, "; ");
        return false;
    }
    detail = "profiles a-e re-derived from all 15 normal forms match the expected sequences";
    return true;
}

// criterion 9: the randomized engine oracles
bool criterion_properties(const CriterionContext& ctx, std::string& detail) {
    const std::vector<PropertySuite> suites =
        run_property_suites(ctx.opt.seed, ctx.opt.property_cases);
    std::vector<std::string> notes;
    bool ok = true;
    for (const auto& s : suites) {
        notes.push_back(s.name + " " + std::to_string(s.cases - s.failures) + "/" +
                        std::to_string(s.cases));
        if (s.failures) {
            ok = false;
            notes.back() += " (first failure: " + s.first_failure + ")";
        }
    }
    detail = join(notes, "; ");
    return ok;
}

}  // namespace

std::vector<AcceptanceItem> run_acceptance_suite(const AcceptanceOptions& opt) {
    CriterionContext ctx;
    ctx.opt = opt;
    ctx.f = prime_field(opt.p);
    ctx.dir = opt.fixtures.empty() ? fixtures_dir() : opt.fixtures;

    std::vector<AcceptanceItem> items;
    items.push_back(run_criterion(ctx, 1, "classification table reproduction", criterion_table));
    items.push_back(
        run_criterion(ctx, 2, "quadratic Groebner basis column", criterion_gquad_column));
    items.push_back(run_criterion(ctx, 3, "apolarity duality", criterion_duality));
    items.push_back(
        run_criterion(ctx, 4, "worked-example square-zero data", criterion_examples));
    items.push_back(run_criterion(ctx, 5, "random witness corpus", criterion_corpus));
    items.push_back(run_criterion(ctx, 6, "fingerprint classifier", criterion_classifier));
    items.push_back(run_criterion(ctx, 7, "Koszul evidence", criterion_koszul));
    items.push_back(run_criterion(ctx, 8, "Hilbert profiles", criterion_profiles));
    items.push_back(run_criterion(ctx, 9, "engine property oracles", criterion_properties));
    return items;
}

std::string render_acceptance(const std::vector<AcceptanceItem>& items) {
    std::ostringstream os;
    unsigned passed = 0;
    for (const auto& item : items) {
        os << "criterion " << item.criterion << " (" << item.name << "): "
           << (item.passed ? "PASS" : "FAIL") << " [" << item.seconds << " s] — "
           << item.detail << "\n";
        if (item.passed) ++passed;
    }
    os << "criteria passed: " << passed << "/" << items.size() << "\n";
    return os.str();
}

ordered_json acceptance_json(const std::vector<AcceptanceItem>& items) {
    ordered_json arr = ordered_json::array();
    unsigned passed = 0;
    for (const auto& item : items) {
        ordered_json j;
        j["criterion"] = item.criterion;
        j["name"] = item.name;
        j["passed"] = item.passed;
        j["detail"] = item.detail;
        j["seconds"] = item.seconds;
        arr.push_back(std::move(j));
        if (item.passed) ++passed;
    }
    ordered_json out;
    out["items"] = std::move(arr);
    out["passed"] = passed;
    out["total"] = items.size();
    return out;
}

}  // namespace qgb
