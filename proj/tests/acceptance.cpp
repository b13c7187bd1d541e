// Acceptance gate: runs every criterion of the release checklist and prints
// one PASS/FAIL line per criterion plus a final tally.  Exit code 0 only when
// everything passed; the test harness keys on the tally line instead, because
// one criterion (the given-coordinates certificate for net 13) is known to be
// mathematically impossible and is reported as an honest FAIL.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "qgb/error.hpp"
#include "qgb/report.hpp"

int main(int argc, char** argv) {
    qgb::AcceptanceOptions opt;
    opt.fixtures = qgb::fixtures_dir();
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        auto value = [&](const char* what) -> std::string {
            if (i + 1 >= argc) {
                std::fprintf(stderr, "missing value for %s\n", what);
                std::exit(2);
            }
            return argv[++i];
        };
        if (arg == "--seed") opt.seed = std::strtoull(value("--seed").c_str(), nullptr, 10);
        else if (arg == "--p") opt.p = std::strtoull(value("--p").c_str(), nullptr, 10);
        else if (arg == "--fixtures") opt.fixtures = value("--fixtures");
        else if (arg == "--corpus-count")
            opt.corpus_count = unsigned(std::strtoul(value("--corpus-count").c_str(), nullptr, 10));
        else if (arg == "--property-cases")
            opt.property_cases = unsigned(std::strtoul(value("--property-cases").c_str(), nullptr, 10));
        else {
            std::fprintf(stderr, "unknown argument '%s'\n", arg.c_str());
            return 2;
        }
    }

    try {
        auto items = qgb::run_acceptance_suite(opt);
        std::fputs(qgb::render_acceptance(items).c_str(), stdout);
        for (const auto& item : items)
            if (!item.passed) return 1;
        return 0;
    } catch (const qgb::Error& e) {
        std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
        return 2;
    }
}
