// periodic-alex: batch front end for the periodicity obstructions, unit
// scans, S-unit searches and bounds. Every subcommand prints one JSON
// document.
//
// Exit codes: 0 success (FAIL verdicts included), 1 internal error or a
// report that does not re-verify, 2 usage or input error.

#include "periodic_alex/obstructions.hpp"
#include "periodic_alex/report.hpp"
#include "periodic_alex/sunits.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using palex::Json;

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

unsigned jobs_from_env(unsigned flag_value) {
    if (const char* env = std::getenv("PERIODIC_ALEX_JOBS"); env && *env) {
        try {
            return static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            throw palex::MathError(std::string("invalid PERIODIC_ALEX_JOBS '") + env + "'");
        }
    }
    return flag_value;
}

void emit(const Json& doc, const std::string& out_path) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw palex::ParseError("cannot write " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodicity obstructions for Alexander polynomials"};
    app.require_subcommand(1);

    std::string out_path;
    unsigned jobs = 1;
    app.add_option("--out", out_path, "Write JSON here instead of stdout");
    app.add_option("--jobs", jobs, "Worker threads (0 = all cores; PERIODIC_ALEX_JOBS overrides)");

    std::int64_t prime = 0;
    std::string s_list;
    std::uint64_t height = 1;

    auto* check = app.add_subcommand("check", "Run all obstruction checks over a knot table");
    std::string table_path, kbar_path;
    std::uint64_t lambda_max = 0;
    check->add_option("--table", table_path, "CSV with header name,coeffs")->required();
    check->add_option("--prime", prime, "Odd prime period")->required();
    check->add_option("--lambda-max", lambda_max, "Largest linking number tried (default 2p)");
    check->add_option("--kbar-table", kbar_path, "CSV of quotient-knot candidates");

    auto* theorem1 = app.add_subcommand("theorem1", "Check the monic degree p-1 uniqueness statement");
    std::string poly_text;
    theorem1->add_option("--poly", poly_text, "Ascending coefficients, e.g. 1,-1,1")->required();
    theorem1->add_option("--prime", prime, "Odd prime")->required();

    auto* scan = app.add_subcommand("scan-units", "Exhaustive unit scan in Z[zeta_p]");
    scan->add_option("--prime", prime, "Odd prime")->required();
    scan->add_option("--height", height, "Coordinate bound H")->required();
    scan->add_option("--jobs", jobs, "Worker threads");

    auto* solve = app.add_subcommand("solve-sunit", "Bounded search for X + Y = 1 in S-units");
    std::uint64_t denom_bound = 1;
    solve->add_option("--prime", prime, "Odd prime")->required();
    solve->add_option("--s", s_list, "Comma-separated primes, may be empty");
    solve->add_option("--height", height, "Numerator coordinate bound")->required();
    solve->add_option("--denom-bound", denom_bound, "Largest S-smooth denominator")->required();
    solve->add_option("--jobs", jobs, "Worker threads");

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate degree p-1 candidates from (g, h) pairs");
    std::uint64_t gh_height = 1;
    std::optional<std::uint64_t> multiplicity;
    bool monic_only = false;
    enumerate->add_option("--prime", prime, "Odd prime")->required();
    enumerate->add_option("--s", s_list, "Comma-separated primes, may be empty");
    enumerate->add_option("--gh-height", gh_height, "Coefficient bound for g and h")->required();
    enumerate->add_option("--multiplicity", multiplicity, "Largest root multiplicity (default (p-1)/2)");
    enumerate->add_flag("--monic-only", monic_only, "Keep monic candidates only");
    enumerate->add_option("--jobs", jobs, "Worker threads");

    auto* bound = app.add_subcommand("bound", "Finiteness bound for degree p-1 polynomials");
    bound->add_option("--prime", prime, "Odd prime")->required();
    bound->add_option("--s", s_list, "Comma-separated primes, may be empty");

    auto* verify = app.add_subcommand("verify-report", "Re-check a JSON report");
    verify->group("");
    std::string report_path;
    verify->add_option("--report", report_path, "Report file, - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        jobs = jobs_from_env(jobs);
        if (*check) {
            palex::CheckOptions options;
            options.lambda_max = lambda_max;
            options.jobs = jobs;
            if (!kbar_path.empty())
                for (auto& rec : palex::ingest(kbar_path)) options.kbar_candidates.push_back(rec.delta);
            const auto records = palex::ingest(table_path);
            emit(palex::check_document(palex::run_checks(records, prime, options), prime, options), out_path);
        } else if (*theorem1) {
            emit(palex::theorem1_document(palex::parse_polynomial(poly_text), prime), out_path);
        } else if (*scan) {
            emit(palex::scan_units_document(prime, height, palex::scan_units_detailed(prime, height, jobs)), out_path);
        } else if (*solve) {
            const palex::SUnitContext ctx(prime, palex::parse_prime_set(s_list), height, denom_bound);
            emit(palex::solve_sunit_document(ctx, palex::solve_sunit_equation(ctx, jobs)), out_path);
        } else if (*enumerate) {
            const palex::SUnitContext ctx(prime, palex::parse_prime_set(s_list), gh_height, 1);
            palex::CandidateOptions options{multiplicity, monic_only};
            emit(palex::enumerate_document(ctx, gh_height, options,
                                           palex::enumerate_candidates(ctx, gh_height, options, jobs)),
                 out_path);
        } else if (*bound) {
            palex::require_odd_prime(prime);
            emit(palex::bound_document(prime, palex::parse_prime_set(s_list)), out_path);
        } else if (*verify) {
            Json doc;
            if (report_path == "-") {
                doc = Json::parse(std::cin);
            } else {
                std::ifstream in(report_path);
                if (!in) throw palex::ParseError("cannot open " + report_path);
                doc = Json::parse(in);
            }
            const auto result = palex::verify_report(doc);
            Json summary{{"schema", palex::kSchemaVersion}, {"command", "verify-report"}, {"ok", result.ok},
                         {"problems", result.problems}};
            emit(summary, out_path);
            return result.ok ? 0 : kExitInternal;
        }
    } catch (const palex::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const palex::MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
