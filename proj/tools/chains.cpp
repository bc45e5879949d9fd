// Command-line front end: triangulation counts, Koch and poly/twin tables,
// verification, realization and enumeration.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "chains/asymptotics.hpp"
#include "chains/enumerate.hpp"
#include "chains/errors.hpp"
#include "chains/parser.hpp"
#include "chains/realize.hpp"
#include "chains/report.hpp"
#include "chains/verify.hpp"

namespace {

using namespace chains;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitMismatch = 4;

struct RunConfig {
    std::string mode = "auto";
    int threads = 0;
    std::string format = "text";
    int digits = 6;
    std::string out;
};

NumberMode resolve_mode(const std::string& mode, std::uint64_t largest_edges) {
    if (mode == "exact") {
        return NumberMode::exact;
    }
    if (mode == "float") {
        return NumberMode::extfloat;
    }
    return default_mode(largest_edges);
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file " + cfg.out);
    }
    file << text;
}

int threads_from_env() {
    if (const char* env = std::getenv("CHAINS_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) {
                return v;
            }
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("CHAINS_THREADS must be a positive integer");
    }
    return 0;
}

std::string render_enumeration(std::uint64_t n, bool count_only, OutputFormat format) {
    std::vector<std::string> listing;
    ChainTally tally;
    for_each_chain(n, [&](const Formula& f) {
        ++tally.total;
        tally.upward += f.is_upward() ? 1 : 0;
        tally.downward += f.is_downward() ? 1 : 0;
        if (!count_only) {
            listing.push_back(f.to_string());
        }
    });
    std::ostringstream out;
    switch (format) {
        case OutputFormat::text:
            for (const auto& s : listing) {
                out << s << '\n';
            }
            out << "total: " << tally.total << '\n'
                << "upward: " << tally.upward << '\n'
                << "downward: " << tally.downward << '\n';
            break;
        case OutputFormat::csv:
            if (!count_only) {
                out << "formula\n";
                for (const auto& s : listing) {
                    out << '"' << s << "\"\n";
                }
            } else {
                out << "n,total,upward,downward\n"
                    << n << ',' << tally.total << ',' << tally.upward << ',' << tally.downward << '\n';
            }
            break;
        case OutputFormat::json: {
            nlohmann::ordered_json obj;
            obj["n"] = n;
            obj["total"] = tally.total;
            obj["upward"] = tally.upward;
            obj["downward"] = tally.downward;
            if (!count_only) {
                obj["formulas"] = listing;
            }
            out << obj.dump(2) << '\n';
            break;
        }
    }
    return out.str();
}

std::string render_verification(const std::vector<SuiteResult>& results, bool& all_passed) {
    std::ostringstream out;
    all_passed = true;
    for (const auto& r : results) {
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checks, "
            << static_cast<long>(r.seconds * 1000) << " ms)";
        if (!r.passed()) {
            all_passed = false;
            out << ": " << r.failures << " failures, first: " << r.first_failure;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Count triangulations of chains and reproduce their growth tables"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--mode", cfg.mode, "Number mode: exact, float or auto (exact up to 512 edges)")
        ->check(CLI::IsMember({"auto", "exact", "float"}));
    app.add_option("--threads", cfg.threads, "Worker threads (default: CHAINS_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "Output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--digits", cfg.digits, "Decimal places for roots and float values")->check(CLI::Range(1, 12));
    app.add_option("--out", cfg.out, "Write output to this file instead of stdout");

    std::string formula_text;
    bool with_coeffs = false;
    auto* poly_cmd = app.add_subcommand("poly", "Triangulation counts of one chain");
    poly_cmd->add_option("formula", formula_text, "Chain formula, e.g. \"koch(3)\" or \"E v (E ^ E)\"")->required();
    poly_cmd->add_flag("--coeffs", with_coeffs, "Also print the coefficients of T_C and T_flip(C)");

    unsigned max_s = 0;
    auto* koch_cmd = app.add_subcommand("koch", "Table of n-th roots of U, L and tr for Koch chains");
    koch_cmd->add_option("max_s", max_s, "Last level")->required()->check(CLI::Range(0, 62));

    std::optional<unsigned> twin_koch;
    std::string twin_formula;
    auto* twin_cmd = app.add_subcommand("polytwin", "Growth constants of poly and twin chains over a base chain");
    twin_cmd->add_option("formula", twin_formula, "Base chain formula");
    twin_cmd->add_option("--koch", twin_koch, "Table over base chains K_0..K_S instead")->check(CLI::Range(0, 62));

    std::string level = "quick";
    bool inject_fault = false;
    auto* verify_cmd = app.add_subcommand("verify", "Run the cross-module consistency suites");
    verify_cmd->add_option("level", level, "quick (n <= 6) or full (n <= 8)")
        ->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_flag("--inject-fault", inject_fault, "Corrupt results on purpose; verification must fail");

    std::string realize_text;
    auto* realize_cmd = app.add_subcommand("realize", "Rational point coordinates of a chain, as CSV");
    realize_cmd->add_option("formula", realize_text, "Chain formula with at most 32 edges")->required();

    std::uint64_t enum_n = 0;
    bool count_only = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "List all canonical chains with n edges");
    enum_cmd->add_option("n", enum_n, "Edge count (1..12)")->required();
    enum_cmd->add_flag("--count", count_only, "Print only the tallies");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        const int threads = cfg.threads > 0 ? cfg.threads : threads_from_env();
        if (threads > 0) {
            omp_set_num_threads(threads);
        }
        const auto format = parse_output_format(cfg.format);

        if (poly_cmd->parsed()) {
            const auto f = parse_formula(formula_text);
            auto report = poly_report(f, resolve_mode(cfg.mode, f.edges()), with_coeffs, cfg.digits);
            report.formula = formula_text;
            emit(cfg, render_poly(report, format, cfg.digits));
        } else if (koch_cmd->parsed()) {
            const auto mode = resolve_mode(cfg.mode, std::uint64_t{1} << max_s);
            emit(cfg, render_koch(koch_table(max_s, mode), format, cfg.digits));
        } else if (twin_cmd->parsed()) {
            std::vector<PolytwinRow> rows;
            if (twin_koch) {
                const auto mode = resolve_mode(cfg.mode, std::uint64_t{1} << *twin_koch);
                rows = polytwin_koch_table(*twin_koch, mode);
            } else if (!twin_formula.empty()) {
                const auto f = parse_formula(twin_formula);
                rows.push_back({std::nullopt, lambda_tau(f, resolve_mode(cfg.mode, f.edges()))});
            } else {
                std::cerr << "polytwin: give a base formula or --koch S\n";
                return kExitParse;
            }
            emit(cfg, render_polytwin(rows, format, cfg.digits));
        } else if (verify_cmd->parsed()) {
            VerifyOptions opts;
            opts.level = level == "full" ? VerifyLevel::full : VerifyLevel::quick;
            opts.inject_fault = inject_fault;
            bool all_passed = false;
            emit(cfg, render_verification(run_verification(opts), all_passed));
            return all_passed ? kExitOk : kExitMismatch;
        } else if (realize_cmd->parsed()) {
            const auto f = parse_formula(realize_text);
            const auto points = realize(f);
            if (!realizes(points, visibility(f))) {
                std::cerr << "realize: orientation check failed\n";
                return kExitMismatch;
            }
            emit(cfg, to_csv(points));
        } else if (enum_cmd->parsed()) {
            emit(cfg, render_enumeration(enum_n, count_only, format));
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << '\n';
        return kExitParse;
    } catch (const CapExceeded& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kExitCap;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource cap: out of memory\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}
