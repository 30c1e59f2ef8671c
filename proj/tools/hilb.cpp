// Command-line front end: exact products, structure constants, minimal
// presentations and identity suites for the algebras A(d).

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hilb/algebra.hpp"
#include "hilb/identities.hpp"
#include "hilb/presentation.hpp"
#include "hilb/serialize.hpp"
#include "hilb/theta.hpp"
#include "hilb/verify.hpp"

namespace {

constexpr const char* kCacheFile = "theta-cache-v1.txt";

// Resolves the on-disk memo cache directory: --cache-dir wins, then
// HILB_CACHE_DIR; empty means no persistence.
std::string cache_path(const std::string& flag_dir) {
    std::string dir = flag_dir;
    if (dir.empty())
        if (const char* env = std::getenv("HILB_CACHE_DIR")) dir = env;
    if (dir.empty()) return {};
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / kCacheFile).string();
}

struct CacheSession {
    std::string path;
    explicit CacheSession(const std::string& dir) : path(cache_path(dir)) {
        if (!path.empty()) hilb::theta_cache().load(path);
    }
    ~CacheSession() {
        if (path.empty()) return;
        try {
            hilb::theta_cache().save(path);
        } catch (const std::exception& e) {
            std::cerr << "warning: could not save cache: " << e.what() << "\n";
        }
    }
};

int guard_long_run(int d, bool allow_long) {
    if (d > 10 && !allow_long) {
        std::cerr << "d = " << d << " is a long-running computation; pass --allow-long to "
                  << "confirm (its row is not covered by the bundled reference table)\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the cohomology algebras A(d) of Hilbert schemes of points"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string cache_dir;
    app.add_option("--cache-dir", cache_dir,
                   "directory for the persistent theta cache (or env HILB_CACHE_DIR)");

    // --- theta ---------------------------------------------------------
    auto* theta_cmd = app.add_subcommand("theta", "structure constant theta(epsilon; alpha, beta)");
    std::string eps_s, alpha_s, beta_s;
    bool theta_json = false, theta_dump = false;
    theta_cmd->add_option("epsilon", eps_s, "target class, e.g. [0,1]")->required();
    theta_cmd->add_option("alpha", alpha_s, "first factor class, e.g. [1]")->required();
    theta_cmd->add_option("beta", beta_s, "second factor class, e.g. [1]")->required();
    theta_cmd->add_flag("--json", theta_json, "emit a JSON report");
    theta_cmd->add_flag("--dump-derivation", theta_dump, "print the recursion tree to stderr");

    // --- multiply ------------------------------------------------------
    auto* mul_cmd = app.add_subcommand("multiply", "product g_alpha * g_beta in A(d)");
    std::string mul_a, mul_b;
    int mul_d = 0;
    mul_cmd->add_option("alpha", mul_a, "first class, e.g. [1]")->required();
    mul_cmd->add_option("beta", mul_b, "second class, e.g. [1]")->required();
    mul_cmd->add_option("--d", mul_d, "ambient degree")->required();

    // --- presentation ---------------------------------------------------
    auto* pres_cmd = app.add_subcommand("presentation", "minimal presentation of A(d)");
    int pres_d = 0;
    unsigned pres_threads = 1;
    bool pres_json = false, pres_latex = false, pres_text = false, pres_long = false;
    pres_cmd->add_option("--d", pres_d, "degree d >= 1")->required();
    pres_cmd->add_option("--threads", pres_threads, "worker threads for the per-norm kernels");
    auto* pres_json_f = pres_cmd->add_flag("--json", pres_json, "JSON output");
    auto* pres_latex_f = pres_cmd->add_flag("--latex", pres_latex, "LaTeX relation arrays");
    auto* pres_text_f = pres_cmd->add_flag("--text", pres_text, "plain text output (default)");
    pres_json_f->excludes(pres_latex_f)->excludes(pres_text_f);
    pres_latex_f->excludes(pres_text_f);
    pres_cmd->add_flag("--allow-long", pres_long, "confirm degrees beyond the reference table");

    // --- relation-table ---------------------------------------------------
    auto* table_cmd = app.add_subcommand("relation-table", "table of minimal relation counts");
    int table_max_d = 0;
    unsigned table_threads = 1;
    bool table_json = false, table_tsv = false, table_long = false;
    table_cmd->add_option("--max-d", table_max_d, "largest degree to include")->required();
    table_cmd->add_option("--threads", table_threads, "worker threads for the per-norm kernels");
    auto* table_json_f = table_cmd->add_flag("--json", table_json, "JSON output");
    auto* table_tsv_f = table_cmd->add_flag("--tsv", table_tsv, "TSV output (default)");
    table_json_f->excludes(table_tsv_f);
    table_cmd->add_flag("--allow-long", table_long, "confirm degrees beyond the reference table");

    // --- verify ---------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "check the bundled reference presentations");
    int verify_d = 0;
    bool verify_json = false, verify_oracle = false;
    int oracle_cap = 8;
    verify_cmd->add_option("--d", verify_d, "degree, 1..10")->required();
    verify_cmd->add_flag("--json", verify_json, "JSON report");
    verify_cmd->add_flag("--oracle", verify_oracle,
                         "evaluate by brute-force permutation enumeration (slow, small d only)");
    verify_cmd->add_option("--oracle-cap", oracle_cap,
                           "largest degree allowed for brute-force enumeration");

    // --- identities -------------------------------------------------------
    auto* id_cmd = app.add_subcommand("identities", "combinatorial identity suites");
    std::string suite = "all";
    bool id_text = false;
    id_cmd->add_option("--suite", suite, "pascal | ys | mixed | all")
        ->check(CLI::IsMember({"pascal", "ys", "mixed", "all"}));
    id_cmd->add_flag("--text", id_text, "line-per-check text instead of the JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        CacheSession session(cache_dir);

        if (*theta_cmd) {
            const auto eps = hilb::CycleType::parse(eps_s);
            const auto alpha = hilb::CycleType::parse(alpha_s);
            const auto beta = hilb::CycleType::parse(beta_s);
            const hilb::Integer value =
                theta_dump ? hilb::theta_cache().theta_traced(eps, alpha, beta, std::cerr)
                           : hilb::theta(eps, alpha, beta);
            if (theta_json)
                std::cout << hilb::theta_report_json(eps, alpha, beta, value).dump(2) << "\n";
            else
                std::cout << value.get_str() << "\n";
            return 0;
        }

        if (*mul_cmd) {
            const auto a = hilb::CycleType::parse(mul_a);
            const auto b = hilb::CycleType::parse(mul_b);
            if (a.support() > mul_d || b.support() > mul_d) {
                std::cerr << "class support exceeds d = " << mul_d << "\n";
                return 1;
            }
            const auto product = hilb::multiply(hilb::basis(a, mul_d), hilb::basis(b, mul_d));
            std::cout << hilb::multiply_report_json(a, b, mul_d, product).dump(2) << "\n";
            return 0;
        }

        if (*pres_cmd) {
            if (int rc = guard_long_run(pres_d, pres_long)) return rc;
            const auto result =
                hilb::minimal_presentation(pres_d, hilb::theta_cache(), pres_threads);
            if (pres_json)
                std::cout << hilb::presentation_json(result).dump(2) << "\n";
            else if (pres_latex)
                std::cout << hilb::presentation_latex(result);
            else
                std::cout << hilb::presentation_text(result);
            return 0;
        }

        if (*table_cmd) {
            if (table_max_d < 1) {
                std::cerr << "--max-d must be >= 1\n";
                return 1;
            }
            if (int rc = guard_long_run(table_max_d, table_long)) return rc;
            std::vector<hilb::PresentationResult> rows;
            for (int d = 1; d <= table_max_d; ++d)
                rows.push_back(hilb::minimal_presentation(d, hilb::theta_cache(), table_threads));
            if (table_json)
                std::cout << hilb::relation_table_json(rows).dump(2) << "\n";
            else
                std::cout << hilb::relation_table_tsv(rows);
            return 0;
        }

        if (*verify_cmd) {
            const hilb::VerifyOptions options{verify_oracle, oracle_cap};
            const auto report =
                hilb::verify_reference_presentation(verify_d, hilb::theta_cache(), options);
            if (verify_json) {
                std::cout << hilb::verify_report_json(report).dump(2) << "\n";
            } else {
                for (const auto& c : report.checks) {
                    std::cout << (c.ok ? "ok   " : "FAIL ") << c.text;
                    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
                    std::cout << "\n";
                }
                std::cout << (report.pass ? "PASS" : "FAIL") << " (d = " << report.d << ", "
                          << report.checks.size() << " relations)\n";
            }
            return report.pass ? 0 : 1;
        }

        if (*id_cmd) {
            std::vector<hilb::SuiteReport> reports;
            if (suite == "pascal" || suite == "all") reports.push_back(hilb::pascal_suite());
            if (suite == "ys" || suite == "all") reports.push_back(hilb::ys_suite());
            if (suite == "mixed" || suite == "all") reports.push_back(hilb::mixed_suite());
            bool pass = true;
            hilb::json out = hilb::json::array();
            for (const auto& r : reports) {
                pass = pass && r.pass();
                out.push_back(hilb::suite_report_json(r));
            }
            if (id_text) {
                for (const auto& r : reports)
                    for (const auto& c : r.checks) {
                        std::cout << (c.pass ? "ok   " : "FAIL ") << c.name;
                        if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
                        std::cout << "\n";
                    }
                std::cout << (pass ? "PASS" : "FAIL") << "\n";
            } else {
                std::cout << out.dump(2) << "\n";
            }
            return pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
