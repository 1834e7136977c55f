// Command-line front end: analyze reflexive 4-polytopes, compute polar
// duals, print and verify the torsion catalogue, and scan record streams.
//
// Exit codes: 0 success, 1 verification or reflexivity check failed,
// 2 unusable input (parse errors, bad polytopes, usage mistakes),
// 3 internal inconsistency (a theorem the code relies on failed).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <istream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "torsionscan/errors.hpp"
#include "torsionscan/invariants.hpp"
#include "torsionscan/io.hpp"
#include "torsionscan/polytope.hpp"
#include "torsionscan/scan.hpp"
#include "torsionscan/table16.hpp"

namespace {

using namespace torsionscan;

struct InputOptions {
    std::string path;
    bool rows_are_points = false;
    bool cols_are_points = false;

    SquareOrientation orientation() const {
        return rows_are_points ? SquareOrientation::rows_are_points
                               : SquareOrientation::columns_are_points;
    }
};

void add_input_options(CLI::App* cmd, InputOptions& opts) {
    cmd->add_option("file", opts.path,
                    "vertex-matrix file ('-' reads standard input)")
        ->required();
    CLI::Option* rows = cmd->add_flag(
        "--rows-are-points", opts.rows_are_points,
        "a square matrix holds one point per row");
    cmd->add_flag("--cols-are-points", opts.cols_are_points,
                  "a square matrix holds one point per column (default)")
        ->excludes(rows);
}

std::vector<ParsedRecord> read_input(const InputOptions& opts) {
    if (opts.path == "-") {
        return read_polytopes(std::cin, opts.orientation());
    }
    std::ifstream in(opts.path);
    if (!in) {
        throw input_error("cannot open '" + opts.path + "'");
    }
    return read_polytopes(in, opts.orientation());
}

std::string record_prefix(const ParsedRecord& rec) {
    return "record " + std::to_string(rec.matrix.index) + " (line " +
           std::to_string(rec.matrix.line) + ")";
}

void print_warnings(const ParsedRecord& rec) {
    for (const std::string& w : rec.warnings) {
        std::cerr << record_prefix(rec) << ": warning: " << w << '\n';
    }
}

int run_analyze(const InputOptions& opts, bool dual_side, bool as_json) {
    std::vector<ParsedRecord> records = read_input(opts);
    bool bad = false;
    for (const ParsedRecord& rec : records) {
        print_warnings(rec);
        if (!rec.error.empty() || !rec.polytope) {
            std::cerr << record_prefix(rec) << ": " << rec.error << '\n';
            bad = true;
            continue;
        }
        try {
            const LatticePolytope delta =
                dual_side ? rec.polytope->polar_dual() : *rec.polytope;
            TorsionReport report = analyze(delta);
            std::cout << (as_json ? report_json(report) : report_table_line(report))
                      << '\n';
        } catch (const input_error& e) {
            std::cerr << record_prefix(rec) << ": " << e.what() << '\n';
            bad = true;
        }
    }
    return bad ? 2 : 0;
}

int run_dual(const InputOptions& opts) {
    std::vector<ParsedRecord> records = read_input(opts);
    bool bad = false;
    for (const ParsedRecord& rec : records) {
        print_warnings(rec);
        if (!rec.error.empty() || !rec.polytope) {
            std::cerr << record_prefix(rec) << ": " << rec.error << '\n';
            bad = true;
            continue;
        }
        try {
            LatticePolytope dual = rec.polytope->polar_dual();
            std::string comment = rec.matrix.comment.empty()
                                      ? "dual of record " + std::to_string(rec.matrix.index)
                                      : "dual of " + rec.matrix.comment;
            std::cout << emit_vertex_matrix(dual, comment);
        } catch (const input_error& e) {
            std::cerr << record_prefix(rec) << ": " << e.what() << '\n';
            bad = true;
        }
    }
    return bad ? 2 : 0;
}

int run_check(const InputOptions& opts) {
    std::vector<ParsedRecord> records = read_input(opts);
    bool bad = false;
    bool nonreflexive = false;
    for (const ParsedRecord& rec : records) {
        print_warnings(rec);
        if (!rec.error.empty() || !rec.polytope) {
            std::cerr << record_prefix(rec) << ": " << rec.error << '\n';
            bad = true;
            continue;
        }
        const LatticePolytope& p = *rec.polytope;
        std::cout << record_prefix(rec) << ": "
                  << (p.is_reflexive() ? "reflexive" : "not reflexive") << " (dim "
                  << p.dim() << ", " << p.vertices().size() << " vertices, "
                  << p.lattice_points().size() << " lattice points)" << '\n';
        if (!p.is_reflexive()) nonreflexive = true;
    }
    if (bad) return 2;
    return nonreflexive ? 1 : 0;
}

int run_table16(bool verify) {
    std::vector<MirrorPair> pairs = table16();
    const auto& expected = table16_expected();
    bool ok = true;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        std::cout << "row " << expected[i].label << ": "
                  << report_table_line(pairs[i].report) << '\n';
        if (!verify) continue;

        const TorsionReport& r = pairs[i].report;
        const TableRowExpected& e = expected[i];
        std::vector<std::string> complaints;
        if (!r.pi1.is_cyclic() || r.pi1.order() != e.pi1_order) {
            complaints.push_back("fundamental group is " + r.pi1.to_string());
        }
        if (r.p_delta != e.p_delta || r.v_delta != e.v_delta ||
            r.p_dstar != e.p_dstar || r.v_dstar != e.v_dstar) {
            complaints.push_back("point/vertex counts differ");
        }
        if (r.h11 != e.h11 || r.h21 != e.h21 || r.chi != e.chi) {
            complaints.push_back("Hodge numbers differ");
        }
        if (!verify_tor_dual(pairs[i])) {
            complaints.push_back("A/B do not trade places with the mirror");
        }
        if (!verify_comb_dual(pairs[i].delta).ok()) {
            complaints.push_back("lattice-level exchange failed");
        }
        for (const std::string& c : complaints) {
            std::cout << "row " << e.label << ": MISMATCH: " << c << '\n';
            ok = false;
        }
    }
    if (verify) {
        std::cout << (ok ? "all 16 rows verified" : "verification failed") << '\n';
    }
    return ok ? 0 : 1;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("TORSIONSCAN_JOBS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024) {
            return static_cast<unsigned>(v);
        }
        std::cerr << "warning: ignoring invalid TORSIONSCAN_JOBS='" << env << "'\n";
    }
    return 1;
}

int run_scan(const InputOptions& opts, unsigned jobs, bool skip_nonreflexive) {
    std::vector<ParsedRecord> records = read_input(opts);
    ScanSummary summary = scan_records(records, jobs, skip_nonreflexive);
    std::cout << scan_summary_json(summary);
    return summary.failures.empty() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"torsion invariants of Calabi-Yau hypersurfaces in toric\n"
                 "Fano varieties, computed from reflexive lattice polytopes"};
    app.require_subcommand(1);

    InputOptions analyze_opts;
    bool analyze_dual = false;
    bool analyze_json = false;
    CLI::App* analyze_cmd = app.add_subcommand(
        "analyze", "fundamental group, Brauer group and stringy Hodge numbers\n"
                   "of the family attached to each reflexive 4-polytope");
    add_input_options(analyze_cmd, analyze_opts);
    analyze_cmd->add_flag("--dual", analyze_dual,
                          "records hold the polar-dual polytope of the family");
    analyze_cmd->add_flag("--json", analyze_json, "one JSON object per record");

    InputOptions dual_opts;
    CLI::App* dual_cmd = app.add_subcommand(
        "dual", "polar dual of each polytope, in the same matrix format");
    add_input_options(dual_cmd, dual_opts);

    InputOptions check_opts;
    CLI::App* check_cmd = app.add_subcommand(
        "check", "reflexivity check for each record (exit 1 when one fails)");
    add_input_options(check_cmd, check_opts);

    bool verify = false;
    CLI::App* table_cmd = app.add_subcommand(
        "table16", "the sixteen torsion families, one line per row");
    table_cmd->add_flag("--verify", verify,
                        "recompute every invariant and check the mirror exchange");

    InputOptions scan_opts;
    unsigned jobs = default_jobs();
    bool skip_nonreflexive = false;
    CLI::App* scan_cmd = app.add_subcommand(
        "scan", "bulk scan for nontrivial fundamental or Brauer groups");
    add_input_options(scan_cmd, scan_opts);
    scan_cmd->add_option("--jobs", jobs,
                         "worker threads (default: TORSIONSCAN_JOBS or 1)")
        ->check(CLI::Range(1u, 1024u));
    scan_cmd->add_flag("--skip-nonreflexive", skip_nonreflexive,
                       "count non-reflexive records instead of listing them");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze_cmd) return run_analyze(analyze_opts, analyze_dual, analyze_json);
        if (*dual_cmd) return run_dual(dual_opts);
        if (*check_cmd) return run_check(check_opts);
        if (*table_cmd) return run_table16(verify);
        if (*scan_cmd) return run_scan(scan_opts, jobs, skip_nonreflexive);
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
