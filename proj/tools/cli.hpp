#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ngspread/search.hpp"

namespace ngspread::cli {

/// Command-line argument rejected; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// --help was requested; carries the text to print.
struct HelpRequested {
    std::string text;
};

enum class Command { verify_ng, verify_qspread, bound_table, search_local, graphon_check, diag };
enum class OutputFormat { json, csv };
enum class GraphonCheckKind { theorem34, relation, cutnorm };

/// Fully validated invocation; execute() never re-checks flag ranges.
struct Invocation {
    Command command = Command::verify_ng;
    OutputFormat output = OutputFormat::json;
    std::uint64_t seed = 0;
    int jobs = 0; // 0 = hardware concurrency

    int n = 0;
    bool full_scan = false;
    bool allow_slow = false;

    Objective mode = Objective::ng;
    int starts = 10;
    int max_steps = 200;

    int n_min = 0;
    int n_max = 0;

    double epsilon = 0.1;
    std::string graph_file;

    GraphonCheckKind graphon_kind = GraphonCheckKind::theorem34;
    int samples = 100;
    std::string file_a;
    std::string file_b;
};

/// Parses and validates argv (program name excluded). Throws UsageError on
/// any unknown or out-of-range flag, HelpRequested for --help.
Invocation parse_invocation(const std::vector<std::string>& args);

/// Runs the invocation. Reports go to `out` in one write (nothing partial on
/// error paths); progress and diagnostics go to `err`. Exit codes:
///   0  success, conjectured extremal confirmed where applicable
///   1  numeric failure
///   3  computation succeeded but disagrees with the conjectured extremal
int execute(const Invocation& inv, std::ostream& out, std::ostream& err);

/// parse + execute with the full exit-code mapping (2 on usage errors).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ngspread::cli
