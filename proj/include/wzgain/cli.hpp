#pragma once

// Command-line front end: request/report types, the dispatcher that routes a
// parsed request to the library, deterministic serializers, and the argv
// entry point.
//
// Subcommands: wz-rate, rho1, gain-detect, gain-search, two-msg,
// ratio-search, entropy-ratio, sweep, reproduce-paper.
//
// Exit codes: 0 success, 1 I/O errors, 2 domain/validation errors (including
// argument parsing), 3 search exhausted.

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wzgain {

// A parsed invocation.  `params` holds raw parameter strings keyed by flag
// name (without the leading dashes); `ranges` holds the sweep range
// expressions ("name=lin:start:stop:count" or "name=geom:start:stop:count")
// in the order given.  An empty `format` means "default": text for single
// runs, CSV for sweeps.
struct CommandRequest {
  std::string subcommand;
  std::map<std::string, std::string> params;
  std::vector<std::string> ranges;
  std::string format;
  std::optional<std::string> out_path;
};

// Outcome of a single (non-sweep) run.  `params` echoes the resolved
// parameters, defaults included; `results` holds named numeric outputs and
// `verdicts` named booleans.
struct RunReport {
  std::string command;
  std::map<std::string, std::string> params;
  std::map<std::string, double> results;
  std::map<std::string, bool> verdicts;
  double runtime_s = 0.0;
};

// Routes a request to the corresponding library operation.  Throws IoError
// for file problems, SearchExhaustedError when a witness search fails, and
// std::logic_error subclasses for domain/validation errors.
RunReport dispatch(const CommandRequest& request);

// Evaluates `--command` over a (up to two-dimensional) parameter grid and
// returns the full CSV document: ranged parameter columns first, then result
// and verdict columns, rows in grid order (first range outermost).  An empty
// grid yields a header-only CSV naming just the ranged parameters.
std::string run_sweep(const CommandRequest& request);

// Serializers.  JSON output is byte-deterministic for identical inputs
// (sorted keys, fixed 17-significant-digit formatting) except for the
// wall-time field; +/-infinity serializes as the string "inf" / "-inf".
std::string format_report_json(const RunReport& report);
std::string format_report_text(const RunReport& report);
std::string format_report_csv(const RunReport& report);

// Full argv-to-exit-code entry point used by main().
int run_cli(int argc, char** argv);

}  // namespace wzgain
