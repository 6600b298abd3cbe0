#pragma once

// Structured run reports.  Every CLI verb that performs checks assembles one
// of these and prints it as JSON; the suite runner produces one per battery.
// Keeping the layer string-based (values are preformatted decimal strings)
// means two runs with the same config and seed serialize byte-identically,
// modulo the timing block, which callers may strip.

#include <string>
#include <utility>
#include <vector>

namespace turan {

enum class CheckStatus {
  Pass,
  Fail,
  ReportOnly,  // informational rows that never affect the exit code
};

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;  // one human-readable sentence
  // Named numeric payloads, already rendered as shortest round-trip decimals
  // (or exact rationals "p/q" where exactness matters).
  std::vector<std::pair<std::string, std::string>> values;
};

// A table destined for the plotdata emitter: one header plus uniform rows.
struct SweepSeries {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string suite;
  std::string config_echo;  // the resolved config, serialized by the producer
  std::uint64_t master_seed = 0;
  std::vector<CheckResult> checks;
  std::vector<SweepSeries> sweeps;
  double elapsed_seconds = 0.0;

  bool all_hard_pass() const;
  void add(CheckResult c) { checks.push_back(std::move(c)); }
};

// Shortest decimal that parses back to exactly x.
std::string format_double(double x);

// include_timing=false drops the elapsed block so byte-for-byte comparison
// across runs is possible.
std::string report_to_json(const Report& r, bool include_timing = true);

// Tab-separated plot payload: for each sweep a "# name" line, a header row,
// then data rows.  An empty sweep still gets its header so downstream tools
// can tell "ran, produced nothing" from "missing".
std::string emit_plotdata(const Report& r);

}  // namespace turan
