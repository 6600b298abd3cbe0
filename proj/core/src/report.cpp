#include "turan/report.hpp"

#include <charconv>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace turan {

namespace {
using json = nlohmann::ordered_json;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::ReportOnly:
      return "REPORT-ONLY";
  }
  return "?";
}

bool Report::all_hard_pass() const {
  for (const CheckResult& c : checks) {
    if (c.status == CheckStatus::Fail) return false;
  }
  return true;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) {
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
  }
  return std::string(buf, ptr);
}

std::string report_to_json(const Report& r, bool include_timing) {
  json j;
  j["suite"] = r.suite;
  j["master_seed"] = r.master_seed;
  if (!r.config_echo.empty()) {
    json cfg = json::parse(r.config_echo, nullptr, false);
    j["config"] = cfg.is_discarded() ? json(r.config_echo) : cfg;
  }
  j["checks"] = json::array();
  for (const CheckResult& c : r.checks) {
    json o;
    o["name"] = c.name;
    o["status"] = to_string(c.status);
    if (!c.detail.empty()) o["detail"] = c.detail;
    if (!c.values.empty()) {
      json vals;
      for (const auto& [k, v] : c.values) vals[k] = v;
      o["values"] = std::move(vals);
    }
    j["checks"].push_back(std::move(o));
  }
  if (!r.sweeps.empty()) {
    j["sweeps"] = json::array();
    for (const SweepSeries& s : r.sweeps) {
      json o;
      o["name"] = s.name;
      o["columns"] = s.columns;
      o["rows"] = s.rows;
      j["sweeps"].push_back(std::move(o));
    }
  }
  j["all_pass"] = r.all_hard_pass();
  if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j.dump(2);
}

std::string emit_plotdata(const Report& r) {
  std::string out;
  for (const SweepSeries& s : r.sweeps) {
    out += "# ";
    out += s.name;
    out += '\n';
    for (size_t i = 0; i < s.columns.size(); ++i) {
      if (i) out += '\t';
      out += s.columns[i];
    }
    out += '\n';
    for (const auto& row : s.rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) out += '\t';
        out += row[i];
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace turan
