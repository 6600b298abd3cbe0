#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "turan/report.hpp"

namespace turan {

// Knobs for the reproducible experiment batteries. Defaults are sized for a
// single desk machine: the cheap Monte Carlo cells get mc_seeds trials with
// one root tuple each, while cells whose instances carry six-figure
// coefficient tables get fewer instances (mc_seeds_heavy) probed at
// mc_tuples_heavy root tuples apiece. The heavy cells need the extra tuples:
// patterns predicting a 1/q mean see copies as rare few-at-a-time bursts,
// and one tuple per instance leaves a real chance that every draw is zero.
struct SuiteConfig {
  std::uint64_t master_seed = 7;
  int mc_seeds = 500;
  int mc_seeds_heavy = 96;
  int mc_tuples_heavy = 48;
  int nonempty_seeds = 500;
  int dichotomy_seeds = 40;
  int dichotomy_tuples = 25;
  int p_config = 3;
  int entropy_hosts = 100;
  int host_n_max = 12;
  long long oracle_budget = 100'000'000;
  std::vector<std::uint32_t> mc_qs = {3, 5, 7};
  std::vector<std::uint32_t> sweep_qs = {3, 5, 7, 11, 13};
  int sweep_seeds = 200;

  void validate() const;
};

std::string suite_config_to_json(const SuiteConfig& c);
// Accepts a subset of the fields (missing ones keep their defaults); an
// unknown field is a usage error naming it.
SuiteConfig suite_config_from_json(const std::string& text);

const std::vector<std::string>& suite_names();

// name is one of suite_names(). Runs the named battery and returns the
// report; hard failures are reflected in the check statuses, never thrown.
Report run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace turan
