#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cli/config.hpp"

namespace floq::cli {

inline constexpr const char* kToolName = "floq";
inline constexpr const char* kToolVersion = "0.1.0";

struct RunOptions {
  std::string out_dir = ".";
  int threads = 1;
  double tol = -1.0;  // scenario-specific default when negative
  std::vector<std::uint64_t> seeds;  // overrides the config seed list when non-empty
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;
  std::string note;
};

struct RunReport {
  std::string scenario;
  std::vector<CheckResult> checks;
  std::string csv_path;
  std::string json_path;
  long points = 0;
  double wall_ms = 0.0;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// Runs the scenario, writes <out>.csv and <out>.json under opts.out_dir, and
// returns the report.  Throws config_error / capacity_error for bad input.
RunReport run_scenario(const ScenarioConfig& cfg, const RunOptions& opts);

}  // namespace floq::cli
