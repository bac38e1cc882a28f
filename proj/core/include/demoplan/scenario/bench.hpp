#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "demoplan/scenario/config.hpp"
#include "demoplan/scenario/runner.hpp"

namespace demoplan::scenario {

struct TrialRow {
  std::string scenario;
  int candidate_count = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::string status;
  int used_key_poses = 0;
  double time_s = 0.0;
  std::filesystem::path path_file;
};

struct BenchReport {
  std::vector<TrialRow> rows;
  int successes = 0;
  int success_floor = 0;

  bool passed() const { return successes >= success_floor; }
};

/// Runs every configured seed through run_scenario and collects the rows.
/// Per-trial planner failures become rows; only stage errors abort.
BenchReport run_bench(const ScenarioConfig& config,
                      const std::filesystem::path& out_dir);

/// Human-readable summary table.
std::string bench_table(const BenchReport& report);

/// Machine-readable rows. With a fixed config and seed list the output is
/// byte-identical across runs except for the time column.
std::string bench_rows_csv(const BenchReport& report);

void write_bench_csv(const BenchReport& report, const std::filesystem::path& file);

struct ArtifactCheck {
  bool parse_ok = false;
  bool valid = false;
  int violation_segment = -1;
  double violation_param = 0.0;
  std::string message;
};

/// Re-validates a persisted path against the scenario's scene using the
/// exhaustive collision checker. Parse problems and validation failures are
/// reported separately.
ArtifactCheck check_artifacts(const std::filesystem::path& path_file,
                              const ScenarioConfig& config);

}  // namespace demoplan::scenario
