#include "demoplan/scenario/bench.hpp"

#include <cstdio>
#include <fstream>

#include "demoplan/planner/path_io.hpp"

namespace demoplan::scenario {

BenchReport run_bench(const ScenarioConfig& config,
                      const std::filesystem::path& out_dir) {
  BenchReport report;
  report.success_floor = config.success_floor;
  for (int trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t seed = config.seeds[trial];
    const RunOutcome outcome = run_scenario(config, seed, trial + 1, out_dir);
    TrialRow row;
    row.scenario = config.name;
    row.candidate_count = static_cast<int>(outcome.candidates.size());
    row.trial = trial + 1;
    row.seed = seed;
    row.status = planner::plan_status_name(outcome.plan.status);
    row.used_key_poses = outcome.plan.used_key_pose_count;
    row.time_s = outcome.plan.elapsed_s;
    row.path_file = outcome.artifacts.path_file;
    if (outcome.plan.status == planner::PlanStatus::Success) {
      ++report.successes;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string bench_table(const BenchReport& report) {
  char buf[160];
  std::string out;
  std::snprintf(buf, sizeof(buf), "%-16s %10s %6s %6s %10s %5s %8s\n", "scenario",
                "candidates", "trial", "seed", "status", "used", "time_s");
  out += buf;
  for (const auto& row : report.rows) {
    std::snprintf(buf, sizeof(buf), "%-16s %10d %6d %6llu %10s %5d %8.3f\n",
                  row.scenario.c_str(), row.candidate_count, row.trial,
                  static_cast<unsigned long long>(row.seed), row.status.c_str(),
                  row.used_key_poses, row.time_s);
    out += buf;
  }
  std::snprintf(buf, sizeof(buf), "successes: %d/%zu (floor %d) -> %s\n",
                report.successes, report.rows.size(), report.success_floor,
                report.passed() ? "pass" : "fail");
  out += buf;
  return out;
}

std::string bench_rows_csv(const BenchReport& report) {
  std::string out = "scenario,candidates,trial,seed,status,used,time_s\n";
  char buf[160];
  for (const auto& row : report.rows) {
    std::snprintf(buf, sizeof(buf), "%s,%d,%d,%llu,%s,%d,%.3f\n",
                  row.scenario.c_str(), row.candidate_count, row.trial,
                  static_cast<unsigned long long>(row.seed), row.status.c_str(),
                  row.used_key_poses, row.time_s);
    out += buf;
  }
  return out;
}

void write_bench_csv(const BenchReport& report, const std::filesystem::path& file) {
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << bench_rows_csv(report);
    if (!out.good()) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

ArtifactCheck check_artifacts(const std::filesystem::path& path_file,
                              const ScenarioConfig& config) {
  ArtifactCheck check;
  planner::PathFile persisted;
  try {
    persisted = planner::read_path_file(path_file.string());
  } catch (const std::exception& e) {
    check.message = e.what();
    return check;
  }
  check.parse_ok = true;

  const geom::Scene scene = build_scene(config);
  const planner::PathValidation verdict = planner::validate_path(
      persisted.path, scene, config.planner.validation_resolution,
      config.planner.rotation_weight, planner::CollisionChecker::Exhaustive);
  check.valid = verdict.valid;
  if (!verdict.valid) {
    check.violation_segment = verdict.segment;
    check.violation_param = verdict.param;
    check.message = "collision on segment " + std::to_string(verdict.segment);
  }
  return check;
}

}  // namespace demoplan::scenario
