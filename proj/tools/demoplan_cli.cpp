#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "demoplan/demo/pose_log.hpp"
#include "demoplan/scenario/bench.hpp"
#include "demoplan/scenario/candidates.hpp"
#include "demoplan/scenario/config.hpp"
#include "demoplan/scenario/runner.hpp"

namespace {

namespace fs = std::filesystem;
using namespace demoplan;

struct Overrides {
  std::optional<double> t_e;
  std::optional<int> trials;
  std::optional<int> candidates;
  std::optional<std::uint64_t> seed;
  std::string out_dir = "out";
};

void add_override_flags(CLI::App* cmd, Overrides& ov) {
  cmd->add_option("--te", ov.t_e, "per-attempt planning time threshold, seconds");
  cmd->add_option("--candidates", ov.candidates,
                  "number of demonstration key-pose candidates");
  cmd->add_option("--out-dir", ov.out_dir, "artifact directory")
      ->capture_default_str();
}

scenario::ScenarioConfig load_with_overrides(const std::string& file,
                                             const Overrides& ov) {
  scenario::ScenarioConfig config = scenario::load_scenario(file);
  if (ov.t_e) config.planner.t_e = *ov.t_e;
  if (ov.candidates) config.demo.candidate_count = *ov.candidates;
  if (ov.trials) {
    config.trials = *ov.trials;
    config.seeds.clear();
    for (int i = 1; i <= config.trials; ++i) config.seeds.push_back(i);
  }
  config.planner.validate();
  return config;
}

int cmd_ingest(const std::string& log_file) {
  const demo::IngestReport report = demo::ingest_pose_log(log_file);
  const auto& traj = report.trajectory;
  std::printf("source:      %s\n", traj.recording_id.c_str());
  std::printf("samples:     %zu\n", traj.samples.size());
  std::printf("duration:    %.3f s  (t in [%.3f, %.3f])\n", traj.duration(),
              traj.samples.front().t, traj.samples.back().t);
  std::printf("rejected:    %d non-finite record(s)\n", report.rejected_nonfinite);
  std::printf("collapsed:   %d duplicate timestamp(s)\n", report.collapsed_duplicates);
  for (const demo::Dof dof : demo::kAllDofs) {
    const std::vector<double> values = demo::dof_values(traj, dof);
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    std::printf("%-6s range: [%.4f, %.4f]\n", demo::dof_name(dof), *lo, *hi);
  }
  return 0;
}

int cmd_rank(const std::string& scenario_file, const Overrides& ov) {
  const scenario::ScenarioConfig config = load_with_overrides(scenario_file, ov);
  const demo::IngestReport report =
      demo::ingest_pose_log(config.resolve(config.demo.log).string());
  const demo::RankingResult ranking = demo::rank_key_poses(
      report.trajectory, config.demo.ranking, config.target_frame);
  const std::vector<demo::KeyPose> selected =
      scenario::select_candidates(ranking, config.demo);

  std::printf("ranked %zu poses (dof=%s, degree=%d), selected %zu candidate(s)\n",
              ranking.ranked.size(), config.demo.ranking.dof.c_str(),
              config.demo.ranking.degree, selected.size());
  std::printf("%-5s %-8s %-10s\n", "rank", "t [s]", "score");
  for (const auto& kp : selected) {
    std::printf("%-5d %-8.3f %-10.4f\n", kp.rank, kp.t, kp.score);
  }

  fs::create_directories(ov.out_dir);
  const fs::path trace = fs::path(ov.out_dir) / (config.name + "_fit_trace.csv");
  scenario::write_fit_trace_csv(report.trajectory, ranking, trace);
  std::printf("fit trace: %s\n", trace.string().c_str());
  return 0;
}

void print_outcome(const scenario::RunOutcome& outcome, std::uint64_t seed,
                   double rotation_weight) {
  const auto& plan = outcome.plan;
  std::printf("seed %" PRIu64 ": %s  used=%d  attempts=%zu  length=%.4f  %.3f s\n",
              seed, planner::plan_status_name(plan.status).c_str(),
              plan.used_key_pose_count, plan.attempts.size(),
              plan.path.length(rotation_weight), plan.elapsed_s);
  if (!plan.repaired_ranks.empty()) {
    std::printf("  repaired ranks:");
    for (int r : plan.repaired_ranks) std::printf(" %d", r);
    std::printf("\n");
  }
  if (!plan.discarded_ranks.empty()) {
    std::printf("  discarded ranks:");
    for (int r : plan.discarded_ranks) std::printf(" %d", r);
    std::printf("\n");
  }
  if (plan.status == planner::PlanStatus::Success) {
    std::printf("  joint path: %s (%zu configs)\n",
                kin::joint_path_status_name(outcome.joints.status),
                outcome.joints.configs.size());
    std::printf("  artifacts: %s\n", outcome.artifacts.path_file.string().c_str());
  }
}

int cmd_plan(const std::string& scenario_file, const Overrides& ov) {
  scenario::ScenarioConfig config = load_with_overrides(scenario_file, ov);
  const std::uint64_t seed =
      ov.seed ? *ov.seed : (config.seeds.empty() ? 1 : config.seeds.front());
  const scenario::RunOutcome outcome =
      scenario::run_scenario(config, seed, 1, ov.out_dir);
  print_outcome(outcome, seed, config.planner.rotation_weight);
  return outcome.plan.status == planner::PlanStatus::Success ? 0 : 1;
}

int cmd_bench(const std::string& scenario_file, const Overrides& ov) {
  const scenario::ScenarioConfig config = load_with_overrides(scenario_file, ov);
  const scenario::BenchReport report = scenario::run_bench(config, ov.out_dir);
  std::printf("%s", scenario::bench_table(report).c_str());
  const fs::path csv = fs::path(ov.out_dir) / (config.name + "_bench.csv");
  scenario::write_bench_csv(report, csv);
  std::printf("rows: %s\n", csv.string().c_str());
  if (!report.passed()) {
    std::printf("FAIL: %d/%zu successes, floor %d\n", report.successes,
                report.rows.size(), report.success_floor);
    return 1;
  }
  return 0;
}

int cmd_check(const std::string& path_file, const std::string& scenario_file) {
  const scenario::ScenarioConfig config = scenario::load_scenario(scenario_file);
  const scenario::ArtifactCheck check = scenario::check_artifacts(path_file, config);
  if (!check.parse_ok) {
    std::printf("parse error: %s\n", check.message.c_str());
    return 2;
  }
  if (!check.valid) {
    std::printf("INVALID: %s\n", check.message.c_str());
    return 1;
  }
  std::printf("valid\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"demonstration-guided insertion planning"};
  app.require_subcommand(1);

  std::string log_file, scenario_file, path_file;
  Overrides ov;

  CLI::App* ingest = app.add_subcommand("ingest", "summarize a pose log");
  ingest->add_option("log", log_file, "pose log CSV")->required();

  CLI::App* rank =
      app.add_subcommand("rank", "rank demonstration key poses, emit fit trace");
  rank->add_option("scenario", scenario_file, "scenario config")->required();
  add_override_flags(rank, ov);

  CLI::App* plan = app.add_subcommand("plan", "run one planning trial");
  plan->add_option("scenario", scenario_file, "scenario config")->required();
  plan->add_option("--seed", ov.seed, "RNG seed (default: first configured seed)");
  add_override_flags(plan, ov);

  CLI::App* bench = app.add_subcommand("bench", "run all configured trials");
  bench->add_option("scenario", scenario_file, "scenario config")->required();
  bench->add_option("--trials", ov.trials, "trial count (overrides seed list)");
  add_override_flags(bench, ov);

  CLI::App* check = app.add_subcommand("check", "re-validate a persisted path");
  check->add_option("path", path_file, "path artifact JSON")->required();
  check->add_option("--scenario", scenario_file, "scenario config")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) return cmd_ingest(log_file);
    if (rank->parsed()) return cmd_rank(scenario_file, ov);
    if (plan->parsed()) return cmd_plan(scenario_file, ov);
    if (bench->parsed()) return cmd_bench(scenario_file, ov);
    if (check->parsed()) return cmd_check(path_file, scenario_file);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
