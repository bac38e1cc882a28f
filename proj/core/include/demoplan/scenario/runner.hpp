#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "demoplan/demo/keypose.hpp"
#include "demoplan/kin/joint_path.hpp"
#include "demoplan/planner/guided.hpp"
#include "demoplan/scenario/config.hpp"

namespace demoplan::scenario {

struct RunArtifacts {
  std::filesystem::path path_file;
  std::filesystem::path joints_file;
  std::filesystem::path attempts_file;
  std::filesystem::path fit_trace_file;
};

struct RunOutcome {
  planner::PlanResult plan;
  /// Joint mapping result; only populated when planning succeeded.
  kin::JointPathResult joints;
  std::vector<demo::KeyPose> candidates;
  RunArtifacts artifacts;
};

/// Executes the full pipeline for one seed: ingest, rank, select candidates,
/// guided planning, joint mapping, artifact emission. Stage failures raise
/// std::runtime_error prefixed with the stage name; artifacts written before
/// the failure are removed. Planner and IK failures are reported through the
/// outcome, not as errors.
RunOutcome run_scenario(const ScenarioConfig& config, std::uint64_t seed,
                        int trial_index, const std::filesystem::path& out_dir);

/// Fitted-curve trace for external plotting: one row per sample and DoF with
/// the raw value, the fitted value and the fitted derivative at that time.
void write_fit_trace_csv(const demo::DemoTrajectory& traj,
                         const demo::RankingResult& ranking,
                         const std::filesystem::path& filename);

}  // namespace demoplan::scenario
