#include "demoplan/scenario/runner.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "demoplan/demo/pose_log.hpp"
#include "demoplan/kin/chain_io.hpp"
#include "demoplan/planner/path_io.hpp"
#include "demoplan/scenario/candidates.hpp"

namespace demoplan::scenario {

namespace {

template <typename F>
auto stage(const char* name, F&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("stage ") + name + ": " + e.what());
  }
}

/// Removes everything registered unless commit() was reached.
class ArtifactGuard {
 public:
  ~ArtifactGuard() {
    if (committed_) return;
    for (const auto& file : files_) {
      std::error_code ec;
      std::filesystem::remove(file, ec);
    }
  }
  void track(const std::filesystem::path& file) { files_.push_back(file); }
  void commit() { committed_ = true; }

 private:
  std::vector<std::filesystem::path> files_;
  bool committed_ = false;
};

void write_text_atomic(const std::filesystem::path& file, const std::string& text) {
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << text;
    if (!out.good()) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", s);
  return buf;
}

std::string attempts_csv(const planner::PlanResult& plan) {
  std::string out = "attempt,inserted_rank,failed_segment,success,segment_seconds\n";
  for (const auto& rec : plan.attempts) {
    out += std::to_string(rec.attempt) + "," + std::to_string(rec.inserted_rank) + "," +
           std::to_string(rec.failed_segment) + "," + (rec.success ? "1" : "0") + ",";
    for (std::size_t i = 0; i < rec.segment_seconds.size(); ++i) {
      out += (i ? ";" : "") + format_seconds(rec.segment_seconds[i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace

void write_fit_trace_csv(const demo::DemoTrajectory& traj,
                         const demo::RankingResult& ranking,
                         const std::filesystem::path& filename) {
  std::string out = "dof,t,raw,fitted,derivative\n";
  char buf[160];
  for (const auto& fit : ranking.fits) {
    const std::vector<double> raw = demo::dof_values(traj, fit.dof);
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
      const double t = traj.samples[i].t;
      std::snprintf(buf, sizeof(buf), "%s,%.6f,%.9g,%.9g,%.9g\n",
                    demo::dof_name(fit.dof), t, raw[i], fit.value_at(t),
                    fit.derivative_at(t));
      out += buf;
    }
  }
  write_text_atomic(filename, out);
}

RunOutcome run_scenario(const ScenarioConfig& config, std::uint64_t seed,
                        int trial_index, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::string prefix = config.name + "_trial" + std::to_string(trial_index);

  RunOutcome outcome;
  ArtifactGuard guard;

  const geom::Scene scene = stage("scene", [&] { return build_scene(config); });

  const demo::IngestReport ingest = stage("ingest", [&] {
    return demo::ingest_pose_log(config.resolve(config.demo.log).string());
  });

  const demo::RankingResult ranking = stage("rank", [&] {
    return demo::rank_key_poses(ingest.trajectory, config.demo.ranking,
                                config.target_frame);
  });

  outcome.candidates = stage("candidates", [&] {
    return select_candidates(ranking, config.demo);
  });

  planner::PlannerConfig planner_config = config.planner;
  planner_config.rng_seed = seed;
  outcome.plan = stage("plan", [&] {
    const planner::PlanningProblem problem(scene, config.start, config.goal,
                                           outcome.candidates, planner_config);
    return planner::plan_with_demonstration(problem);
  });

  if (outcome.plan.status == planner::PlanStatus::Success) {
    outcome.joints = stage("joint_map", [&] {
      kin::KinematicChain chain = kin::load_chain(config.resolve(config.chain).string());
      kin::JointPathConfig jp;
      jp.rotation_weight = planner_config.rotation_weight;
      const geom::RigidTransform first_tip =
          outcome.plan.path.waypoints.front().pose * geom::invert(config.grasp);
      const kin::IkResult anchor = kin::inverse_kinematics_scan(
          chain, first_tip, kin::JointConfig::Zero(chain.dof()), jp.ik);
      return kin::object_path_to_joint_path(outcome.plan.path, config.grasp, chain,
                                            anchor.q, jp);
    });
  }

  stage("artifacts", [&] {
    outcome.artifacts.fit_trace_file = out_dir / (config.name + "_fit_trace.csv");
    guard.track(outcome.artifacts.fit_trace_file);
    write_fit_trace_csv(ingest.trajectory, ranking, outcome.artifacts.fit_trace_file);

    outcome.artifacts.attempts_file = out_dir / (prefix + "_attempts.csv");
    guard.track(outcome.artifacts.attempts_file);
    write_text_atomic(outcome.artifacts.attempts_file, attempts_csv(outcome.plan));

    planner::PathFile path_file;
    path_file.frame = config.frame;
    path_file.path = outcome.plan.path;
    path_file.stats.scenario = config.name;
    path_file.stats.candidate_count = static_cast<int>(outcome.candidates.size());
    path_file.stats.trial = trial_index;
    path_file.stats.seed = seed;
    path_file.stats.status = planner::plan_status_name(outcome.plan.status);
    path_file.stats.used_key_poses = outcome.plan.used_key_pose_count;
    path_file.stats.repaired_ranks = outcome.plan.repaired_ranks;
    path_file.stats.time_s = outcome.plan.elapsed_s;
    path_file.stats.length =
        outcome.plan.path.length(planner_config.rotation_weight);
    outcome.artifacts.path_file = out_dir / (prefix + "_path.json");
    guard.track(outcome.artifacts.path_file);
    planner::write_path_file(path_file, outcome.artifacts.path_file.string());

    if (outcome.plan.status == planner::PlanStatus::Success &&
        outcome.joints.status == kin::JointPathStatus::Success) {
      kin::KinematicChain chain = kin::load_chain(config.resolve(config.chain).string());
      outcome.artifacts.joints_file = out_dir / (prefix + "_joints.csv");
      guard.track(outcome.artifacts.joints_file);
      const std::filesystem::path tmp = outcome.artifacts.joints_file.string() + ".tmp";
      kin::write_joint_path_csv(outcome.joints.configs, chain, tmp.string());
      std::filesystem::rename(tmp, outcome.artifacts.joints_file);
    }
    return 0;
  });

  guard.commit();
  return outcome;
}

}  // namespace demoplan::scenario
