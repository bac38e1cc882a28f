#include "demoplan/planner/guided.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "demoplan/planner/metric.hpp"
#include "demoplan/planner/repair.hpp"
#include "demoplan/planner/rrt_connect.hpp"

namespace demoplan::planner {

PlanningProblem::PlanningProblem(const geom::Scene& scene,
                                 const geom::RigidTransform& start,
                                 const geom::RigidTransform& goal,
                                 std::vector<demo::KeyPose> ranked_key_poses,
                                 PlannerConfig config)
    : scene_(&scene),
      start_(start),
      goal_(goal),
      key_poses_(std::move(ranked_key_poses)),
      config_(std::move(config)) {
  config_.validate();
  endpoints_free_ = !geom::pose_in_collision(start_, scene) &&
                    !geom::pose_in_collision(goal_, scene);
}

std::string plan_status_name(PlanStatus status) {
  switch (status) {
    case PlanStatus::Success:
      return "success";
    case PlanStatus::Timeout:
      return "timeout";
    case PlanStatus::InfeasibleInput:
      return "infeasible_input";
  }
  return "timeout";
}

namespace {

struct Entry {
  int id = 0;
  geom::RigidTransform pose;
  WaypointTag tag = WaypointTag::Sampled;
  int rank = 0;
  double t = 0.0;
};

}  // namespace

PlanResult plan_with_demonstration(const PlanningProblem& problem) {
  const PlannerConfig& config = problem.config();
  const geom::Scene& scene = problem.scene();
  const Deadline total_clock(std::numeric_limits<double>::infinity());

  PlanResult result;
  if (!problem.endpoints_free()) {
    result.status = PlanStatus::InfeasibleInput;
    result.elapsed_s = total_clock.elapsed();
    return result;
  }

  std::mt19937_64 rng(config.rng_seed);

  std::vector<geom::RigidTransform> anchors = {problem.start(), problem.goal()};
  for (const auto& kp : problem.ranked_key_poses()) {
    anchors.push_back(kp.pose_in_world);
  }
  const SamplingBounds bounds = derive_sampling_bounds(scene, anchors);

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<Entry> entries = {
      {0, problem.start(), WaypointTag::Start, 0, -kInf},
      {1, problem.goal(), WaypointTag::Goal, 0, kInf},
  };
  std::vector<int> sequence = {0, 1};  // indices into entries, ordered by t
  std::map<std::pair<int, int>, std::vector<geom::RigidTransform>> solved;

  std::size_t next_candidate = 0;
  int insertions = 0;

  for (int attempt = 0;; ++attempt) {
    int inserted_rank = 0;
    if (attempt > 0) {
      bool inserted = false;
      while (next_candidate < problem.ranked_key_poses().size() &&
             insertions < config.max_key_poses) {
        const demo::KeyPose& kp = problem.ranked_key_poses()[next_candidate++];
        geom::RigidTransform pose = kp.pose_in_world;
        WaypointTag tag = WaypointTag::KeyPose;
        if (geom::pose_in_collision(pose, scene)) {
          const RepairResult rep = repair_key_pose(pose, scene, config, rng);
          if (!rep.success) {
            result.discarded_ranks.push_back(kp.rank);
            continue;
          }
          pose = rep.pose;
          tag = WaypointTag::Repaired;
          result.repaired_ranks.push_back(kp.rank);
        }
        const int id = static_cast<int>(entries.size());
        entries.push_back({id, pose, tag, kp.rank, kp.t});
        auto at = std::upper_bound(sequence.begin(), sequence.end(), kp.t,
                                   [&](double t, int e) { return t < entries[e].t; });
        sequence.insert(at, id);
        ++insertions;
        inserted = true;
        inserted_rank = kp.rank;
        break;
      }
      if (!inserted) {
        result.status = PlanStatus::Timeout;
        break;
      }
    }

    AttemptRecord rec;
    rec.attempt = attempt;
    rec.inserted_rank = inserted_rank;
    bool infeasible = false;

    for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
      const std::pair<int, int> key{sequence[i], sequence[i + 1]};
      if (solved.count(key)) {
        rec.segment_seconds.push_back(0.0);
        continue;
      }
      const Deadline deadline(config.t_e);
      const SegmentResult seg =
          plan_segment(entries[key.first].pose, entries[key.second].pose, scene,
                       config, bounds, deadline, rng);
      ++result.segment_calls;
      rec.segment_seconds.push_back(seg.elapsed_s);
      if (seg.status == SegmentStatus::Success) {
        solved.emplace(key, seg.waypoints);
      } else {
        rec.failed_segment = static_cast<int>(i);
        infeasible = (seg.status == SegmentStatus::InfeasibleInput);
        break;
      }
    }

    rec.success = rec.failed_segment < 0;
    result.attempts.push_back(rec);

    if (infeasible) {
      result.status = PlanStatus::InfeasibleInput;
      break;
    }
    if (rec.success) {
      const Entry& first = entries[sequence.front()];
      result.path.waypoints.push_back({first.pose, first.tag, first.rank});
      for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
        const Entry& to = entries[sequence[i + 1]];
        const auto& wps = solved.at({sequence[i], sequence[i + 1]});
        if (wps.size() < 2) {
          // Degenerate segment (coincident endpoints): keep the destination
          // waypoint so its tag still shows up in the path.
          result.path.waypoints.push_back({to.pose, to.tag, to.rank});
          continue;
        }
        for (std::size_t k = 1; k < wps.size(); ++k) {
          if (k + 1 == wps.size()) {
            result.path.waypoints.push_back({wps[k], to.tag, to.rank});
          } else {
            result.path.waypoints.push_back({wps[k], WaypointTag::Sampled, 0});
          }
        }
      }
      result.status = PlanStatus::Success;
      result.used_key_pose_count = insertions;
      break;
    }
  }

  result.elapsed_s = total_clock.elapsed();
  return result;
}

}  // namespace demoplan::planner
