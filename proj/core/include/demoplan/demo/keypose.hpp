#pragma once

#include <string>
#include <vector>

#include "demoplan/demo/curve_fit.hpp"
#include "demoplan/demo/trajectory.hpp"

namespace demoplan::demo {

/// A demonstration pose promoted to planning-waypoint candidate, scored by
/// the magnitude of the fitted-curve derivative at its timestamp.
struct KeyPose {
  geom::RigidTransform pose_in_world;
  double t = 0.0;
  double score = 0.0;
  int rank = 0;  // 1-based, 1 = highest score
};

struct RankingConfig {
  /// DoF to score: one of x, y, z, roll, pitch, yaw, or "all" to take the
  /// per-DoF standard-deviation-normalized maximum.
  std::string dof = "pitch";
  int degree = 7;
};

struct RankingResult {
  /// Sorted by rank: descending score, ties broken by ascending time.
  std::vector<KeyPose> ranked;
  /// The fits that produced the scores (one entry, or six in "all" mode).
  std::vector<PolynomialFit> fits;
};

/// Scores every sample of the trajectory and returns them rank-ordered.
/// Poses are mapped into the planner world by left-composition with
/// world_t_fixed (pass identity to keep them in the fixed-object frame).
RankingResult rank_key_poses(const DemoTrajectory& traj, const RankingConfig& config,
                             const geom::RigidTransform& world_t_fixed =
                                 geom::RigidTransform::Identity());

}  // namespace demoplan::demo
