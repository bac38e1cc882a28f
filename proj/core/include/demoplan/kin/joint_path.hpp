#pragma once

#include <optional>
#include <string>
#include <vector>

#include "demoplan/geom/scene.hpp"
#include "demoplan/kin/chain.hpp"
#include "demoplan/kin/ik.hpp"
#include "demoplan/planner/path.hpp"

namespace demoplan::kin {

struct JointPathConfig {
  /// Composite spacing the object path is densified to before solving;
  /// non-positive keeps the path's own waypoints.
  double densify_step = 0.01;
  double rotation_weight = 0.1;
  /// Largest allowed per-joint change between consecutive solutions, radians.
  double max_joint_step = 0.15;
  IkConfig ik;
};

enum class JointPathStatus { Success, IkFailure, Discontinuity };

const char* joint_path_status_name(JointPathStatus status);

struct JointPathResult {
  JointPathStatus status = JointPathStatus::Success;
  /// One config per densified waypoint, aligned 1:1.
  std::vector<JointConfig> configs;
  /// Densified tip targets the configs were solved for.
  std::vector<geom::RigidTransform> targets;
  /// Index of the first waypoint that failed (IK) or jumped (discontinuity).
  int failed_waypoint = -1;
  double final_error = 0.0;
};

/// Solves the chain along an object path. Tip targets are object poses
/// composed with the inverse grasp transform; each waypoint is seeded with
/// the previous solution so the chain tracks one branch. A per-joint jump
/// above the step bound is reported as a discontinuity, never smoothed over.
JointPathResult object_path_to_joint_path(const planner::ObjectPath& path,
                                          const geom::RigidTransform& grasp,
                                          const KinematicChain& chain,
                                          const JointConfig& first_seed,
                                          const JointPathConfig& config = {});

/// Post-hoc arm clearance audit: places a box of the given radius along every
/// link (consecutive joint origins, then the tip) and tests each config
/// against the scene obstacles. Returns the first colliding config index.
/// The planning pipeline itself assumes the arm stays clear; this check makes
/// that assumption auditable.
std::optional<int> first_arm_collision(const KinematicChain& chain,
                                       const std::vector<JointConfig>& configs,
                                       const geom::Scene& scene,
                                       double link_radius = 0.04);

/// Writes one row per config, angles in radians with 6 decimals.
void write_joint_path_csv(const std::vector<JointConfig>& configs,
                          const KinematicChain& chain, const std::string& filename);

}  // namespace demoplan::kin
