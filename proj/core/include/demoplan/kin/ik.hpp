#pragma once

#include "demoplan/kin/chain.hpp"

namespace demoplan::kin {

struct IkConfig {
  int max_iterations = 500;
  /// Damping factor of the damped least squares update.
  double damping = 0.01;
  /// Convergence threshold on the composite error (meters plus weighted
  /// radians).
  double tolerance = 1e-4;
  double rotation_weight = 0.1;
  /// Per-iteration cap on any single joint increment, radians.
  double max_joint_step = 0.5;
  /// Stop early when this many iterations pass without measurable progress.
  int stall_iterations = 25;
  double stall_min_improvement = 1e-12;
};

struct IkResult {
  bool success = false;
  JointConfig q;
  int iterations = 0;
  /// Composite error at the returned configuration.
  double error = 0.0;
};

/// Position error stacked over orientation error (rotation vector carrying
/// current onto target), both in the world frame.
Eigen::Matrix<double, 6, 1> pose_error(const geom::RigidTransform& current,
                                       const geom::RigidTransform& target);

double composite_error(const geom::RigidTransform& current,
                       const geom::RigidTransform& target, double rotation_weight);

/// Damped least squares inverse kinematics from a seed configuration. Joint
/// limits are enforced by clamping after every update. The result carries the
/// best configuration reached even on failure.
IkResult inverse_kinematics(const KinematicChain& chain,
                            const geom::RigidTransform& target,
                            const JointConfig& seed, const IkConfig& config = {});

/// Solves from the given seed first and, on failure, retries from a fixed
/// sequence of limit-range samples (deterministic). Intended for the first
/// waypoint of a path, where no tracking seed exists yet.
IkResult inverse_kinematics_scan(const KinematicChain& chain,
                                 const geom::RigidTransform& target,
                                 const JointConfig& seed,
                                 const IkConfig& config = {},
                                 int scan_attempts = 64);

}  // namespace demoplan::kin
