#pragma once

#include <random>

#include "demoplan/geom/scene.hpp"
#include "demoplan/geom/transform.hpp"
#include "demoplan/planner/config.hpp"

namespace demoplan::planner {

struct RepairResult {
  bool success = false;
  geom::RigidTransform pose;
  int samples_drawn = 0;
  /// Radius of the shell the returned pose was found in (composite units);
  /// the last radius tried on failure.
  double shell_radius = 0.0;
};

/// Replaces an in-collision pose with the nearest collision-free pose found
/// by sampling composite-metric balls of growing radius around it. The sample
/// budget is split evenly across the radius schedule. A collision-free input
/// is returned unchanged without drawing samples.
RepairResult repair_key_pose(const geom::RigidTransform& pose,
                             const geom::Scene& scene, const PlannerConfig& config,
                             std::mt19937_64& rng);

/// Random perturbation of `pose` within the composite-metric ball of the
/// given radius: the translation distance plus weighted rotation angle of the
/// result from `pose` is at most `radius`.
geom::RigidTransform perturb_pose(const geom::RigidTransform& pose, double radius,
                                  double rotation_weight, std::mt19937_64& rng);

}  // namespace demoplan::planner
