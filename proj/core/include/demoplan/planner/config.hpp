#pragma once

#include <cstdint>
#include <vector>

namespace demoplan::planner {

/// Tuning knobs for segment planning, key-pose repair and the guided loop.
/// Distances mix meters and radians through the composite metric
/// (meters + rotation_weight * radians).
struct PlannerConfig {
  /// Per planning attempt time threshold, seconds.
  double t_e = 5.0;

  /// Maximum extension per tree step: translation (m) and rotation (rad).
  double step_translation = 0.02;
  double step_rotation = 0.3;

  /// Meters per radian in the composite metric.
  double rotation_weight = 0.1;

  /// Probability of steering a tree toward the opposite tree's root.
  double goal_bias = 0.05;

  /// Insertion budget for the guided loop.
  int max_key_poses = 6;

  /// Composite radius for dynamic-domain sample rejection. Negative means
  /// auto (10x the composite step); 0 disables the restriction.
  double dynamic_domain_radius = -1.0;

  /// Composite spacing of collision checks along tree edges and paths.
  double validation_resolution = 0.01;

  std::uint64_t rng_seed = 0;

  /// Key-pose repair: total sample budget and the growing shell radii
  /// (composite units) the samples are spread over.
  int repair_samples_max = 2000;
  std::vector<double> repair_radius_schedule = {0.005, 0.01, 0.02, 0.05, 0.1};

  /// Extension budget per segment attempt. A segment that exhausts it counts
  /// as a failed attempt even before t_e elapses, mirroring the two failure
  /// conditions of the guided loop (no path found, or out of time).
  int max_extensions = 2000;

  /// Random shortcut passes after a segment is found.
  int smoothing_attempts = 200;

  double composite_step() const {
    return step_translation + rotation_weight * step_rotation;
  }

  double effective_dynamic_domain() const {
    return dynamic_domain_radius < 0.0 ? 10.0 * composite_step()
                                       : dynamic_domain_radius;
  }

  /// Throws std::runtime_error when an invariant is violated (t_e <= 0,
  /// goal_bias outside [0,1], non-positive steps, or a validation resolution
  /// coarser than the smallest step component).
  void validate() const;
};

}  // namespace demoplan::planner
