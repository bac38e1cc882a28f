#pragma once

#include <chrono>
#include <random>
#include <vector>

#include "demoplan/geom/scene.hpp"
#include "demoplan/geom/transform.hpp"
#include "demoplan/planner/config.hpp"

namespace demoplan::planner {

/// Wall-clock budget for one planning call.
class Deadline {
 public:
  explicit Deadline(double seconds)
      : start_(std::chrono::steady_clock::now()), budget_(seconds) {}

  bool expired() const { return elapsed() >= budget_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }
  double budget() const { return budget_; }

 private:
  std::chrono::steady_clock::time_point start_;
  double budget_;
};

/// Position box the sampler draws translations from; orientations are drawn
/// uniformly over all rotations.
struct SamplingBounds {
  geom::Aabb position;
};

/// Obstacle bounds inflated by the object diameter, grown to cover the given
/// anchor poses with margin. Works for empty scenes too.
SamplingBounds derive_sampling_bounds(const geom::Scene& scene,
                                      const std::vector<geom::RigidTransform>& anchors);

enum class SegmentStatus { Success, Timeout, InfeasibleInput };

struct SegmentResult {
  SegmentStatus status = SegmentStatus::Timeout;
  /// On success: poses from start to goal, endpoints bit-exact, consecutive
  /// poses at most one composite step apart, all collision-free at the
  /// validation resolution.
  std::vector<geom::RigidTransform> waypoints;
  int extensions = 0;
  double elapsed_s = 0.0;
};

/// Bidirectional tree search between two poses with dynamic-domain sample
/// rejection and random shortcut smoothing. Fails with Timeout when either
/// the deadline or the extension budget runs out, and with InfeasibleInput
/// when an endpoint is already in collision.
SegmentResult plan_segment(const geom::RigidTransform& start,
                           const geom::RigidTransform& goal,
                           const geom::Scene& scene, const PlannerConfig& config,
                           const SamplingBounds& bounds, const Deadline& deadline,
                           std::mt19937_64& rng);

/// Convenience overload: bounds derived from the scene and endpoints, RNG
/// seeded from the config, deadline of t_e.
SegmentResult plan_segment(const geom::RigidTransform& start,
                           const geom::RigidTransform& goal,
                           const geom::Scene& scene, const PlannerConfig& config);

/// Uniform random rotation (Shoemake's quaternion method).
Eigen::Quaterniond random_rotation(std::mt19937_64& rng);

/// Uniform random pose: translation in bounds, rotation uniform.
geom::RigidTransform random_pose(const SamplingBounds& bounds, std::mt19937_64& rng);

/// True when every interpolated pose between a and b, spaced at most
/// `resolution` apart, is collision-free. The pose at a is not rechecked.
bool motion_valid(const geom::RigidTransform& a, const geom::RigidTransform& b,
                  const geom::Scene& scene, double resolution,
                  double rotation_weight);

}  // namespace demoplan::planner
