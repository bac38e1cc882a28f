#include "demoplan/planner/repair.hpp"

#include <cmath>
#include <limits>

#include "demoplan/planner/metric.hpp"

namespace demoplan::planner {

geom::RigidTransform perturb_pose(const geom::RigidTransform& pose, double radius,
                                  double rotation_weight, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // Split the composite budget between translation and rotation, then stay
  // strictly inside each share so the combined distance cannot exceed radius.
  const double split = unit(rng);
  const double t_budget = radius * split;
  const double angle_budget = radius * (1.0 - split) / rotation_weight;

  Eigen::Vector3d dir(gauss(rng), gauss(rng), gauss(rng));
  if (dir.norm() < 1e-12) dir = Eigen::Vector3d::UnitX();
  dir.normalize();
  const double t_mag = t_budget * std::cbrt(unit(rng));

  Eigen::Vector3d axis(gauss(rng), gauss(rng), gauss(rng));
  if (axis.norm() < 1e-12) axis = Eigen::Vector3d::UnitZ();
  axis.normalize();
  const double angle = angle_budget * unit(rng);

  geom::RigidTransform out;
  out.rotation = Eigen::Quaterniond(Eigen::AngleAxisd(angle, axis)) * pose.rotation;
  out.rotation.normalize();
  out.translation = pose.translation + t_mag * dir;
  return out;
}

RepairResult repair_key_pose(const geom::RigidTransform& pose,
                             const geom::Scene& scene, const PlannerConfig& config,
                             std::mt19937_64& rng) {
  RepairResult result;
  if (!geom::pose_in_collision(pose, scene)) {
    result.success = true;
    result.pose = pose;
    return result;
  }

  const auto& schedule = config.repair_radius_schedule;
  const int per_shell =
      std::max(1, config.repair_samples_max / static_cast<int>(schedule.size()));

  for (double radius : schedule) {
    result.shell_radius = radius;
    geom::RigidTransform best;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int k = 0; k < per_shell && result.samples_drawn < config.repair_samples_max;
         ++k) {
      const geom::RigidTransform candidate =
          perturb_pose(pose, radius, config.rotation_weight, rng);
      ++result.samples_drawn;
      if (!geom::pose_in_collision(candidate, scene)) {
        const double d = composite_distance(pose, candidate, config.rotation_weight);
        if (d < best_dist) {
          best_dist = d;
          best = candidate;
        }
      }
    }
    if (best_dist < std::numeric_limits<double>::infinity()) {
      result.success = true;
      result.pose = best;
      return result;
    }
  }
  result.pose = pose;
  return result;
}

}  // namespace demoplan::planner
