#include "demoplan/planner/path.hpp"

#include <cmath>
#include <stdexcept>

#include "demoplan/planner/metric.hpp"

namespace demoplan::planner {

std::string waypoint_tag_name(WaypointTag tag, int key_rank) {
  switch (tag) {
    case WaypointTag::Start:
      return "start";
    case WaypointTag::Goal:
      return "goal";
    case WaypointTag::KeyPose:
      return "key_pose(" + std::to_string(key_rank) + ")";
    case WaypointTag::Repaired:
      return "repaired(" + std::to_string(key_rank) + ")";
    case WaypointTag::Sampled:
      return "sampled";
  }
  return "sampled";
}

WaypointTag waypoint_tag_from_name(const std::string& name, int* key_rank) {
  if (key_rank) *key_rank = 0;
  if (name == "start") return WaypointTag::Start;
  if (name == "goal") return WaypointTag::Goal;
  if (name == "sampled") return WaypointTag::Sampled;
  const auto parse_rank = [&](const std::string& prefix) {
    if (name.size() > prefix.size() + 1 && name.compare(0, prefix.size(), prefix) == 0 &&
        name.back() == ')') {
      const std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
      if (key_rank) *key_rank = std::stoi(digits);
      return true;
    }
    return false;
  };
  if (parse_rank("key_pose(")) return WaypointTag::KeyPose;
  if (parse_rank("repaired(")) return WaypointTag::Repaired;
  throw std::runtime_error("unknown waypoint tag: " + name);
}

double ObjectPath::length(double rotation_weight) const {
  double total = 0.0;
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    total += composite_distance(waypoints[i - 1].pose, waypoints[i].pose,
                                rotation_weight);
  }
  return total;
}

namespace {

bool colliding(const geom::RigidTransform& pose, const geom::Scene& scene,
               CollisionChecker checker) {
  return checker == CollisionChecker::Indexed
             ? geom::pose_in_collision(pose, scene)
             : geom::pose_in_collision_exhaustive(pose, scene);
}

}  // namespace

PathValidation validate_path(const ObjectPath& path, const geom::Scene& scene,
                             double resolution, double rotation_weight,
                             CollisionChecker checker) {
  PathValidation result;
  if (path.waypoints.empty()) {
    return result;
  }
  if (colliding(path.waypoints.front().pose, scene, checker)) {
    result.valid = false;
    result.segment = 0;
    result.param = 0.0;
    result.pose = path.waypoints.front().pose;
    return result;
  }
  for (std::size_t i = 1; i < path.waypoints.size(); ++i) {
    const geom::RigidTransform& a = path.waypoints[i - 1].pose;
    const geom::RigidTransform& b = path.waypoints[i].pose;
    const double dist = composite_distance(a, b, rotation_weight);
    const int steps = std::max(1, static_cast<int>(std::ceil(dist / resolution)));
    for (int k = 1; k <= steps; ++k) {
      const double s = static_cast<double>(k) / steps;
      const geom::RigidTransform pose = (k == steps) ? b : geom::interpolate(a, b, s);
      if (colliding(pose, scene, checker)) {
        result.valid = false;
        result.segment = static_cast<int>(i) - 1;
        result.param = s;
        result.pose = pose;
        return result;
      }
    }
  }
  return result;
}

std::vector<geom::RigidTransform> densify(const geom::RigidTransform& a,
                                          const geom::RigidTransform& b,
                                          double max_step,
                                          double rotation_weight) {
  std::vector<geom::RigidTransform> out;
  const double dist = composite_distance(a, b, rotation_weight);
  const int steps = std::max(1, static_cast<int>(std::ceil(dist / max_step)));
  out.reserve(steps + 1);
  out.push_back(a);
  for (int k = 1; k < steps; ++k) {
    out.push_back(geom::interpolate(a, b, static_cast<double>(k) / steps));
  }
  out.push_back(b);
  return out;
}

}  // namespace demoplan::planner
