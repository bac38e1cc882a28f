#pragma once

#include <string>
#include <vector>

#include "demoplan/geom/scene.hpp"
#include "demoplan/geom/transform.hpp"

namespace demoplan::planner {

/// Where a waypoint came from. KeyPose and Repaired carry the candidate rank
/// in Waypoint::key_rank.
enum class WaypointTag { Start, Goal, KeyPose, Repaired, Sampled };

std::string waypoint_tag_name(WaypointTag tag, int key_rank);
WaypointTag waypoint_tag_from_name(const std::string& name, int* key_rank);

struct Waypoint {
  geom::RigidTransform pose;
  WaypointTag tag = WaypointTag::Sampled;
  int key_rank = 0;
};

/// Object poses from start to goal; consecutive waypoints are no farther
/// apart than the planner step in the composite metric.
struct ObjectPath {
  std::vector<Waypoint> waypoints;

  bool empty() const { return waypoints.empty(); }
  double length(double rotation_weight) const;
};

/// First constraint violation along a path, if any. `segment` indexes the
/// waypoint pair (segment i runs from waypoint i to i+1) and `param` the
/// interpolation parameter at which the violation was found.
struct PathValidation {
  bool valid = true;
  int segment = -1;
  double param = 0.0;
  geom::RigidTransform pose;
};

enum class CollisionChecker { Indexed, Exhaustive };

/// Checks every waypoint and intermediate poses spaced at most `resolution`
/// apart (composite metric) against the scene. Stops at the first violation.
PathValidation validate_path(const ObjectPath& path, const geom::Scene& scene,
                             double resolution, double rotation_weight,
                             CollisionChecker checker = CollisionChecker::Indexed);

/// Poses from a to b spaced at most `max_step` apart, endpoints included and
/// reproduced exactly.
std::vector<geom::RigidTransform> densify(const geom::RigidTransform& a,
                                          const geom::RigidTransform& b,
                                          double max_step,
                                          double rotation_weight);

}  // namespace demoplan::planner
