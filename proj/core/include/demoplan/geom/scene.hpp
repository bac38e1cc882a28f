#pragma once

#include <string>
#include <vector>

#include "demoplan/geom/collision.hpp"
#include "demoplan/geom/mesh.hpp"
#include "demoplan/geom/transform.hpp"

namespace demoplan::geom {

/// A fixed obstacle arrangement plus the manipulated object's mesh. Obstacle
/// poses are frozen at construction; the whole scene is safe to share
/// read-only between planner workers.
class Scene {
 public:
  struct Obstacle {
    CollisionIndex index;
    RigidTransform pose;
  };

  Scene(TriMesh moving_object, std::vector<std::pair<TriMesh, RigidTransform>> obstacles,
        std::string frame_tag = "z_up");

  const CollisionIndex& object_index() const { return object_index_; }
  const std::vector<Obstacle>& obstacles() const { return obstacles_; }
  const std::string& frame_tag() const { return frame_tag_; }

  /// World-frame box enclosing all posed obstacles.
  Aabb obstacle_bounds() const { return obstacle_bounds_; }

  /// Largest extent of the moving object (local-frame AABB diagonal).
  double object_diameter() const { return object_diameter_; }

 private:
  CollisionIndex object_index_;
  std::vector<Obstacle> obstacles_;
  Aabb obstacle_bounds_;
  double object_diameter_ = 0.0;
  std::string frame_tag_;
};

/// True iff the moving object at object_pose intersects any fixed obstacle.
bool pose_in_collision(const RigidTransform& object_pose, const Scene& scene);

/// Same verdict computed with the all-pairs reference test instead of the
/// bounding volume hierarchy.
bool pose_in_collision_exhaustive(const RigidTransform& object_pose,
                                  const Scene& scene);

}  // namespace demoplan::geom
