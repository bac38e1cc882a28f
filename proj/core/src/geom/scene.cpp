#include "demoplan/geom/scene.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace demoplan::geom {

namespace {

TriMesh cleaned(TriMesh mesh) {
  validate_mesh(mesh);
  remove_degenerate_triangles(mesh);
  return mesh;
}

}  // namespace

Scene::Scene(TriMesh moving_object,
             std::vector<std::pair<TriMesh, RigidTransform>> obstacles,
             std::string frame_tag)
    : object_index_(cleaned(std::move(moving_object))),
      frame_tag_(std::move(frame_tag)) {
  if (obstacles.empty()) {
    // An empty scene is legal (free-space planning); bounds collapse to the
    // origin and the sampler falls back to start/goal-derived bounds.
    obstacle_bounds_ = Aabb{};
  } else {
    constexpr double inf = std::numeric_limits<double>::infinity();
    obstacle_bounds_.lo.setConstant(inf);
    obstacle_bounds_.hi.setConstant(-inf);
  }
  obstacles_.reserve(obstacles.size());
  for (auto& [mesh, pose] : obstacles) {
    TriMesh clean = cleaned(std::move(mesh));
    const Aabb world_box = posed_aabb(clean, pose);
    obstacle_bounds_.lo = obstacle_bounds_.lo.cwiseMin(world_box.lo);
    obstacle_bounds_.hi = obstacle_bounds_.hi.cwiseMax(world_box.hi);
    obstacles_.push_back(Obstacle{CollisionIndex(std::move(clean)), pose});
  }
  object_diameter_ = mesh_aabb(object_index_.mesh()).diagonal();
}

bool pose_in_collision(const RigidTransform& object_pose, const Scene& scene) {
  for (const auto& obstacle : scene.obstacles()) {
    if (check_collision(scene.object_index(), object_pose, obstacle.index,
                        obstacle.pose)
            .intersecting) {
      return true;
    }
  }
  return false;
}

bool pose_in_collision_exhaustive(const RigidTransform& object_pose,
                                  const Scene& scene) {
  for (const auto& obstacle : scene.obstacles()) {
    if (check_collision_exhaustive(scene.object_index().mesh(), object_pose,
                                   obstacle.index.mesh(), obstacle.pose)) {
      return true;
    }
  }
  return false;
}

}  // namespace demoplan::geom
