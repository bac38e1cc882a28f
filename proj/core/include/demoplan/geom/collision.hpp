#pragma once

#include <vector>

#include "demoplan/geom/mesh.hpp"
#include "demoplan/geom/transform.hpp"

namespace demoplan::geom {

/// Exact triangle-triangle intersection predicate. Boundary contact (shared
/// point, edge touching a face) counts as intersecting.
bool tri_tri_intersect(const Eigen::Vector3d& v0, const Eigen::Vector3d& v1,
                       const Eigen::Vector3d& v2, const Eigen::Vector3d& u0,
                       const Eigen::Vector3d& u1, const Eigen::Vector3d& u2);

struct CollisionReport {
  bool intersecting = false;
  /// Witness triangle indices into each mesh's triangle list; -1 when not
  /// intersecting.
  int triangle_a = -1;
  int triangle_b = -1;
};

/// Axis-aligned bounding volume hierarchy over a mesh's triangles. Immutable
/// after construction and safe for concurrent read-only queries.
class CollisionIndex {
 public:
  struct Node {
    Aabb box;
    int left = -1;
    int right = -1;
    int begin = 0;  // leaf triangle range into triangle_order()
    int end = 0;

    bool is_leaf() const { return left < 0; }
  };

  /// Throws std::runtime_error for a mesh with no triangles.
  explicit CollisionIndex(TriMesh mesh);

  const TriMesh& mesh() const { return mesh_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<int>& triangle_order() const { return order_; }
  const Aabb& root_box() const { return nodes_.front().box; }

 private:
  int build_node(int begin, int end);

  TriMesh mesh_;
  std::vector<Node> nodes_;
  std::vector<int> order_;
  std::vector<Aabb> tri_boxes_;
  std::vector<Eigen::Vector3d> centroids_;
};

/// BVH-accelerated intersection test between two posed meshes. Results are
/// identical to exhaustively testing every triangle pair with
/// tri_tri_intersect.
CollisionReport check_collision(const CollisionIndex& a, const RigidTransform& pose_a,
                                const CollisionIndex& b, const RigidTransform& pose_b);

/// Reference variant that tests every triangle pair directly, with no
/// hierarchy involved. Slow; used to revalidate persisted paths and to
/// cross-check the indexed traversal.
bool check_collision_exhaustive(const TriMesh& a, const RigidTransform& pose_a,
                                const TriMesh& b, const RigidTransform& pose_b);

}  // namespace demoplan::geom
