#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "demoplan/geom/transform.hpp"

namespace demoplan::geom {

/// Triangle soup in its own local frame, units meters. Indices are 0-based.
struct TriMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 3>> triangles;

  bool empty() const { return triangles.empty(); }
};

struct Aabb {
  Eigen::Vector3d lo{0.0, 0.0, 0.0};
  Eigen::Vector3d hi{0.0, 0.0, 0.0};

  void expand(const Eigen::Vector3d& p) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }

  Eigen::Vector3d center() const { return 0.5 * (lo + hi); }
  Eigen::Vector3d half_extent() const { return 0.5 * (hi - lo); }
  double diagonal() const { return (hi - lo).norm(); }

  bool contains(const Aabb& other) const {
    return (lo.array() <= other.lo.array()).all() &&
           (hi.array() >= other.hi.array()).all();
  }

  bool overlaps(const Aabb& other) const {
    return (lo.array() <= other.hi.array()).all() &&
           (hi.array() >= other.lo.array()).all();
  }
};

double triangle_area(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                     const Eigen::Vector3d& c);

/// Throws std::runtime_error when a triangle index is out of range.
void validate_mesh(const TriMesh& mesh);

/// Drops triangles with area below min_area. Vertices are left untouched.
/// Returns the number of removed triangles.
int remove_degenerate_triangles(TriMesh& mesh, double min_area = 1e-12);

Aabb mesh_aabb(const TriMesh& mesh);

/// Conservative world-frame box of a posed mesh (exact for triangle soups:
/// transforms every vertex).
Aabb posed_aabb(const TriMesh& mesh, const RigidTransform& pose);

/// Axis-aligned box mesh (12 triangles) centered at the origin.
TriMesh make_box(const Eigen::Vector3d& full_extents);

/// Appends a posed box to an existing mesh; used to assemble scene fixtures.
void append_box(TriMesh& mesh, const Eigen::Vector3d& full_extents,
                const RigidTransform& pose);

}  // namespace demoplan::geom
