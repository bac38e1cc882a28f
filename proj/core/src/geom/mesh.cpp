#include "demoplan/geom/mesh.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace demoplan::geom {

double triangle_area(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                     const Eigen::Vector3d& c) {
  return 0.5 * (b - a).cross(c - a).norm();
}

void validate_mesh(const TriMesh& mesh) {
  const int n = static_cast<int>(mesh.vertices.size());
  for (const auto& tri : mesh.triangles) {
    for (int idx : tri) {
      if (idx < 0 || idx >= n) {
        throw std::runtime_error("mesh triangle index out of range: " +
                                 std::to_string(idx));
      }
    }
  }
}

int remove_degenerate_triangles(TriMesh& mesh, double min_area) {
  const auto before = mesh.triangles.size();
  std::erase_if(mesh.triangles, [&](const std::array<int, 3>& tri) {
    return triangle_area(mesh.vertices[tri[0]], mesh.vertices[tri[1]],
                         mesh.vertices[tri[2]]) < min_area;
  });
  return static_cast<int>(before - mesh.triangles.size());
}

Aabb mesh_aabb(const TriMesh& mesh) {
  Aabb box;
  constexpr double inf = std::numeric_limits<double>::infinity();
  box.lo.setConstant(inf);
  box.hi.setConstant(-inf);
  for (const auto& v : mesh.vertices) {
    box.expand(v);
  }
  return box;
}

Aabb posed_aabb(const TriMesh& mesh, const RigidTransform& pose) {
  Aabb box;
  constexpr double inf = std::numeric_limits<double>::infinity();
  box.lo.setConstant(inf);
  box.hi.setConstant(-inf);
  for (const auto& v : mesh.vertices) {
    box.expand(pose.apply(v));
  }
  return box;
}

TriMesh make_box(const Eigen::Vector3d& full_extents) {
  TriMesh mesh;
  append_box(mesh, full_extents, RigidTransform::Identity());
  return mesh;
}

void append_box(TriMesh& mesh, const Eigen::Vector3d& full_extents,
                const RigidTransform& pose) {
  const Eigen::Vector3d h = 0.5 * full_extents;
  const int base = static_cast<int>(mesh.vertices.size());
  for (int i = 0; i < 8; ++i) {
    const Eigen::Vector3d corner((i & 1) ? h.x() : -h.x(),
                                 (i & 2) ? h.y() : -h.y(),
                                 (i & 4) ? h.z() : -h.z());
    mesh.vertices.push_back(pose.apply(corner));
  }
  // Two triangles per face, outward winding.
  static constexpr int kFaces[12][3] = {
      {0, 2, 3}, {0, 3, 1},  // -z
      {4, 5, 7}, {4, 7, 6},  // +z
      {0, 1, 5}, {0, 5, 4},  // -y
      {2, 6, 7}, {2, 7, 3},  // +y
      {0, 4, 6}, {0, 6, 2},  // -x
      {1, 3, 7}, {1, 7, 5},  // +x
  };
  for (const auto& f : kFaces) {
    mesh.triangles.push_back({base + f[0], base + f[1], base + f[2]});
  }
}

}  // namespace demoplan::geom
