#include "demoplan/geom/collision.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace demoplan::geom {

namespace {

using Eigen::Vector3d;

// Coplanar branch of the triangle test: project onto the dominant-axis plane
// and run 2D segment/containment checks (Antonio's segment intersection gem).
bool edge_edge_2d(double ax, double ay, const Vector3d& v0, const Vector3d& u0,
                  const Vector3d& u1, int i0, int i1) {
  const double bx = u0[i0] - u1[i0];
  const double by = u0[i1] - u1[i1];
  const double cx = v0[i0] - u0[i0];
  const double cy = v0[i1] - u0[i1];
  const double f = ay * bx - ax * by;
  const double d = by * cx - bx * cy;
  if ((f > 0 && d >= 0 && d <= f) || (f < 0 && d <= 0 && d >= f)) {
    const double e = ax * cy - ay * cx;
    if (f > 0) {
      if (e >= 0 && e <= f) return true;
    } else {
      if (e <= 0 && e >= f) return true;
    }
  }
  return false;
}

bool edge_against_tri_edges(const Vector3d& v0, const Vector3d& v1,
                            const Vector3d& u0, const Vector3d& u1,
                            const Vector3d& u2, int i0, int i1) {
  const double ax = v1[i0] - v0[i0];
  const double ay = v1[i1] - v0[i1];
  return edge_edge_2d(ax, ay, v0, u0, u1, i0, i1) ||
         edge_edge_2d(ax, ay, v0, u1, u2, i0, i1) ||
         edge_edge_2d(ax, ay, v0, u2, u0, i0, i1);
}

bool point_in_tri_2d(const Vector3d& p, const Vector3d& u0, const Vector3d& u1,
                     const Vector3d& u2, int i0, int i1) {
  double a = u1[i1] - u0[i1];
  double b = -(u1[i0] - u0[i0]);
  double c = -a * u0[i0] - b * u0[i1];
  const double d0 = a * p[i0] + b * p[i1] + c;

  a = u2[i1] - u1[i1];
  b = -(u2[i0] - u1[i0]);
  c = -a * u1[i0] - b * u1[i1];
  const double d1 = a * p[i0] + b * p[i1] + c;

  a = u0[i1] - u2[i1];
  b = -(u0[i0] - u2[i0]);
  c = -a * u2[i0] - b * u2[i1];
  const double d2 = a * p[i0] + b * p[i1] + c;

  return d0 * d1 > 0.0 && d0 * d2 > 0.0;
}

bool coplanar_tri_tri(const Vector3d& n, const Vector3d& v0, const Vector3d& v1,
                      const Vector3d& v2, const Vector3d& u0, const Vector3d& u1,
                      const Vector3d& u2) {
  const Vector3d a = n.cwiseAbs();
  int i0, i1;
  if (a[0] > a[1]) {
    if (a[0] > a[2]) {
      i0 = 1;
      i1 = 2;
    } else {
      i0 = 0;
      i1 = 1;
    }
  } else {
    if (a[2] > a[1]) {
      i0 = 0;
      i1 = 1;
    } else {
      i0 = 0;
      i1 = 2;
    }
  }

  if (edge_against_tri_edges(v0, v1, u0, u1, u2, i0, i1)) return true;
  if (edge_against_tri_edges(v1, v2, u0, u1, u2, i0, i1)) return true;
  if (edge_against_tri_edges(v2, v0, u0, u1, u2, i0, i1)) return true;

  return point_in_tri_2d(v0, u0, u1, u2, i0, i1) ||
         point_in_tri_2d(u0, v0, v1, v2, i0, i1);
}

struct Interval {
  double a, b, c, x0, x1;
  bool coplanar = false;
};

// Interval of one triangle along the plane-intersection line, in the
// multiplied-out form of the no-division variant of Moller's test. x0 and x1
// always carry the same sign, so cross-multiplying preserves interval order.
Interval compute_interval(double vv0, double vv1, double vv2, double d0, double d1,
                          double d2, double d0d1, double d0d2) {
  Interval s;
  if (d0d1 > 0.0) {
    // d0 and d1 on the same side, d2 on the other side or on the plane.
    s = {vv2, (vv0 - vv2) * d2, (vv1 - vv2) * d2, d2 - d0, d2 - d1};
  } else if (d0d2 > 0.0) {
    s = {vv1, (vv0 - vv1) * d1, (vv2 - vv1) * d1, d1 - d0, d1 - d2};
  } else if (d1 * d2 > 0.0 || d0 != 0.0) {
    s = {vv0, (vv1 - vv0) * d0, (vv2 - vv0) * d0, d0 - d1, d0 - d2};
  } else if (d1 != 0.0) {
    s = {vv1, (vv0 - vv1) * d1, (vv2 - vv1) * d1, d1 - d0, d1 - d2};
  } else if (d2 != 0.0) {
    s = {vv2, (vv0 - vv2) * d2, (vv1 - vv2) * d2, d2 - d0, d2 - d1};
  } else {
    s.coplanar = true;
  }
  return s;
}

}  // namespace

bool tri_tri_intersect(const Vector3d& v0, const Vector3d& v1, const Vector3d& v2,
                       const Vector3d& u0, const Vector3d& u1, const Vector3d& u2) {
  // Plane of triangle V.
  const Vector3d n1 = (v1 - v0).cross(v2 - v0);
  const double d1 = -n1.dot(v0);
  const double du0 = n1.dot(u0) + d1;
  const double du1 = n1.dot(u1) + d1;
  const double du2 = n1.dot(u2) + d1;
  const double du0du1 = du0 * du1;
  const double du0du2 = du0 * du2;
  if (du0du1 > 0.0 && du0du2 > 0.0) {
    return false;  // all of U strictly on one side
  }

  // Plane of triangle U.
  const Vector3d n2 = (u1 - u0).cross(u2 - u0);
  const double d2 = -n2.dot(u0);
  const double dv0 = n2.dot(v0) + d2;
  const double dv1 = n2.dot(v1) + d2;
  const double dv2 = n2.dot(v2) + d2;
  const double dv0dv1 = dv0 * dv1;
  const double dv0dv2 = dv0 * dv2;
  if (dv0dv1 > 0.0 && dv0dv2 > 0.0) {
    return false;
  }

  // Dominant axis of the intersection line direction; projection onto that
  // axis is enough for the interval overlap test.
  const Vector3d dir = n1.cross(n2);
  int index = 0;
  double max_comp = std::abs(dir[0]);
  if (std::abs(dir[1]) > max_comp) {
    max_comp = std::abs(dir[1]);
    index = 1;
  }
  if (std::abs(dir[2]) > max_comp) {
    index = 2;
  }

  const Interval iv = compute_interval(v0[index], v1[index], v2[index], dv0, dv1,
                                       dv2, dv0dv1, dv0dv2);
  if (iv.coplanar) {
    return coplanar_tri_tri(n1, v0, v1, v2, u0, u1, u2);
  }
  const Interval iu = compute_interval(u0[index], u1[index], u2[index], du0, du1,
                                       du2, du0du1, du0du2);
  if (iu.coplanar) {
    return coplanar_tri_tri(n1, v0, v1, v2, u0, u1, u2);
  }

  const double xx = iv.x0 * iv.x1;
  const double yy = iu.x0 * iu.x1;
  const double xxyy = xx * yy;

  double isect1[2], isect2[2];
  double tmp = iv.a * xxyy;
  isect1[0] = tmp + iv.b * iv.x1 * yy;
  isect1[1] = tmp + iv.c * iv.x0 * yy;
  tmp = iu.a * xxyy;
  isect2[0] = tmp + iu.b * iu.x1 * xx;
  isect2[1] = tmp + iu.c * iu.x0 * xx;

  if (isect1[0] > isect1[1]) std::swap(isect1[0], isect1[1]);
  if (isect2[0] > isect2[1]) std::swap(isect2[0], isect2[1]);

  return !(isect1[1] < isect2[0] || isect2[1] < isect1[0]);
}

CollisionIndex::CollisionIndex(TriMesh mesh) : mesh_(std::move(mesh)) {
  if (mesh_.triangles.empty()) {
    throw std::runtime_error("cannot build a collision index over an empty mesh");
  }
  validate_mesh(mesh_);

  const int n = static_cast<int>(mesh_.triangles.size());
  tri_boxes_.resize(n);
  centroids_.resize(n);
  for (int i = 0; i < n; ++i) {
    const auto& t = mesh_.triangles[i];
    Aabb box;
    box.lo = mesh_.vertices[t[0]];
    box.hi = mesh_.vertices[t[0]];
    box.expand(mesh_.vertices[t[1]]);
    box.expand(mesh_.vertices[t[2]]);
    tri_boxes_[i] = box;
    centroids_[i] =
        (mesh_.vertices[t[0]] + mesh_.vertices[t[1]] + mesh_.vertices[t[2]]) / 3.0;
  }

  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
  nodes_.reserve(2 * n);
  build_node(0, n);
}

int CollisionIndex::build_node(int begin, int end) {
  const int node_index = static_cast<int>(nodes_.size());
  nodes_.emplace_back();

  Aabb box = tri_boxes_[order_[begin]];
  for (int i = begin + 1; i < end; ++i) {
    const Aabb& t = tri_boxes_[order_[i]];
    box.lo = box.lo.cwiseMin(t.lo);
    box.hi = box.hi.cwiseMax(t.hi);
  }
  nodes_[node_index].box = box;
  nodes_[node_index].begin = begin;
  nodes_[node_index].end = end;

  constexpr int kLeafSize = 4;
  if (end - begin <= kLeafSize) {
    return node_index;
  }

  // Median split along the longest axis of the centroid spread; ties resolved
  // by triangle index so the tree layout is reproducible.
  Aabb cbox;
  cbox.lo = centroids_[order_[begin]];
  cbox.hi = centroids_[order_[begin]];
  for (int i = begin + 1; i < end; ++i) {
    cbox.expand(centroids_[order_[i]]);
  }
  const Eigen::Vector3d spread = cbox.hi - cbox.lo;
  int axis = 0;
  if (spread[1] > spread[axis]) axis = 1;
  if (spread[2] > spread[axis]) axis = 2;

  const int mid = begin + (end - begin) / 2;
  std::sort(order_.begin() + begin, order_.begin() + end, [&](int lhs, int rhs) {
    const double cl = centroids_[lhs][axis];
    const double cr = centroids_[rhs][axis];
    return cl < cr || (cl == cr && lhs < rhs);
  });

  const int left = build_node(begin, mid);
  const int right = build_node(mid, end);
  nodes_[node_index].left = left;
  nodes_[node_index].right = right;
  return node_index;
}

namespace {

// Conservative axis-aligned enclosure of a box rigidly transformed by r.
Aabb transform_aabb(const Aabb& box, const Eigen::Matrix3d& rot_abs,
                    const RigidTransform& r) {
  const Eigen::Vector3d c = r.apply(box.center());
  const Eigen::Vector3d h =
      rot_abs * box.half_extent() + Eigen::Vector3d::Constant(1e-12);
  Aabb out;
  out.lo = c - h;
  out.hi = c + h;
  return out;
}

struct PairTraversal {
  const CollisionIndex& a;
  const CollisionIndex& b;
  RigidTransform b_to_a;
  Eigen::Matrix3d rot_abs;

  bool leaf_pair(const CollisionIndex::Node& na, const CollisionIndex::Node& nb,
                 CollisionReport& report) const {
    for (int i = na.begin; i < na.end; ++i) {
      const int tri_a = a.triangle_order()[i];
      const auto& ta = a.mesh().triangles[tri_a];
      const Eigen::Vector3d& a0 = a.mesh().vertices[ta[0]];
      const Eigen::Vector3d& a1 = a.mesh().vertices[ta[1]];
      const Eigen::Vector3d& a2 = a.mesh().vertices[ta[2]];
      for (int j = nb.begin; j < nb.end; ++j) {
        const int tri_b = b.triangle_order()[j];
        const auto& tb = b.mesh().triangles[tri_b];
        const Eigen::Vector3d b0 = b_to_a.apply(b.mesh().vertices[tb[0]]);
        const Eigen::Vector3d b1 = b_to_a.apply(b.mesh().vertices[tb[1]]);
        const Eigen::Vector3d b2 = b_to_a.apply(b.mesh().vertices[tb[2]]);
        if (tri_tri_intersect(a0, a1, a2, b0, b1, b2)) {
          report.intersecting = true;
          report.triangle_a = tri_a;
          report.triangle_b = tri_b;
          return true;
        }
      }
    }
    return false;
  }

  bool recurse(int ia, int ib, CollisionReport& report) const {
    const auto& na = a.nodes()[ia];
    const auto& nb = b.nodes()[ib];
    if (!na.box.overlaps(transform_aabb(nb.box, rot_abs, b_to_a))) {
      return false;
    }
    if (na.is_leaf() && nb.is_leaf()) {
      return leaf_pair(na, nb, report);
    }
    // Descend the larger box so the pair queue stays balanced.
    const bool descend_a =
        !na.is_leaf() &&
        (nb.is_leaf() || na.box.diagonal() >= nb.box.diagonal());
    if (descend_a) {
      return recurse(na.left, ib, report) || recurse(na.right, ib, report);
    }
    return recurse(ia, nb.left, report) || recurse(ia, nb.right, report);
  }
};

}  // namespace

CollisionReport check_collision(const CollisionIndex& a, const RigidTransform& pose_a,
                                const CollisionIndex& b, const RigidTransform& pose_b) {
  PairTraversal traversal{a, b, invert(pose_a) * pose_b, Eigen::Matrix3d::Zero()};
  traversal.rot_abs = traversal.b_to_a.rotation.toRotationMatrix().cwiseAbs();
  CollisionReport report;
  traversal.recurse(0, 0, report);
  return report;
}

bool check_collision_exhaustive(const TriMesh& a, const RigidTransform& pose_a,
                                const TriMesh& b, const RigidTransform& pose_b) {
  const RigidTransform b_to_a = invert(pose_a) * pose_b;
  std::vector<Vector3d> bv(b.vertices.size());
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    bv[i] = b_to_a.apply(b.vertices[i]);
  }
  for (const auto& ta : a.triangles) {
    for (const auto& tb : b.triangles) {
      if (tri_tri_intersect(a.vertices[ta[0]], a.vertices[ta[1]],
                            a.vertices[ta[2]], bv[tb[0]], bv[tb[1]], bv[tb[2]])) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace demoplan::geom
