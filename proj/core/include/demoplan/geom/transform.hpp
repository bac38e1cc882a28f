#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace demoplan::geom {

/// SE(3) rigid transform stored as a unit quaternion plus a translation in
/// meters. The quaternion is re-normalized on every construction and
/// composition, so consumers may assume unit norm.
struct RigidTransform {
  Eigen::Quaterniond rotation{1.0, 0.0, 0.0, 0.0};
  Eigen::Vector3d translation{0.0, 0.0, 0.0};

  RigidTransform() = default;

  RigidTransform(const Eigen::Quaterniond& q, const Eigen::Vector3d& t)
      : rotation(q.normalized()), translation(t) {}

  static RigidTransform Identity() { return RigidTransform{}; }

  /// Maps a point expressed in this transform's child frame into the parent.
  Eigen::Vector3d apply(const Eigen::Vector3d& p) const {
    return rotation * p + translation;
  }

  Eigen::Matrix4d matrix() const;
};

/// Composition a * b: maps a point first through b, then through a.
RigidTransform compose(const RigidTransform& a, const RigidTransform& b);

inline RigidTransform operator*(const RigidTransform& a, const RigidTransform& b) {
  return compose(a, b);
}

RigidTransform invert(const RigidTransform& t);

/// Linear translation interpolation plus shortest-arc slerp, s in [0,1].
RigidTransform interpolate(const RigidTransform& a, const RigidTransform& b, double s);

/// Geodesic rotation angle between the two orientations, in [0, pi].
double rotation_angle_between(const RigidTransform& a, const RigidTransform& b);

double translation_distance(const RigidTransform& a, const RigidTransform& b);

/// True when t is within tol of the identity in both rotation angle and
/// translation norm.
bool is_near_identity(const RigidTransform& t, double tol = 1e-9);

/// 6-parameter pose: position in meters, fixed-axis (extrinsic) roll/pitch/yaw
/// in radians. Rotation convention: Rz(yaw) * Ry(pitch) * Rx(roll).
struct PoseVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double roll = 0.0;
  double pitch = 0.0;
  double yaw = 0.0;
};

RigidTransform pose_vector_to_transform(const PoseVector& p);

struct PoseVectorResult {
  PoseVector pose;
  /// Set when |pitch| is at the gimbal singularity; roll is forced to zero.
  bool degenerate = false;
};

PoseVectorResult transform_to_pose_vector(const RigidTransform& t);

}  // namespace demoplan::geom
