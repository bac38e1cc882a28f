#include "demoplan/geom/transform.hpp"

#include <algorithm>
#include <cmath>

namespace demoplan::geom {

Eigen::Matrix4d RigidTransform::matrix() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.block<3, 3>(0, 0) = rotation.toRotationMatrix();
  m.block<3, 1>(0, 3) = translation;
  return m;
}

RigidTransform compose(const RigidTransform& a, const RigidTransform& b) {
  RigidTransform out;
  out.rotation = (a.rotation * b.rotation).normalized();
  out.translation = a.rotation * b.translation + a.translation;
  return out;
}

RigidTransform invert(const RigidTransform& t) {
  RigidTransform out;
  out.rotation = t.rotation.conjugate();
  out.translation = -(out.rotation * t.translation);
  return out;
}

RigidTransform interpolate(const RigidTransform& a, const RigidTransform& b, double s) {
  RigidTransform out;
  out.rotation = a.rotation.slerp(s, b.rotation).normalized();
  out.translation = (1.0 - s) * a.translation + s * b.translation;
  return out;
}

double rotation_angle_between(const RigidTransform& a, const RigidTransform& b) {
  const Eigen::Quaterniond rel = a.rotation.conjugate() * b.rotation;
  return 2.0 * std::atan2(rel.vec().norm(), std::abs(rel.w()));
}

double translation_distance(const RigidTransform& a, const RigidTransform& b) {
  return (a.translation - b.translation).norm();
}

bool is_near_identity(const RigidTransform& t, double tol) {
  return rotation_angle_between(t, RigidTransform::Identity()) <= tol &&
         t.translation.norm() <= tol;
}

RigidTransform pose_vector_to_transform(const PoseVector& p) {
  const Eigen::Quaterniond q = Eigen::AngleAxisd(p.yaw, Eigen::Vector3d::UnitZ()) *
                               Eigen::AngleAxisd(p.pitch, Eigen::Vector3d::UnitY()) *
                               Eigen::AngleAxisd(p.roll, Eigen::Vector3d::UnitX());
  return RigidTransform{q, Eigen::Vector3d(p.x, p.y, p.z)};
}

PoseVectorResult transform_to_pose_vector(const RigidTransform& t) {
  PoseVectorResult out;
  out.pose.x = t.translation.x();
  out.pose.y = t.translation.y();
  out.pose.z = t.translation.z();

  const Eigen::Matrix3d r = t.rotation.toRotationMatrix();
  // For R = Rz(Y) Ry(P) Rx(R): r(2,0) = -sin(P).
  const double sp = std::clamp(-r(2, 0), -1.0, 1.0);
  out.pose.pitch = std::asin(sp);

  constexpr double kGimbalEps = 1e-12;
  if (1.0 - std::abs(sp) < kGimbalEps) {
    // Gimbal lock: roll and yaw are coupled. Force roll to zero and fold the
    // remaining rotation into yaw.
    out.degenerate = true;
    out.pose.roll = 0.0;
    out.pose.yaw = std::atan2(-r(0, 1), r(1, 1));
  } else {
    out.pose.roll = std::atan2(r(2, 1), r(2, 2));
    out.pose.yaw = std::atan2(r(1, 0), r(0, 0));
  }
  return out;
}

}  // namespace demoplan::geom
