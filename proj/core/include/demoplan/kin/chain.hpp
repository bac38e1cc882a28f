#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "demoplan/geom/transform.hpp"

namespace demoplan::kin {

/// Revolute joint: fixed offset from the previous joint frame, then a
/// rotation about `axis` by the joint value, bounded by [lower, upper].
struct Joint {
  std::string name;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
  geom::RigidTransform origin;
  double lower = -3.141592653589793;
  double upper = 3.141592653589793;
};

using JointConfig = Eigen::VectorXd;

/// Serial chain rooted at a fixed base. The first joint is the waist; the
/// fixed tip offset carries the last joint frame to the gripper tip.
struct KinematicChain {
  geom::RigidTransform base;
  std::vector<Joint> joints;
  geom::RigidTransform tip_offset;

  int dof() const { return static_cast<int>(joints.size()); }

  /// Throws std::runtime_error on empty chains, zero axes or inverted limits.
  /// Normalizes joint axes in place.
  void validate();
};

bool within_limits(const KinematicChain& chain, const JointConfig& q, double slack = 0.0);
JointConfig clamp_to_limits(const KinematicChain& chain, const JointConfig& q);

/// Gripper tip pose for a joint configuration. Throws on size mismatch.
geom::RigidTransform forward_kinematics(const KinematicChain& chain,
                                        const JointConfig& q);

/// Geometric Jacobian at the tip: rows stack linear then angular velocity,
/// one column per joint.
Eigen::Matrix<double, 6, Eigen::Dynamic> geometric_jacobian(const KinematicChain& chain,
                                                            const JointConfig& q);

}  // namespace demoplan::kin
