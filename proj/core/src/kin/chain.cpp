#include "demoplan/kin/chain.hpp"

#include <stdexcept>

namespace demoplan::kin {

void KinematicChain::validate() {
  if (joints.empty()) {
    throw std::runtime_error("kinematic chain has no joints");
  }
  for (auto& joint : joints) {
    const double norm = joint.axis.norm();
    if (norm < 1e-12) {
      throw std::runtime_error("joint '" + joint.name + "' has a zero axis");
    }
    joint.axis /= norm;
    if (!(joint.lower < joint.upper)) {
      throw std::runtime_error("joint '" + joint.name + "' has inverted limits");
    }
  }
}

namespace {

void require_size(const KinematicChain& chain, const JointConfig& q) {
  if (q.size() != chain.dof()) {
    throw std::runtime_error("joint vector size " + std::to_string(q.size()) +
                             " does not match chain dof " +
                             std::to_string(chain.dof()));
  }
}

}  // namespace

bool within_limits(const KinematicChain& chain, const JointConfig& q, double slack) {
  require_size(chain, q);
  for (int i = 0; i < chain.dof(); ++i) {
    if (q[i] < chain.joints[i].lower - slack || q[i] > chain.joints[i].upper + slack) {
      return false;
    }
  }
  return true;
}

JointConfig clamp_to_limits(const KinematicChain& chain, const JointConfig& q) {
  require_size(chain, q);
  JointConfig out = q;
  for (int i = 0; i < chain.dof(); ++i) {
    out[i] = std::min(std::max(out[i], chain.joints[i].lower), chain.joints[i].upper);
  }
  return out;
}

geom::RigidTransform forward_kinematics(const KinematicChain& chain,
                                        const JointConfig& q) {
  require_size(chain, q);
  geom::RigidTransform t = chain.base;
  for (int i = 0; i < chain.dof(); ++i) {
    const Joint& joint = chain.joints[i];
    t = t * joint.origin;
    geom::RigidTransform spin;
    spin.rotation = Eigen::Quaterniond(Eigen::AngleAxisd(q[i], joint.axis));
    spin.translation.setZero();
    t = t * spin;
  }
  return t * chain.tip_offset;
}

Eigen::Matrix<double, 6, Eigen::Dynamic> geometric_jacobian(const KinematicChain& chain,
                                                            const JointConfig& q) {
  require_size(chain, q);
  const int n = chain.dof();
  Eigen::Matrix<double, 6, Eigen::Dynamic> jac(6, n);

  std::vector<Eigen::Vector3d> axes(n);
  std::vector<Eigen::Vector3d> origins(n);
  geom::RigidTransform t = chain.base;
  for (int i = 0; i < n; ++i) {
    const Joint& joint = chain.joints[i];
    t = t * joint.origin;
    axes[i] = t.rotation * joint.axis;
    origins[i] = t.translation;
    geom::RigidTransform spin;
    spin.rotation = Eigen::Quaterniond(Eigen::AngleAxisd(q[i], joint.axis));
    spin.translation.setZero();
    t = t * spin;
  }
  const Eigen::Vector3d tip = (t * chain.tip_offset).translation;

  for (int i = 0; i < n; ++i) {
    jac.block<3, 1>(0, i) = axes[i].cross(tip - origins[i]);
    jac.block<3, 1>(3, i) = axes[i];
  }
  return jac;
}

}  // namespace demoplan::kin
