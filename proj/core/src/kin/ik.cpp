#include "demoplan/kin/ik.hpp"

#include <cmath>
#include <random>

namespace demoplan::kin {

Eigen::Matrix<double, 6, 1> pose_error(const geom::RigidTransform& current,
                                       const geom::RigidTransform& target) {
  Eigen::Matrix<double, 6, 1> err;
  err.head<3>() = target.translation - current.translation;
  const Eigen::Quaterniond delta = target.rotation * current.rotation.conjugate();
  const Eigen::AngleAxisd aa(delta.normalized());
  err.tail<3>() = aa.angle() * aa.axis();
  return err;
}

double composite_error(const geom::RigidTransform& current,
                       const geom::RigidTransform& target, double rotation_weight) {
  const Eigen::Matrix<double, 6, 1> err = pose_error(current, target);
  return err.head<3>().norm() + rotation_weight * err.tail<3>().norm();
}

IkResult inverse_kinematics(const KinematicChain& chain,
                            const geom::RigidTransform& target,
                            const JointConfig& seed, const IkConfig& config) {
  IkResult result;
  result.q = clamp_to_limits(chain, seed);

  double best_error = composite_error(forward_kinematics(chain, result.q), target,
                                      config.rotation_weight);
  JointConfig best_q = result.q;
  int stalled = 0;

  for (int iter = 0; iter < config.max_iterations; ++iter) {
    if (best_error <= config.tolerance) break;

    const geom::RigidTransform current = forward_kinematics(chain, result.q);
    const Eigen::Matrix<double, 6, 1> err = pose_error(current, target);
    const Eigen::Matrix<double, 6, Eigen::Dynamic> jac =
        geometric_jacobian(chain, result.q);

    const Eigen::Matrix<double, 6, 6> jjt =
        jac * jac.transpose() +
        config.damping * config.damping * Eigen::Matrix<double, 6, 6>::Identity();
    Eigen::VectorXd dq = jac.transpose() * jjt.ldlt().solve(err);

    const double biggest = dq.cwiseAbs().maxCoeff();
    if (biggest > config.max_joint_step) {
      dq *= config.max_joint_step / biggest;
    }
    result.q = clamp_to_limits(chain, result.q + dq);
    result.iterations = iter + 1;

    const double error = composite_error(forward_kinematics(chain, result.q), target,
                                         config.rotation_weight);
    if (error < best_error - config.stall_min_improvement) {
      stalled = 0;
    } else {
      ++stalled;
      if (stalled >= config.stall_iterations) {
        break;
      }
    }
    if (error < best_error) {
      best_error = error;
      best_q = result.q;
    }
  }

  result.q = best_q;
  result.error = best_error;
  result.success = best_error <= config.tolerance;
  return result;
}

IkResult inverse_kinematics_scan(const KinematicChain& chain,
                                 const geom::RigidTransform& target,
                                 const JointConfig& seed, const IkConfig& config,
                                 int scan_attempts) {
  IkResult best = inverse_kinematics(chain, target, seed, config);
  if (best.success) {
    return best;
  }
  std::mt19937_64 rng(0x1c2d3e4f);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < scan_attempts; ++attempt) {
    JointConfig q(chain.dof());
    for (int i = 0; i < chain.dof(); ++i) {
      const Joint& joint = chain.joints[i];
      q[i] = joint.lower + unit(rng) * (joint.upper - joint.lower);
    }
    const IkResult trial = inverse_kinematics(chain, target, q, config);
    if (trial.success) {
      return trial;
    }
    if (trial.error < best.error) {
      best = trial;
    }
  }
  return best;
}

}  // namespace demoplan::kin
