#include "demoplan/kin/joint_path.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace demoplan::kin {

const char* joint_path_status_name(JointPathStatus status) {
  switch (status) {
    case JointPathStatus::Success:
      return "success";
    case JointPathStatus::IkFailure:
      return "ik_failure";
    case JointPathStatus::Discontinuity:
      return "discontinuity";
  }
  return "unknown";
}

JointPathResult object_path_to_joint_path(const planner::ObjectPath& path,
                                          const geom::RigidTransform& grasp,
                                          const KinematicChain& chain,
                                          const JointConfig& first_seed,
                                          const JointPathConfig& config) {
  JointPathResult result;
  if (path.waypoints.empty()) {
    return result;
  }

  const geom::RigidTransform grasp_inv = geom::invert(grasp);
  std::vector<geom::RigidTransform> object_poses;
  object_poses.push_back(path.waypoints.front().pose);
  for (std::size_t i = 1; i < path.waypoints.size(); ++i) {
    if (config.densify_step > 0.0) {
      auto piece = planner::densify(path.waypoints[i - 1].pose, path.waypoints[i].pose,
                                    config.densify_step, config.rotation_weight);
      object_poses.insert(object_poses.end(), piece.begin() + 1, piece.end());
    } else {
      object_poses.push_back(path.waypoints[i].pose);
    }
  }

  result.targets.reserve(object_poses.size());
  for (const auto& pose : object_poses) {
    result.targets.push_back(pose * grasp_inv);
  }

  JointConfig seed = first_seed;
  for (std::size_t i = 0; i < result.targets.size(); ++i) {
    const IkResult ik = inverse_kinematics(chain, result.targets[i], seed, config.ik);
    if (!ik.success) {
      result.status = JointPathStatus::IkFailure;
      result.failed_waypoint = static_cast<int>(i);
      result.final_error = ik.error;
      return result;
    }
    if (!result.configs.empty()) {
      const double jump = (ik.q - result.configs.back()).cwiseAbs().maxCoeff();
      if (jump > config.max_joint_step) {
        result.status = JointPathStatus::Discontinuity;
        result.failed_waypoint = static_cast<int>(i);
        result.final_error = jump;
        return result;
      }
    }
    result.configs.push_back(ik.q);
    seed = ik.q;
  }
  return result;
}

namespace {

geom::TriMesh segment_box(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                          double radius, geom::RigidTransform* pose) {
  const Eigen::Vector3d d = b - a;
  const double len = d.norm();
  pose->translation = 0.5 * (a + b);
  if (len < 1e-9) {
    pose->rotation.setIdentity();
    return geom::make_box(Eigen::Vector3d::Constant(2.0 * radius));
  }
  pose->rotation = Eigen::Quaterniond::FromTwoVectors(Eigen::Vector3d::UnitX(), d);
  return geom::make_box({len + 2.0 * radius, 2.0 * radius, 2.0 * radius});
}

}  // namespace

std::optional<int> first_arm_collision(const KinematicChain& chain,
                                       const std::vector<JointConfig>& configs,
                                       const geom::Scene& scene,
                                       double link_radius) {
  for (std::size_t c = 0; c < configs.size(); ++c) {
    const JointConfig& q = configs[c];
    std::vector<Eigen::Vector3d> points;
    points.push_back(chain.base.translation);
    geom::RigidTransform t = chain.base;
    for (int i = 0; i < chain.dof(); ++i) {
      t = t * chain.joints[i].origin;
      points.push_back(t.translation);
      geom::RigidTransform spin;
      spin.rotation = Eigen::Quaterniond(Eigen::AngleAxisd(q[i], chain.joints[i].axis));
      spin.translation.setZero();
      t = t * spin;
    }
    points.push_back((t * chain.tip_offset).translation);

    for (std::size_t k = 1; k < points.size(); ++k) {
      geom::RigidTransform link_pose;
      const geom::TriMesh link = segment_box(points[k - 1], points[k], link_radius,
                                             &link_pose);
      for (const auto& obstacle : scene.obstacles()) {
        if (geom::check_collision_exhaustive(link, link_pose, obstacle.index.mesh(),
                                             obstacle.pose)) {
          return static_cast<int>(c);
        }
      }
    }
  }
  return std::nullopt;
}

void write_joint_path_csv(const std::vector<JointConfig>& configs,
                          const KinematicChain& chain, const std::string& filename) {
  std::ofstream out(filename, std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + filename + " for writing");
  }
  for (int i = 0; i < chain.dof(); ++i) {
    out << (i ? "," : "") << chain.joints[i].name;
  }
  out << "\n";
  char buf[32];
  for (const auto& q : configs) {
    for (int i = 0; i < q.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.6f", q[i]);
      out << (i ? "," : "") << buf;
    }
    out << "\n";
  }
  if (!out.good()) {
    throw std::runtime_error("failed writing " + filename);
  }
}

}  // namespace demoplan::kin
