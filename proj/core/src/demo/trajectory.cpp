#include "demoplan/demo/trajectory.hpp"

namespace demoplan::demo {

std::vector<TimedPose> to_world_keyposes(
    const DemoTrajectory& traj, const geom::RigidTransform& planner_world_t_fixed) {
  std::vector<TimedPose> out;
  out.reserve(traj.samples.size());
  for (const auto& sample : traj.samples) {
    out.push_back({sample.t, planner_world_t_fixed * sample.relative_pose});
  }
  return out;
}

}  // namespace demoplan::demo
