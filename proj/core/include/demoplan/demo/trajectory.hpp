#pragma once

#include <string>
#include <vector>

#include "demoplan/geom/transform.hpp"

namespace demoplan::demo {

/// One demonstration sample: the manipulated object's pose expressed in the
/// fixed object's frame at time t.
struct PoseSample {
  double t = 0.0;  // seconds
  geom::RigidTransform relative_pose;
};

struct TimedPose {
  double t = 0.0;
  geom::RigidTransform pose;
};

/// Time-ordered record of one human demonstration. Timestamps are strictly
/// increasing and the trajectory holds at least two samples.
struct DemoTrajectory {
  std::vector<PoseSample> samples;
  std::string recording_id;
  std::string units = "m,s";

  double duration() const {
    return samples.empty() ? 0.0 : samples.back().t - samples.front().t;
  }
};

/// Maps every sample into the planner's world frame by left-composition with
/// the planner-side pose of the fixed object. Order and timestamps are kept.
std::vector<TimedPose> to_world_keyposes(const DemoTrajectory& traj,
                                         const geom::RigidTransform& planner_world_t_fixed);

}  // namespace demoplan::demo
