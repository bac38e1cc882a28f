#pragma once

#include <vector>

#include "demoplan/demo/keypose.hpp"
#include "demoplan/geom/scene.hpp"
#include "demoplan/geom/transform.hpp"
#include "demoplan/planner/config.hpp"
#include "demoplan/planner/path.hpp"

namespace demoplan::planner {

/// A planning task: scene, endpoint poses and the ranked key poses the guided
/// loop may fall back on. Endpoint feasibility is checked at construction.
class PlanningProblem {
 public:
  PlanningProblem(const geom::Scene& scene, const geom::RigidTransform& start,
                  const geom::RigidTransform& goal,
                  std::vector<demo::KeyPose> ranked_key_poses, PlannerConfig config);

  const geom::Scene& scene() const { return *scene_; }
  const geom::RigidTransform& start() const { return start_; }
  const geom::RigidTransform& goal() const { return goal_; }
  const std::vector<demo::KeyPose>& ranked_key_poses() const { return key_poses_; }
  const PlannerConfig& config() const { return config_; }
  bool endpoints_free() const { return endpoints_free_; }

 private:
  const geom::Scene* scene_;
  geom::RigidTransform start_;
  geom::RigidTransform goal_;
  std::vector<demo::KeyPose> key_poses_;
  PlannerConfig config_;
  bool endpoints_free_ = false;
};

enum class PlanStatus { Success, Timeout, InfeasibleInput };

std::string plan_status_name(PlanStatus status);

/// One round of the guided loop: which key pose was inserted before it (rank,
/// 0 for the direct first round), how long each segment took (cached segments
/// report 0), and which segment failed if any.
struct AttemptRecord {
  int attempt = 0;
  int inserted_rank = 0;
  std::vector<double> segment_seconds;
  int failed_segment = -1;
  bool success = false;
};

struct PlanResult {
  PlanStatus status = PlanStatus::Timeout;
  ObjectPath path;
  int used_key_pose_count = 0;
  /// Ranks of key poses that had to be moved out of collision before use,
  /// and ranks discarded because repair failed.
  std::vector<int> repaired_ranks;
  std::vector<int> discarded_ranks;
  double elapsed_s = 0.0;
  /// Number of plan_segment invocations; each ran under its own t_e deadline.
  int segment_calls = 0;
  std::vector<AttemptRecord> attempts;
};

/// Demonstration-guided planning. The first attempt connects start to goal
/// directly; every further attempt inserts the next-ranked key pose into the
/// waypoint sequence at its demonstration timestamp and replans the segments
/// not already solved. Segments between unchanged waypoint pairs are reused
/// from earlier attempts. In-collision key poses are repaired first and
/// discarded if repair fails. Gives up when the candidates or the insertion
/// budget run out.
PlanResult plan_with_demonstration(const PlanningProblem& problem);

}  // namespace demoplan::planner
