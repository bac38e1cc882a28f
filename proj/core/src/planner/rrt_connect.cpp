#include "demoplan/planner/rrt_connect.hpp"

#include <cmath>
#include <utility>

#include "demoplan/planner/metric.hpp"
#include "demoplan/planner/path.hpp"

namespace demoplan::planner {

namespace {

constexpr int kDeadlineCheckStride = 64;
constexpr int kDynamicDomainResamples = 32;

struct Tree {
  struct Node {
    geom::RigidTransform pose;
    int parent = -1;
  };
  std::vector<Node> nodes;

  void init(const geom::RigidTransform& root) { nodes.push_back({root, -1}); }

  int nearest(const geom::RigidTransform& pose, double rotation_weight) const {
    int best = 0;
    double best_dist = composite_distance(nodes[0].pose, pose, rotation_weight);
    for (int i = 1; i < static_cast<int>(nodes.size()); ++i) {
      const double d = composite_distance(nodes[i].pose, pose, rotation_weight);
      if (d < best_dist) {
        best_dist = d;
        best = i;
      }
    }
    return best;
  }

  std::vector<geom::RigidTransform> branch(int index) const {
    std::vector<geom::RigidTransform> out;
    for (int i = index; i >= 0; i = nodes[i].parent) {
      out.push_back(nodes[i].pose);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }
};

enum class Extend { Trapped, Advanced, Reached };

// One bounded step from the tree toward the target. When the target lies
// within a single step it is adopted bit-exactly, which is what makes the
// Reached test and the final endpoint equality exact.
geom::RigidTransform steer(const geom::RigidTransform& from,
                           const geom::RigidTransform& to,
                           const PlannerConfig& config, bool* reached) {
  const double dt = geom::translation_distance(from, to);
  const double dr = geom::rotation_angle_between(from, to);
  if (dt <= config.step_translation && dr <= config.step_rotation) {
    *reached = true;
    return to;
  }
  *reached = false;
  double s = 1.0;
  if (dt > config.step_translation) s = std::min(s, config.step_translation / dt);
  if (dr > config.step_rotation) s = std::min(s, config.step_rotation / dr);
  return geom::interpolate(from, to, s);
}

struct Search {
  const geom::Scene& scene;
  const PlannerConfig& config;
  const SamplingBounds& bounds;
  const Deadline& deadline;
  std::mt19937_64& rng;
  int extensions = 0;
  bool out_of_time = false;

  bool budget_left() {
    if (extensions >= config.max_extensions) return false;
    if (extensions % kDeadlineCheckStride == 0 && deadline.expired()) {
      out_of_time = true;
      return false;
    }
    return true;
  }

  Extend extend(Tree& tree, const geom::RigidTransform& target) {
    ++extensions;
    const int nn = tree.nearest(target, config.rotation_weight);
    bool reached = false;
    const geom::RigidTransform candidate =
        steer(tree.nodes[nn].pose, target, config, &reached);
    if (!motion_valid(tree.nodes[nn].pose, candidate, scene,
                      config.validation_resolution, config.rotation_weight)) {
      return Extend::Trapped;
    }
    tree.nodes.push_back({candidate, nn});
    return reached ? Extend::Reached : Extend::Advanced;
  }

  Extend connect(Tree& tree, const geom::RigidTransform& target) {
    Extend status = Extend::Advanced;
    while (status == Extend::Advanced) {
      if (!budget_left()) return Extend::Trapped;
      status = extend(tree, target);
    }
    return status;
  }

  geom::RigidTransform sample(const Tree& tree, const geom::RigidTransform& bias_root) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (unit(rng) < config.goal_bias) {
      return bias_root;
    }
    const double radius = config.effective_dynamic_domain();
    geom::RigidTransform pose = random_pose(bounds, rng);
    if (radius > 0.0) {
      for (int attempt = 0; attempt < kDynamicDomainResamples; ++attempt) {
        const int nn = tree.nearest(pose, config.rotation_weight);
        if (composite_distance(tree.nodes[nn].pose, pose, config.rotation_weight) <=
            radius) {
          break;
        }
        pose = random_pose(bounds, rng);
      }
    }
    return pose;
  }

  void smooth(std::vector<geom::RigidTransform>& waypoints) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int attempt = 0; attempt < config.smoothing_attempts; ++attempt) {
      const int n = static_cast<int>(waypoints.size());
      if (n < 3 || deadline.expired()) break;
      const int i = static_cast<int>(unit(rng) * (n - 2));
      const int j = i + 2 + static_cast<int>(unit(rng) * (n - 1 - (i + 2) + 1));
      if (j >= n) continue;
      if (motion_valid(waypoints[i], waypoints[j], scene,
                       config.validation_resolution, config.rotation_weight)) {
        waypoints.erase(waypoints.begin() + i + 1, waypoints.begin() + j);
      }
    }
  }
};

std::vector<geom::RigidTransform> densify_chain(
    const std::vector<geom::RigidTransform>& coarse, const PlannerConfig& config) {
  std::vector<geom::RigidTransform> fine;
  fine.push_back(coarse.front());
  for (std::size_t i = 1; i < coarse.size(); ++i) {
    auto piece =
        densify(coarse[i - 1], coarse[i], config.composite_step(), config.rotation_weight);
    fine.insert(fine.end(), piece.begin() + 1, piece.end());
  }
  return fine;
}

}  // namespace

SamplingBounds derive_sampling_bounds(const geom::Scene& scene,
                                      const std::vector<geom::RigidTransform>& anchors) {
  geom::Aabb box;
  bool seeded = false;
  if (!scene.obstacles().empty()) {
    box = scene.obstacle_bounds();
    seeded = true;
  }
  for (const auto& anchor : anchors) {
    if (!seeded) {
      box.lo = anchor.translation;
      box.hi = anchor.translation;
      seeded = true;
    } else {
      box.expand(anchor.translation);
    }
  }
  const double margin = std::max(scene.object_diameter(), 1e-3);
  box.lo -= Eigen::Vector3d::Constant(margin);
  box.hi += Eigen::Vector3d::Constant(margin);
  return SamplingBounds{box};
}

Eigen::Quaterniond random_rotation(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u1 = unit(rng);
  const double theta1 = 2.0 * M_PI * unit(rng);
  const double theta2 = 2.0 * M_PI * unit(rng);
  const double s1 = std::sqrt(1.0 - u1);
  const double s2 = std::sqrt(u1);
  return Eigen::Quaterniond(s2 * std::cos(theta2), s1 * std::sin(theta1),
                            s1 * std::cos(theta1), s2 * std::sin(theta2));
}

geom::RigidTransform random_pose(const SamplingBounds& bounds, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::Vector3d t;
  for (int k = 0; k < 3; ++k) {
    t[k] = bounds.position.lo[k] +
           unit(rng) * (bounds.position.hi[k] - bounds.position.lo[k]);
  }
  return geom::RigidTransform{random_rotation(rng), t};
}

bool motion_valid(const geom::RigidTransform& a, const geom::RigidTransform& b,
                  const geom::Scene& scene, double resolution,
                  double rotation_weight) {
  const double dist = composite_distance(a, b, rotation_weight);
  const int steps = std::max(1, static_cast<int>(std::ceil(dist / resolution)));
  for (int k = 1; k <= steps; ++k) {
    const geom::RigidTransform pose =
        (k == steps) ? b : geom::interpolate(a, b, static_cast<double>(k) / steps);
    if (geom::pose_in_collision(pose, scene)) {
      return false;
    }
  }
  return true;
}

SegmentResult plan_segment(const geom::RigidTransform& start,
                           const geom::RigidTransform& goal,
                           const geom::Scene& scene, const PlannerConfig& config,
                           const SamplingBounds& bounds, const Deadline& deadline,
                           std::mt19937_64& rng) {
  SegmentResult result;
  if (geom::pose_in_collision(start, scene) || geom::pose_in_collision(goal, scene)) {
    result.status = SegmentStatus::InfeasibleInput;
    result.elapsed_s = deadline.elapsed();
    return result;
  }
  if (composite_distance(start, goal, config.rotation_weight) < 1e-15) {
    result.status = SegmentStatus::Success;
    result.waypoints = {start};
    result.elapsed_s = deadline.elapsed();
    return result;
  }

  Search search{scene, config, bounds, deadline, rng};
  Tree start_tree, goal_tree;
  start_tree.init(start);
  goal_tree.init(goal);

  Tree* grow = &start_tree;
  Tree* other = &goal_tree;

  while (search.budget_left()) {
    const geom::RigidTransform target = search.sample(*grow, other->nodes[0].pose);
    if (search.extend(*grow, target) != Extend::Trapped) {
      const geom::RigidTransform tip = grow->nodes.back().pose;
      if (search.connect(*other, tip) == Extend::Reached) {
        // Both branches end at the shared connect pose.
        auto grow_branch = grow->branch(static_cast<int>(grow->nodes.size()) - 1);
        auto other_branch = other->branch(static_cast<int>(other->nodes.size()) - 1);
        auto& from_start = (grow == &start_tree) ? grow_branch : other_branch;
        auto& from_goal = (grow == &start_tree) ? other_branch : grow_branch;
        from_goal.pop_back();
        std::reverse(from_goal.begin(), from_goal.end());

        std::vector<geom::RigidTransform> coarse = std::move(from_start);
        coarse.insert(coarse.end(), from_goal.begin(), from_goal.end());

        search.smooth(coarse);
        result.status = SegmentStatus::Success;
        result.waypoints = densify_chain(coarse, config);
        result.extensions = search.extensions;
        result.elapsed_s = deadline.elapsed();
        return result;
      }
    }
    std::swap(grow, other);
  }

  result.status = SegmentStatus::Timeout;
  result.extensions = search.extensions;
  result.elapsed_s = deadline.elapsed();
  return result;
}

SegmentResult plan_segment(const geom::RigidTransform& start,
                           const geom::RigidTransform& goal,
                           const geom::Scene& scene, const PlannerConfig& config) {
  const SamplingBounds bounds = derive_sampling_bounds(scene, {start, goal});
  std::mt19937_64 rng(config.rng_seed);
  const Deadline deadline(config.t_e);
  return plan_segment(start, goal, scene, config, bounds, deadline, rng);
}

}  // namespace demoplan::planner
