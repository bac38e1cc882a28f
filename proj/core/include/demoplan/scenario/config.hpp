#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "demoplan/demo/keypose.hpp"
#include "demoplan/geom/scene.hpp"
#include "demoplan/geom/transform.hpp"
#include "demoplan/planner/config.hpp"

namespace demoplan::scenario {

struct ObstacleSpec {
  std::string mesh;
  geom::RigidTransform pose;
};

/// Demonstration handling: which log to ingest, how to fit and rank it, and
/// how aggressively to thin the ranked poses into the candidate list.
struct DemoSettings {
  std::string log;
  demo::RankingConfig ranking;
  double roi_begin = -std::numeric_limits<double>::infinity();
  double roi_end = std::numeric_limits<double>::infinity();
  int candidate_count = 6;
  /// Minimum time between selected candidates, seconds. Negative picks
  /// span / (2 * candidate_count).
  double min_time_separation = -1.0;
};

/// One planning task as described by a config file. All relative paths are
/// resolved against the config file's directory.
struct ScenarioConfig {
  std::string name;
  std::string frame = "z_up";

  std::string object_mesh;
  std::optional<std::string> gripper_mesh;
  std::vector<ObstacleSpec> obstacles;

  /// Pose of the assembly target (the demonstration reference frame) in the
  /// planning world; demonstrated relative poses are composed with it.
  geom::RigidTransform target_frame;

  geom::RigidTransform start;
  geom::RigidTransform goal;

  DemoSettings demo;
  planner::PlannerConfig planner;

  std::string chain;
  geom::RigidTransform grasp;

  int trials = 5;
  std::vector<std::uint64_t> seeds;
  int success_floor = 4;
  bool allow_trivial = false;

  std::filesystem::path base_dir;

  std::filesystem::path resolve(const std::string& relative) const;
};

/// Parses and validates a scenario file: referenced files must exist, seeds
/// default to 1..trials, start must differ from goal unless allow_trivial.
/// Throws std::runtime_error naming the file and problem.
ScenarioConfig load_scenario(const std::string& filename);

/// Loads the meshes and assembles the collision scene. The gripper mesh, when
/// present, is merged into the moving object so gripper-obstacle contact is
/// checked by the same object-obstacle test.
geom::Scene build_scene(const ScenarioConfig& config);

}  // namespace demoplan::scenario
