#include "demoplan/scenario/config.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "demoplan/geom/obj_io.hpp"
#include "demoplan/planner/metric.hpp"

namespace demoplan::scenario {

namespace {

using nlohmann::json;

geom::RigidTransform parse_pose(const json& j) {
  geom::PoseVector pose;
  const auto& xyz = j.at("xyz");
  const auto& rpy = j.at("rpy");
  if (xyz.size() != 3 || rpy.size() != 3) {
    throw std::runtime_error("pose xyz and rpy must have 3 components");
  }
  pose.x = xyz[0].get<double>();
  pose.y = xyz[1].get<double>();
  pose.z = xyz[2].get<double>();
  pose.roll = rpy[0].get<double>();
  pose.pitch = rpy[1].get<double>();
  pose.yaw = rpy[2].get<double>();
  return geom::pose_vector_to_transform(pose);
}

void parse_planner(const json& j, planner::PlannerConfig& config) {
  if (j.contains("t_e")) config.t_e = j["t_e"].get<double>();
  if (j.contains("step_translation"))
    config.step_translation = j["step_translation"].get<double>();
  if (j.contains("step_rotation"))
    config.step_rotation = j["step_rotation"].get<double>();
  if (j.contains("rotation_weight"))
    config.rotation_weight = j["rotation_weight"].get<double>();
  if (j.contains("goal_bias")) config.goal_bias = j["goal_bias"].get<double>();
  if (j.contains("max_key_poses"))
    config.max_key_poses = j["max_key_poses"].get<int>();
  if (j.contains("dynamic_domain_radius"))
    config.dynamic_domain_radius = j["dynamic_domain_radius"].get<double>();
  if (j.contains("validation_resolution"))
    config.validation_resolution = j["validation_resolution"].get<double>();
  if (j.contains("rng_seed")) config.rng_seed = j["rng_seed"].get<std::uint64_t>();
  if (j.contains("repair_samples_max"))
    config.repair_samples_max = j["repair_samples_max"].get<int>();
  if (j.contains("repair_radius_schedule"))
    config.repair_radius_schedule =
        j["repair_radius_schedule"].get<std::vector<double>>();
  if (j.contains("max_extensions"))
    config.max_extensions = j["max_extensions"].get<int>();
  if (j.contains("smoothing_attempts"))
    config.smoothing_attempts = j["smoothing_attempts"].get<int>();
}

void parse_demo(const json& j, DemoSettings& demo) {
  demo.log = j.at("log").get<std::string>();
  if (j.contains("dof")) demo.ranking.dof = j["dof"].get<std::string>();
  if (j.contains("degree")) demo.ranking.degree = j["degree"].get<int>();
  if (j.contains("roi")) {
    const auto& roi = j["roi"];
    if (roi.size() != 2) throw std::runtime_error("demo roi must have 2 values");
    demo.roi_begin = roi[0].get<double>();
    demo.roi_end = roi[1].get<double>();
  }
  if (j.contains("candidate_count"))
    demo.candidate_count = j["candidate_count"].get<int>();
  if (j.contains("min_time_separation"))
    demo.min_time_separation = j["min_time_separation"].get<double>();
}

void require_file(const ScenarioConfig& config, const std::string& relative,
                  const std::string& what) {
  const auto full = config.resolve(relative);
  if (!std::filesystem::exists(full)) {
    throw std::runtime_error(what + " does not exist: " + full.string());
  }
}

}  // namespace

std::filesystem::path ScenarioConfig::resolve(const std::string& relative) const {
  const std::filesystem::path p(relative);
  return p.is_absolute() ? p : base_dir / p;
}

ScenarioConfig load_scenario(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) {
    throw std::runtime_error("cannot open scenario file: " + filename);
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error(filename + ": not valid JSON: " + e.what());
  }

  ScenarioConfig config;
  config.base_dir = std::filesystem::absolute(filename).parent_path();
  try {
    config.name = j.at("name").get<std::string>();
    if (j.contains("frame")) config.frame = j["frame"].get<std::string>();
    config.object_mesh = j.at("object_mesh").get<std::string>();
    if (j.contains("gripper_mesh"))
      config.gripper_mesh = j["gripper_mesh"].get<std::string>();
    for (const auto& obstacle : j.at("obstacles")) {
      config.obstacles.push_back(
          {obstacle.at("mesh").get<std::string>(), parse_pose(obstacle.at("pose"))});
    }
    config.target_frame = parse_pose(j.at("target_frame"));
    config.start = parse_pose(j.at("start"));
    config.goal = parse_pose(j.at("goal"));
    parse_demo(j.at("demo"), config.demo);
    if (j.contains("planner")) parse_planner(j["planner"], config.planner);
    config.chain = j.at("chain").get<std::string>();
    config.grasp = parse_pose(j.at("grasp"));
    if (j.contains("trials")) config.trials = j["trials"].get<int>();
    if (j.contains("seeds"))
      config.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    if (j.contains("success_floor"))
      config.success_floor = j["success_floor"].get<int>();
    if (j.contains("allow_trivial"))
      config.allow_trivial = j["allow_trivial"].get<bool>();
  } catch (const json::exception& e) {
    throw std::runtime_error(filename + ": missing or malformed field: " + e.what());
  }

  if (config.seeds.empty()) {
    for (int i = 1; i <= config.trials; ++i) {
      config.seeds.push_back(static_cast<std::uint64_t>(i));
    }
  }
  config.trials = static_cast<int>(config.seeds.size());
  if (config.trials < 1) {
    throw std::runtime_error(filename + ": needs at least one trial");
  }

  config.planner.validate();
  if (config.demo.candidate_count < 0) {
    throw std::runtime_error(filename + ": candidate_count must be non-negative");
  }

  require_file(config, config.object_mesh, "object mesh");
  if (config.gripper_mesh) require_file(config, *config.gripper_mesh, "gripper mesh");
  for (const auto& obstacle : config.obstacles) {
    require_file(config, obstacle.mesh, "obstacle mesh");
  }
  require_file(config, config.demo.log, "demonstration log");
  require_file(config, config.chain, "chain file");

  if (!config.allow_trivial &&
      planner::composite_distance(config.start, config.goal,
                                  config.planner.rotation_weight) < 1e-12) {
    throw std::runtime_error(filename +
                             ": start equals goal; set allow_trivial to permit this");
  }
  return config;
}

geom::Scene build_scene(const ScenarioConfig& config) {
  geom::TriMesh object = geom::load_obj(config.resolve(config.object_mesh).string());
  if (config.gripper_mesh) {
    const geom::TriMesh gripper =
        geom::load_obj(config.resolve(*config.gripper_mesh).string());
    const int base = static_cast<int>(object.vertices.size());
    object.vertices.insert(object.vertices.end(), gripper.vertices.begin(),
                           gripper.vertices.end());
    for (const auto& tri : gripper.triangles) {
      object.triangles.push_back({tri[0] + base, tri[1] + base, tri[2] + base});
    }
  }
  std::vector<std::pair<geom::TriMesh, geom::RigidTransform>> obstacles;
  for (const auto& spec : config.obstacles) {
    obstacles.emplace_back(geom::load_obj(config.resolve(spec.mesh).string()),
                           spec.pose);
  }
  return geom::Scene(std::move(object), std::move(obstacles), config.frame);
}

}  // namespace demoplan::scenario
