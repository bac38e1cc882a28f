#include "demoplan/kin/chain_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace demoplan::kin {

namespace {

geom::RigidTransform parse_offset(const nlohmann::json& j) {
  geom::PoseVector pose;
  const auto& xyz = j.at("xyz");
  const auto& rpy = j.at("rpy");
  if (xyz.size() != 3 || rpy.size() != 3) {
    throw std::runtime_error("offset xyz and rpy must have 3 components");
  }
  pose.x = xyz[0].get<double>();
  pose.y = xyz[1].get<double>();
  pose.z = xyz[2].get<double>();
  pose.roll = rpy[0].get<double>();
  pose.pitch = rpy[1].get<double>();
  pose.yaw = rpy[2].get<double>();
  return geom::pose_vector_to_transform(pose);
}

}  // namespace

KinematicChain parse_chain(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("chain file is not valid JSON: ") + e.what());
  }
  try {
    KinematicChain chain;
    chain.base = parse_offset(j.at("base"));
    chain.tip_offset = parse_offset(j.at("tip"));
    for (const auto& joint_json : j.at("joints")) {
      Joint joint;
      joint.name = joint_json.at("name").get<std::string>();
      const auto& axis = joint_json.at("axis");
      if (axis.size() != 3) throw std::runtime_error("joint axis must have 3 components");
      joint.axis = {axis[0].get<double>(), axis[1].get<double>(), axis[2].get<double>()};
      joint.origin = parse_offset(joint_json.at("origin"));
      const auto& limits = joint_json.at("limits");
      if (limits.size() != 2) throw std::runtime_error("joint limits must have 2 values");
      joint.lower = limits[0].get<double>();
      joint.upper = limits[1].get<double>();
      chain.joints.push_back(std::move(joint));
    }
    chain.validate();
    return chain;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("chain file is missing fields: ") + e.what());
  }
}

KinematicChain load_chain(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) {
    throw std::runtime_error("cannot open chain file: " + filename);
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    return parse_chain(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(filename + ": " + e.what());
  }
}

}  // namespace demoplan::kin
