#include "demoplan/planner/path_io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace demoplan::planner {

namespace {

constexpr const char* kFormatTag = "demoplan-path-v1";

double round_ms(double seconds) { return std::round(seconds * 1000.0) / 1000.0; }

}  // namespace

std::string path_file_to_string(const PathFile& file) {
  nlohmann::ordered_json j;
  j["format"] = kFormatTag;
  j["frame"] = file.frame;
  auto& waypoints = j["waypoints"];
  waypoints = nlohmann::ordered_json::array();
  for (const Waypoint& w : file.path.waypoints) {
    nlohmann::ordered_json entry;
    entry["pose"] = {w.pose.translation.x(), w.pose.translation.y(),
                     w.pose.translation.z(), w.pose.rotation.w(),
                     w.pose.rotation.x(),    w.pose.rotation.y(),
                     w.pose.rotation.z()};
    entry["tag"] = waypoint_tag_name(w.tag, w.key_rank);
    waypoints.push_back(std::move(entry));
  }
  auto& stats = j["stats"];
  stats["scenario"] = file.stats.scenario;
  stats["candidates"] = file.stats.candidate_count;
  stats["trial"] = file.stats.trial;
  stats["seed"] = file.stats.seed;
  stats["status"] = file.stats.status;
  stats["used_key_poses"] = file.stats.used_key_poses;
  stats["repaired"] = file.stats.repaired_ranks;
  stats["time_s"] = round_ms(file.stats.time_s);
  stats["length"] = file.stats.length;
  return j.dump(2) + "\n";
}

PathFile parse_path_file(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("path file is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != kFormatTag) {
      throw std::runtime_error("unexpected format tag");
    }
    PathFile file;
    file.frame = j.at("frame").get<std::string>();
    for (const auto& entry : j.at("waypoints")) {
      const auto& p = entry.at("pose");
      if (p.size() != 7) throw std::runtime_error("pose must have 7 scalars");
      Waypoint w;
      w.pose.translation = {p[0].get<double>(), p[1].get<double>(), p[2].get<double>()};
      w.pose.rotation = Eigen::Quaterniond(p[3].get<double>(), p[4].get<double>(),
                                           p[5].get<double>(), p[6].get<double>());
      if (std::abs(w.pose.rotation.norm() - 1.0) > 1e-6) {
        throw std::runtime_error("waypoint quaternion is not unit length");
      }
      w.tag = waypoint_tag_from_name(entry.at("tag").get<std::string>(), &w.key_rank);
      file.path.waypoints.push_back(w);
    }
    const auto& stats = j.at("stats");
    file.stats.scenario = stats.at("scenario").get<std::string>();
    file.stats.candidate_count = stats.at("candidates").get<int>();
    file.stats.trial = stats.at("trial").get<int>();
    file.stats.seed = stats.at("seed").get<std::uint64_t>();
    file.stats.status = stats.at("status").get<std::string>();
    file.stats.used_key_poses = stats.at("used_key_poses").get<int>();
    file.stats.repaired_ranks = stats.at("repaired").get<std::vector<int>>();
    file.stats.time_s = stats.at("time_s").get<double>();
    file.stats.length = stats.at("length").get<double>();
    return file;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("path file is missing fields: ") + e.what());
  }
}

void write_path_file(const PathFile& file, const std::string& filename) {
  const std::filesystem::path target(filename);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    }
    out << path_file_to_string(file);
    if (!out.good()) {
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, target);
}

PathFile read_path_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) {
    throw std::runtime_error("cannot open path file: " + filename);
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    return parse_path_file(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(filename + ": " + e.what());
  }
}

}  // namespace demoplan::planner
