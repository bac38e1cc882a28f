#include "demoplan/demo/pose_log.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace demoplan::demo {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    fields.push_back(trim(field));
  }
  return fields;
}

std::string normalized(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

const std::vector<std::string> kRelativeHeader = {"t",  "x",  "y",  "z",
                                                  "qw", "qx", "qy", "qz"};
const std::vector<std::string> kWorldPairHeader = {
    "t",    "x_g",  "y_g",  "z_g",  "qw_g", "qx_g", "qy_g", "qz_g",
    "x_l",  "y_l",  "z_l",  "qw_l", "qx_l", "qy_l", "qz_l"};

enum class Schema { Relative, WorldPair };

// Reads 7 scalars starting at offset into a pose; false when any value is
// non-finite or the quaternion is numerically zero.
bool read_pose(const std::vector<double>& row, size_t offset,
               geom::RigidTransform& out) {
  for (size_t i = offset; i < offset + 7; ++i) {
    if (!std::isfinite(row[i])) return false;
  }
  const Eigen::Quaterniond q(row[offset + 3], row[offset + 4], row[offset + 5],
                             row[offset + 6]);
  if (q.norm() < 1e-12) return false;
  out = geom::RigidTransform(q, Eigen::Vector3d(row[offset], row[offset + 1],
                                                row[offset + 2]));
  return true;
}

}  // namespace

IngestReport ingest_pose_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open pose log: " + path);
  }
  return ingest_pose_log(in, path);
}

IngestReport ingest_pose_log(std::istream& in, const std::string& source_name) {
  IngestReport report;
  report.trajectory.recording_id = source_name;

  std::string line;
  int line_no = 0;
  bool units_seen = false;
  bool header_seen = false;
  Schema schema = Schema::Relative;
  size_t expected_fields = 0;

  std::vector<PoseSample> raw;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;

    const std::string where = source_name + ":" + std::to_string(line_no);

    if (stripped[0] == '#') {
      const std::string n = normalized(stripped.substr(1));
      if (n.rfind("units:", 0) == 0) {
        if (n != "units:m,s") {
          throw std::runtime_error(where + ": unsupported units '" +
                                   stripped.substr(1) + "' (expected m,s)");
        }
        units_seen = true;
      }
      continue;
    }

    if (!header_seen) {
      if (!units_seen) {
        throw std::runtime_error(source_name +
                                 ": missing '# units: m,s' declaration before header");
      }
      std::vector<std::string> columns;
      for (const auto& c : split_csv(stripped)) {
        columns.push_back(normalized(c));
      }
      if (columns == kRelativeHeader) {
        schema = Schema::Relative;
      } else if (columns == kWorldPairHeader) {
        schema = Schema::WorldPair;
      } else {
        throw std::runtime_error(where + ": unrecognized pose log header");
      }
      expected_fields = columns.size();
      header_seen = true;
      continue;
    }

    const auto fields = split_csv(stripped);
    if (fields.size() != expected_fields) {
      throw std::runtime_error(where + ": record has " +
                               std::to_string(fields.size()) + " fields, header declares " +
                               std::to_string(expected_fields));
    }
    std::vector<double> row(fields.size());
    bool parse_ok = true;
    for (size_t i = 0; i < fields.size(); ++i) {
      try {
        size_t used = 0;
        row[i] = std::stod(fields[i], &used);
        if (used != fields[i].size()) parse_ok = false;
      } catch (const std::exception&) {
        parse_ok = false;
      }
    }
    if (!parse_ok) {
      throw std::runtime_error(where + ": unparseable numeric field");
    }

    if (!std::isfinite(row[0])) {
      ++report.rejected_nonfinite;
      continue;
    }

    PoseSample sample;
    sample.t = row[0];
    if (schema == Schema::Relative) {
      if (!read_pose(row, 1, sample.relative_pose)) {
        ++report.rejected_nonfinite;
        continue;
      }
    } else {
      geom::RigidTransform world_t_fixed, world_t_object;
      if (!read_pose(row, 1, world_t_fixed) || !read_pose(row, 8, world_t_object)) {
        ++report.rejected_nonfinite;
        continue;
      }
      sample.relative_pose = geom::invert(world_t_fixed) * world_t_object;
    }
    raw.push_back(sample);
  }

  if (!header_seen) {
    throw std::runtime_error(source_name + ": no header line found");
  }

  // Stable sort then collapse equal timestamps to the last record in file
  // order.
  std::stable_sort(raw.begin(), raw.end(),
                   [](const PoseSample& a, const PoseSample& b) { return a.t < b.t; });
  std::vector<PoseSample>& samples = report.trajectory.samples;
  for (const auto& s : raw) {
    if (!samples.empty() && samples.back().t == s.t) {
      samples.back() = s;
      ++report.collapsed_duplicates;
    } else {
      samples.push_back(s);
    }
  }

  if (samples.size() < 2) {
    throw std::runtime_error(source_name + ": fewer than 2 valid records (" +
                             std::to_string(samples.size()) + ")");
  }
  return report;
}

}  // namespace demoplan::demo
