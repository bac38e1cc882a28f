#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "demoplan/planner/path.hpp"

namespace demoplan::planner {

/// Run summary persisted next to the waypoints. `time_s` is stored rounded
/// to milliseconds.
struct PathStats {
  std::string scenario;
  int candidate_count = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::string status;
  int used_key_poses = 0;
  std::vector<int> repaired_ranks;
  double time_s = 0.0;
  double length = 0.0;
};

struct PathFile {
  std::string frame = "z_up";
  ObjectPath path;
  PathStats stats;
};

/// Serialized form; identical inputs produce identical bytes.
std::string path_file_to_string(const PathFile& file);
PathFile parse_path_file(const std::string& text);

/// Atomic write (temp file plus rename).
void write_path_file(const PathFile& file, const std::string& filename);
/// Throws std::runtime_error with the filename on missing or malformed input.
PathFile read_path_file(const std::string& filename);

}  // namespace demoplan::planner
