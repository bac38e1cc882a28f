#pragma once

#include <istream>
#include <string>

#include "demoplan/demo/trajectory.hpp"

namespace demoplan::demo {

struct IngestReport {
  DemoTrajectory trajectory;
  int rejected_nonfinite = 0;
  int collapsed_duplicates = 0;
};

/// Reads a demonstration pose log. Two schemas are accepted, selected by the
/// column header line:
///   t,x,y,z,qw,qx,qy,qz                 relative pose of the object in the
///                                       fixed object's frame
///   t,<7 fields>_G,<7 fields>_L         world-frame poses of both objects;
///                                       the relative pose is computed as
///                                       inverse(T_G) * T_L per record
/// A `# units: m,s` comment line must precede the header; other units are
/// rejected. Records with non-finite values are dropped and counted;
/// duplicate timestamps collapse to the last record. Fewer than two valid
/// records is an error.
IngestReport ingest_pose_log(const std::string& path);

IngestReport ingest_pose_log(std::istream& in, const std::string& source_name);

}  // namespace demoplan::demo
