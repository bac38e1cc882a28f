#pragma once

#include "demoplan/geom/transform.hpp"

namespace demoplan::planner {

/// Translation distance plus weighted geodesic rotation angle, in meters.
double composite_distance(const geom::RigidTransform& a,
                          const geom::RigidTransform& b,
                          double rotation_weight);

}  // namespace demoplan::planner
