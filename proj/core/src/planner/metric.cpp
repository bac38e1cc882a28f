#include "demoplan/planner/metric.hpp"

namespace demoplan::planner {

double composite_distance(const geom::RigidTransform& a,
                          const geom::RigidTransform& b,
                          double rotation_weight) {
  return geom::translation_distance(a, b) +
         rotation_weight * geom::rotation_angle_between(a, b);
}

}  // namespace demoplan::planner
