#include "demoplan/planner/config.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace demoplan::planner {

namespace {

void fail(const std::string& what) {
  throw std::runtime_error("planner config: " + what);
}

}  // namespace

void PlannerConfig::validate() const {
  if (!(t_e > 0.0) || !std::isfinite(t_e)) fail("t_e must be positive");
  if (!(step_translation > 0.0) || !(step_rotation > 0.0))
    fail("step components must be positive");
  if (!(rotation_weight > 0.0)) fail("rotation_weight must be positive");
  if (!(goal_bias >= 0.0 && goal_bias <= 1.0))
    fail("goal_bias must lie in [0, 1]");
  if (!(validation_resolution > 0.0))
    fail("validation_resolution must be positive");
  const double min_step_component =
      std::min(step_translation, rotation_weight * step_rotation);
  if (validation_resolution > min_step_component)
    fail("validation_resolution must not exceed the smallest step component");
  if (max_key_poses < 0) fail("max_key_poses must be non-negative");
  if (repair_samples_max < 1) fail("repair_samples_max must be positive");
  if (repair_radius_schedule.empty()) fail("repair_radius_schedule is empty");
  double prev = 0.0;
  for (double r : repair_radius_schedule) {
    if (!(r > prev)) fail("repair_radius_schedule must be increasing and positive");
    prev = r;
  }
  if (max_extensions < 1) fail("max_extensions must be positive");
  if (smoothing_attempts < 0) fail("smoothing_attempts must be non-negative");
}

}  // namespace demoplan::planner
