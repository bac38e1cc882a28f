#pragma once

#include <string>
#include <vector>

#include "demoplan/demo/trajectory.hpp"

namespace demoplan::demo {

enum class Dof { X, Y, Z, Roll, Pitch, Yaw };

inline constexpr Dof kAllDofs[] = {Dof::X,    Dof::Y,     Dof::Z,
                                   Dof::Roll, Dof::Pitch, Dof::Yaw};

const char* dof_name(Dof dof);
Dof dof_from_name(const std::string& name);

/// Least-squares polynomial over one pose parameter. Coefficients live in the
/// normalized time domain s in [-1, 1]; the t <-> s mapping is stored so
/// evaluation and differentiation can be done in either domain.
struct PolynomialFit {
  Dof dof = Dof::Pitch;
  int degree = 0;
  std::vector<double> coefficients;  // ascending power in s
  double t_min = 0.0;
  double t_max = 0.0;
  double rms_residual = 0.0;

  double to_normalized(double t) const {
    return 2.0 * (t - t_min) / (t_max - t_min) - 1.0;
  }

  double normalized_value(double s) const;
  double normalized_derivative(double s) const;

  double value_at(double t) const { return normalized_value(to_normalized(t)); }

  /// d/dt of the fitted curve (chain rule through the domain mapping).
  double derivative_at(double t) const {
    return normalized_derivative(to_normalized(t)) * 2.0 / (t_max - t_min);
  }
};

/// Per-sample scalar track of one DoF. Angular DoFs are unwrapped so the
/// sequence has no +-2*pi jumps.
std::vector<double> dof_values(const DemoTrajectory& traj, Dof dof);

std::vector<double> unwrap_angles(std::vector<double> values);

/// Fits a least-squares polynomial to the given DoF over normalized time.
/// degree must be >= 1 and is clamped to sample_count - 1. Throws
/// std::runtime_error on a rank-deficient system.
PolynomialFit fit_dof_curve(const DemoTrajectory& traj, Dof dof, int degree);

}  // namespace demoplan::demo
