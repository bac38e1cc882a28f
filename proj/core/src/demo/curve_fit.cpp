#include "demoplan/demo/curve_fit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace demoplan::demo {

const char* dof_name(Dof dof) {
  switch (dof) {
    case Dof::X: return "x";
    case Dof::Y: return "y";
    case Dof::Z: return "z";
    case Dof::Roll: return "roll";
    case Dof::Pitch: return "pitch";
    case Dof::Yaw: return "yaw";
  }
  return "?";
}

Dof dof_from_name(const std::string& name) {
  for (Dof dof : kAllDofs) {
    if (name == dof_name(dof)) return dof;
  }
  throw std::runtime_error("unknown DoF name: '" + name + "'");
}

double PolynomialFit::normalized_value(double s) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * s + *it;
  }
  return acc;
}

double PolynomialFit::normalized_derivative(double s) const {
  double acc = 0.0;
  for (int k = static_cast<int>(coefficients.size()) - 1; k >= 1; --k) {
    acc = acc * s + k * coefficients[k];
  }
  return acc;
}

std::vector<double> dof_values(const DemoTrajectory& traj, Dof dof) {
  std::vector<double> values;
  values.reserve(traj.samples.size());
  for (const auto& sample : traj.samples) {
    const auto pv = geom::transform_to_pose_vector(sample.relative_pose).pose;
    switch (dof) {
      case Dof::X: values.push_back(pv.x); break;
      case Dof::Y: values.push_back(pv.y); break;
      case Dof::Z: values.push_back(pv.z); break;
      case Dof::Roll: values.push_back(pv.roll); break;
      case Dof::Pitch: values.push_back(pv.pitch); break;
      case Dof::Yaw: values.push_back(pv.yaw); break;
    }
  }
  if (dof == Dof::Roll || dof == Dof::Pitch || dof == Dof::Yaw) {
    values = unwrap_angles(std::move(values));
  }
  return values;
}

std::vector<double> unwrap_angles(std::vector<double> values) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (size_t i = 1; i < values.size(); ++i) {
    double delta = values[i] - values[i - 1];
    delta -= two_pi * std::round(delta / two_pi);
    values[i] = values[i - 1] + delta;
  }
  return values;
}

PolynomialFit fit_dof_curve(const DemoTrajectory& traj, Dof dof, int degree) {
  if (degree < 1) {
    throw std::runtime_error("fit degree must be >= 1");
  }
  const int n = static_cast<int>(traj.samples.size());
  if (n < 2) {
    throw std::runtime_error("fit needs at least 2 samples");
  }
  degree = std::min(degree, n - 1);

  PolynomialFit fit;
  fit.dof = dof;
  fit.degree = degree;
  fit.t_min = traj.samples.front().t;
  fit.t_max = traj.samples.back().t;
  if (!(fit.t_max > fit.t_min)) {
    throw std::runtime_error("fit needs a positive time span");
  }

  const std::vector<double> values = dof_values(traj, dof);

  Eigen::MatrixXd vandermonde(n, degree + 1);
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) {
    const double s = fit.to_normalized(traj.samples[i].t);
    double p = 1.0;
    for (int k = 0; k <= degree; ++k) {
      vandermonde(i, k) = p;
      p *= s;
    }
    rhs(i) = values[i];
  }

  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(vandermonde);
  if (qr.rank() < degree + 1) {
    throw std::runtime_error("rank-deficient polynomial fit (degree " +
                             std::to_string(degree) + ", rank " +
                             std::to_string(qr.rank()) + ")");
  }
  const Eigen::VectorXd coeffs = qr.solve(rhs);
  fit.coefficients.assign(coeffs.data(), coeffs.data() + degree + 1);

  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = fit.value_at(traj.samples[i].t) - values[i];
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / n);
  return fit;
}

}  // namespace demoplan::demo
