#include "demoplan/demo/keypose.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace demoplan::demo {

namespace {

double sample_stddev(const std::vector<double>& values) {
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) {
    ss += (v - mean) * (v - mean);
  }
  return std::sqrt(ss / n);
}

}  // namespace

RankingResult rank_key_poses(const DemoTrajectory& traj, const RankingConfig& config,
                             const geom::RigidTransform& world_t_fixed) {
  const int n = static_cast<int>(traj.samples.size());
  RankingResult result;
  std::vector<double> scores(n, 0.0);

  if (config.dof == "all") {
    // Normalize each DoF's derivative by that DoF's spread so meters and
    // radians are commensurate, then take the per-sample maximum.
    for (Dof dof : kAllDofs) {
      PolynomialFit fit = fit_dof_curve(traj, dof, config.degree);
      const double sigma = sample_stddev(dof_values(traj, dof));
      if (sigma > 1e-12) {
        for (int i = 0; i < n; ++i) {
          const double d = std::abs(fit.derivative_at(traj.samples[i].t)) / sigma;
          scores[i] = std::max(scores[i], d);
        }
      }
      result.fits.push_back(std::move(fit));
    }
  } else {
    PolynomialFit fit = fit_dof_curve(traj, dof_from_name(config.dof), config.degree);
    for (int i = 0; i < n; ++i) {
      scores[i] = std::abs(fit.derivative_at(traj.samples[i].t));
    }
    result.fits.push_back(std::move(fit));
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return traj.samples[a].t < traj.samples[b].t;
  });
  // Scores within a relative rounding band of their neighbor count as tied;
  // re-sorting each tied run by time keeps the tie-break stable against
  // last-ulp noise in the fit.
  const auto tied = [&](int a, int b) {
    return std::abs(scores[a] - scores[b]) <=
           1e-9 * std::max({1.0, std::abs(scores[a]), std::abs(scores[b])});
  };
  for (int begin = 0; begin < n;) {
    int end = begin + 1;
    while (end < n && tied(order[end - 1], order[end])) ++end;
    std::sort(order.begin() + begin, order.begin() + end, [&](int a, int b) {
      return traj.samples[a].t < traj.samples[b].t;
    });
    begin = end;
  }

  result.ranked.reserve(n);
  for (int r = 0; r < n; ++r) {
    const int i = order[r];
    KeyPose kp;
    kp.pose_in_world = world_t_fixed * traj.samples[i].relative_pose;
    kp.t = traj.samples[i].t;
    kp.score = scores[i];
    kp.rank = r + 1;
    result.ranked.push_back(kp);
  }
  return result;
}

}  // namespace demoplan::demo
