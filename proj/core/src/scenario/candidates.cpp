#include "demoplan/scenario/candidates.hpp"

#include <cmath>

namespace demoplan::scenario {

std::vector<demo::KeyPose> select_candidates(const demo::RankingResult& ranking,
                                             const DemoSettings& settings) {
  std::vector<demo::KeyPose> selected;
  if (settings.candidate_count <= 0 || ranking.ranked.empty()) {
    return selected;
  }

  double separation = settings.min_time_separation;
  if (separation < 0.0) {
    const double span = ranking.ranked.empty()
                            ? 0.0
                            : [&] {
                                double lo = ranking.ranked.front().t;
                                double hi = lo;
                                for (const auto& kp : ranking.ranked) {
                                  lo = std::min(lo, kp.t);
                                  hi = std::max(hi, kp.t);
                                }
                                return hi - lo;
                              }();
    separation = span / (2.0 * settings.candidate_count);
  }

  for (const auto& kp : ranking.ranked) {
    if (kp.t < settings.roi_begin || kp.t > settings.roi_end) continue;
    bool clear = true;
    for (const auto& kept : selected) {
      if (std::abs(kp.t - kept.t) < separation) {
        clear = false;
        break;
      }
    }
    if (!clear) continue;
    selected.push_back(kp);
    if (static_cast<int>(selected.size()) == settings.candidate_count) break;
  }

  for (std::size_t i = 0; i < selected.size(); ++i) {
    selected[i].rank = static_cast<int>(i) + 1;
  }
  return selected;
}

}  // namespace demoplan::scenario
