#pragma once

#include <vector>

#include "demoplan/demo/keypose.hpp"
#include "demoplan/scenario/config.hpp"

namespace demoplan::scenario {

/// Thins a full ranking down to the configured candidate list: walks the
/// poses in rank order, keeps those inside the time window that are at least
/// the minimum separation away from every already-kept pose, and stops at
/// candidate_count. Kept poses are re-ranked 1..K in keep order, so scores
/// stay non-increasing with rank.
std::vector<demo::KeyPose> select_candidates(const demo::RankingResult& ranking,
                                             const DemoSettings& settings);

}  // namespace demoplan::scenario
