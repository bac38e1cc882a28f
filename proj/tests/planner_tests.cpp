#include <cmath>
#include <random>

#include <doctest.h>

#include "demoplan/geom/mesh.hpp"
#include "demoplan/geom/scene.hpp"
#include "demoplan/planner/guided.hpp"
#include "demoplan/planner/metric.hpp"
#include "demoplan/planner/path.hpp"
#include "demoplan/planner/repair.hpp"
#include "demoplan/planner/rrt_connect.hpp"
#include "support/oracles.hpp"
#include "support/test_util.hpp"

using namespace demoplan;
using testutil::to_oracle;

namespace {

geom::RigidTransform tpose(double x, double y, double z) {
  geom::RigidTransform t;
  t.translation = {x, y, z};
  return t;
}

geom::Scene empty_scene(double object_edge = 0.1) {
  return geom::Scene(geom::make_box({object_edge, object_edge, object_edge}), {});
}

// Two chambers separated by a wall at x in [-0.05, 0.05]; the only passage is
// a full-height slot of the given width centered at gap_y.
geom::TriMesh slotted_wall(double gap_y, double gap_width) {
  geom::TriMesh wall;
  const double lo_span = (gap_y - 0.5 * gap_width) - (-0.8);
  const double hi_span = 0.8 - (gap_y + 0.5 * gap_width);
  geom::append_box(wall, {0.1, lo_span, 0.6},
                   tpose(0.0, -0.8 + 0.5 * lo_span, 0.0));
  geom::append_box(wall, {0.1, hi_span, 0.6},
                   tpose(0.0, 0.8 - 0.5 * hi_span, 0.0));
  return wall;
}

geom::Scene corridor_scene(double gap_y = 0.0, double gap_width = 0.12) {
  return geom::Scene(geom::make_box({0.1, 0.1, 0.1}),
                     {{slotted_wall(gap_y, gap_width), geom::RigidTransform()}});
}

bool exact_equal(const geom::RigidTransform& a, const geom::RigidTransform& b) {
  return a.translation == b.translation &&
         a.rotation.coeffs() == b.rotation.coeffs();
}

void check_segment_contract(const planner::SegmentResult& result,
                            const geom::RigidTransform& start,
                            const geom::RigidTransform& goal,
                            const geom::Scene& scene,
                            const planner::PlannerConfig& config) {
  REQUIRE(result.status == planner::SegmentStatus::Success);
  REQUIRE(result.waypoints.size() >= 2);
  CHECK(exact_equal(result.waypoints.front(), start));
  CHECK(exact_equal(result.waypoints.back(), goal));
  for (size_t i = 1; i < result.waypoints.size(); ++i) {
    CHECK(planner::composite_distance(result.waypoints[i - 1], result.waypoints[i],
                                      config.rotation_weight) <=
          config.composite_step() + 1e-9);
  }
  planner::ObjectPath path;
  for (const auto& w : result.waypoints) {
    path.waypoints.push_back({w, planner::WaypointTag::Sampled, 0});
  }
  CHECK(planner::validate_path(path, scene, config.validation_resolution,
                               config.rotation_weight,
                               planner::CollisionChecker::Exhaustive)
            .valid);
}

// All-pairs SAT check of the moving object against every obstacle, applied to
// a dense resampling of the returned waypoints.
void check_against_sat_oracle(const std::vector<geom::RigidTransform>& waypoints,
                              const geom::Scene& scene, double resolution,
                              double rotation_weight) {
  const oracle::SimpleMesh object = to_oracle(scene.object_index().mesh());
  std::vector<std::pair<oracle::SimpleMesh, oracle::Mat4>> fixtures;
  for (const auto& obstacle : scene.obstacles()) {
    fixtures.push_back({to_oracle(obstacle.index.mesh()), to_oracle(obstacle.pose)});
  }
  for (size_t i = 1; i < waypoints.size(); ++i) {
    for (const auto& pose :
         planner::densify(waypoints[i - 1], waypoints[i], resolution, rotation_weight)) {
      for (const auto& [mesh, fixed] : fixtures) {
        CHECK_FALSE(oracle::meshes_collide(object, to_oracle(pose), mesh, fixed));
      }
    }
  }
}

}  // namespace

TEST_SUITE("planner.metric") {

TEST_CASE("composite distance mixes meters and weighted radians") {
  const geom::RigidTransform a;
  CHECK(planner::composite_distance(a, a, 0.1) == 0.0);
  CHECK(planner::composite_distance(a, tpose(1, 0, 0), 0.1) == doctest::Approx(1.0));

  geom::RigidTransform turned;
  turned.rotation = Eigen::Quaterniond(Eigen::AngleAxisd(M_PI / 2, Eigen::Vector3d::UnitZ()));
  CHECK(planner::composite_distance(a, turned, 0.5) ==
        doctest::Approx(0.5 * M_PI / 2).epsilon(1e-9));
  CHECK(planner::composite_distance(turned, a, 0.5) ==
        doctest::Approx(planner::composite_distance(a, turned, 0.5)));

  geom::RigidTransform both = turned;
  both.translation = {0, 2, 0};
  CHECK(planner::composite_distance(a, both, 0.5) ==
        doctest::Approx(2.0 + 0.5 * M_PI / 2).epsilon(1e-9));
}

TEST_CASE("densify keeps endpoints exact and spacing bounded") {
  std::mt19937_64 rng(23);
  const geom::RigidTransform a = testutil::random_transform(rng);
  const geom::RigidTransform b = testutil::random_transform(rng);
  const auto poses = planner::densify(a, b, 0.05, 0.1);
  REQUIRE(poses.size() >= 2);
  CHECK(exact_equal(poses.front(), a));
  CHECK(exact_equal(poses.back(), b));
  for (size_t i = 1; i < poses.size(); ++i) {
    CHECK(planner::composite_distance(poses[i - 1], poses[i], 0.1) <= 0.05 + 1e-9);
  }
}

}  // TEST_SUITE

TEST_SUITE("planner.segment") {

TEST_CASE("coincident endpoints produce a single waypoint without search") {
  const geom::Scene scene = empty_scene();
  const geom::RigidTransform p = tpose(0.2, -0.1, 0.05);
  planner::PlannerConfig config;
  const auto result = planner::plan_segment(p, p, scene, config);
  REQUIRE(result.status == planner::SegmentStatus::Success);
  REQUIRE(result.waypoints.size() == 1);
  CHECK(exact_equal(result.waypoints.front(), p));
  CHECK(result.extensions == 0);
}

TEST_CASE("free space connects directly") {
  const geom::Scene scene = empty_scene();
  planner::PlannerConfig config;
  config.rng_seed = 7;
  const geom::RigidTransform start;
  const geom::RigidTransform goal = tpose(0.5, 0.1, 0.0);
  const auto result = planner::plan_segment(start, goal, scene, config);
  check_segment_contract(result, start, goal, scene, config);
}

TEST_CASE("a corridor 1.2x the object width is passable") {
  const geom::Scene scene = corridor_scene(0.0, 0.12);
  planner::PlannerConfig config;
  config.rng_seed = 11;
  config.t_e = 20.0;
  config.max_extensions = 60000;
  const geom::RigidTransform start = tpose(-0.4, 0.0, 0.0);
  const geom::RigidTransform goal = tpose(0.4, 0.0, 0.0);
  const auto result = planner::plan_segment(start, goal, scene, config);
  check_segment_contract(result, start, goal, scene, config);
  check_against_sat_oracle(result.waypoints, scene, 0.005, config.rotation_weight);
}

TEST_CASE("colliding endpoints are rejected up front") {
  const geom::Scene scene = corridor_scene();
  planner::PlannerConfig config;
  const auto bad_start = planner::plan_segment(tpose(0.0, -0.5, 0.0),
                                               tpose(0.4, 0.0, 0.0), scene, config);
  CHECK(bad_start.status == planner::SegmentStatus::InfeasibleInput);
  CHECK(bad_start.waypoints.empty());
  const auto bad_goal = planner::plan_segment(tpose(-0.4, 0.0, 0.0),
                                              tpose(0.0, 0.5, 0.0), scene, config);
  CHECK(bad_goal.status == planner::SegmentStatus::InfeasibleInput);
}

TEST_CASE("a sealed wall times out against the extension budget") {
  geom::TriMesh wall;
  geom::append_box(wall, {0.1, 1.6, 0.6}, tpose(0, 0, 0));
  const geom::Scene scene(geom::make_box({0.1, 0.1, 0.1}),
                          {{wall, geom::RigidTransform()}});
  planner::PlannerConfig config;
  config.rng_seed = 3;
  config.t_e = 5.0;
  config.max_extensions = 400;
  const auto result = planner::plan_segment(tpose(-0.4, 0, 0), tpose(0.4, 0, 0),
                                            scene, config);
  CHECK(result.status == planner::SegmentStatus::Timeout);
  CHECK(result.extensions <= config.max_extensions);
  CHECK(result.waypoints.empty());
}

TEST_CASE("the wall-clock deadline binds when generous budgets do not") {
  const geom::Scene scene = corridor_scene(0.5, 0.105);
  planner::PlannerConfig config;
  config.rng_seed = 5;
  config.t_e = 0.02;
  config.max_extensions = 100000000;
  const auto result = planner::plan_segment(tpose(-0.4, -0.5, 0), tpose(0.4, -0.5, 0),
                                            scene, config);
  if (result.status == planner::SegmentStatus::Timeout) {
    CHECK(result.elapsed_s >= config.t_e);
    CHECK(result.elapsed_s < 1.0);
  }
}

TEST_CASE("sampling bounds cover obstacles and anchors with margin") {
  const geom::Scene scene = corridor_scene();
  const geom::RigidTransform far_anchor = tpose(2.0, 0.0, 0.0);
  const auto bounds = planner::derive_sampling_bounds(scene, {far_anchor});
  CHECK(bounds.position.lo.x() <= scene.obstacle_bounds().lo.x());
  CHECK(bounds.position.hi.x() >= 2.0);
  CHECK(bounds.position.lo.y() <= scene.obstacle_bounds().lo.y());
  CHECK(bounds.position.hi.z() >= scene.obstacle_bounds().hi.z());

  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const auto pose = planner::random_pose(bounds, rng);
    CHECK(pose.translation.x() >= bounds.position.lo.x());
    CHECK(pose.translation.x() <= bounds.position.hi.x());
    CHECK(pose.translation.y() >= bounds.position.lo.y());
    CHECK(pose.translation.y() <= bounds.position.hi.y());
    CHECK(pose.translation.z() >= bounds.position.lo.z());
    CHECK(pose.translation.z() <= bounds.position.hi.z());
    CHECK(std::abs(pose.rotation.norm() - 1.0) < 1e-12);
  }
}

}  // TEST_SUITE

TEST_SUITE("planner.repair") {

TEST_CASE("collision-free poses come back untouched") {
  const geom::Scene scene = corridor_scene();
  planner::PlannerConfig config;
  std::mt19937_64 rng(31);
  const geom::RigidTransform pose = tpose(-0.4, 0.2, 0.0);
  const auto result = planner::repair_key_pose(pose, scene, config, rng);
  CHECK(result.success);
  CHECK(result.samples_drawn == 0);
  CHECK(exact_equal(result.pose, pose));
}

TEST_CASE("a shallow penetration is pushed out within the shell radius") {
  const geom::Scene scene = corridor_scene();
  planner::PlannerConfig config;
  std::mt19937_64 rng(37);
  // Object top edge reaches 2 mm into the wall above the slot.
  const geom::RigidTransform pose = tpose(0.0, 0.012, 0.0);
  REQUIRE(geom::pose_in_collision(pose, scene));
  const auto result = planner::repair_key_pose(pose, scene, config, rng);
  REQUIRE(result.success);
  CHECK(result.samples_drawn > 0);
  CHECK_FALSE(geom::pose_in_collision(result.pose, scene));
  CHECK(planner::composite_distance(pose, result.pose, config.rotation_weight) <=
        result.shell_radius + 1e-9);
  CHECK(result.shell_radius <= config.repair_radius_schedule.back());
}

TEST_CASE("a deeply wedged pose exhausts the sample budget and fails") {
  // Six plates caging a cube that pokes through all of them; freeing it takes
  // more composite motion than the largest repair shell allows.
  std::vector<std::pair<geom::TriMesh, geom::RigidTransform>> plates;
  plates.emplace_back(geom::make_box({0.01, 0.3, 0.3}), tpose(0.035, 0, 0));
  plates.emplace_back(geom::make_box({0.01, 0.3, 0.3}), tpose(-0.035, 0, 0));
  plates.emplace_back(geom::make_box({0.3, 0.01, 0.3}), tpose(0, 0.035, 0));
  plates.emplace_back(geom::make_box({0.3, 0.01, 0.3}), tpose(0, -0.035, 0));
  plates.emplace_back(geom::make_box({0.3, 0.3, 0.01}), tpose(0, 0, 0.035));
  plates.emplace_back(geom::make_box({0.3, 0.3, 0.01}), tpose(0, 0, -0.035));
  const geom::Scene scene(geom::make_box({0.1, 0.1, 0.1}), plates);
  planner::PlannerConfig config;
  std::mt19937_64 rng(41);
  REQUIRE(geom::pose_in_collision(geom::RigidTransform(), scene));
  const auto result = planner::repair_key_pose(geom::RigidTransform(), scene, config, rng);
  CHECK_FALSE(result.success);
  CHECK(result.samples_drawn == config.repair_samples_max);
  CHECK(result.shell_radius == doctest::Approx(config.repair_radius_schedule.back()));
}

TEST_CASE("perturbations stay inside the requested composite ball") {
  std::mt19937_64 rng(43);
  const geom::RigidTransform center = testutil::random_transform(rng);
  for (double radius : {0.005, 0.05, 0.3}) {
    for (int i = 0; i < 200; ++i) {
      const auto moved = planner::perturb_pose(center, radius, 0.1, rng);
      CHECK(planner::composite_distance(center, moved, 0.1) <= radius + 1e-9);
    }
  }
}

}  // TEST_SUITE

TEST_SUITE("planner.validate") {

TEST_CASE("single free waypoint is valid") {
  const geom::Scene scene = corridor_scene();
  planner::ObjectPath path;
  path.waypoints.push_back({tpose(-0.4, 0, 0), planner::WaypointTag::Start, 0});
  CHECK(planner::validate_path(path, scene, 0.01, 0.1).valid);
}

TEST_CASE("a waypoint inside an obstacle is reported at its segment") {
  const geom::Scene scene = corridor_scene();
  planner::ObjectPath path;
  path.waypoints.push_back({tpose(-0.4, 0, 0), planner::WaypointTag::Start, 0});
  path.waypoints.push_back({tpose(-0.2, 0, 0), planner::WaypointTag::Sampled, 0});
  path.waypoints.push_back({tpose(0.0, 0.5, 0), planner::WaypointTag::Sampled, 0});
  path.waypoints.push_back({tpose(0.4, 0, 0), planner::WaypointTag::Goal, 0});
  const auto verdict = planner::validate_path(path, scene, 0.01, 0.1);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.segment == 1);
  CHECK(verdict.param > 0.0);
  CHECK(verdict.param <= 1.0);
  CHECK(geom::pose_in_collision(verdict.pose, scene));
}

TEST_CASE("a chord crossing the wall between free endpoints is caught") {
  const geom::Scene scene = corridor_scene(0.5, 0.12);
  planner::ObjectPath path;
  path.waypoints.push_back({tpose(-0.4, 0, 0), planner::WaypointTag::Start, 0});
  path.waypoints.push_back({tpose(0.4, 0, 0), planner::WaypointTag::Goal, 0});
  const auto verdict = planner::validate_path(path, scene, 0.01, 0.1);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.segment == 0);
  const auto exhaustive = planner::validate_path(path, scene, 0.01, 0.1,
                                                 planner::CollisionChecker::Exhaustive);
  CHECK_FALSE(exhaustive.valid);
  CHECK(exhaustive.segment == verdict.segment);
  CHECK(exhaustive.param == doctest::Approx(verdict.param));
}

TEST_CASE("an in-collision start is reported as segment zero at param zero") {
  const geom::Scene scene = corridor_scene();
  planner::ObjectPath path;
  path.waypoints.push_back({tpose(0.0, 0.5, 0), planner::WaypointTag::Start, 0});
  const auto verdict = planner::validate_path(path, scene, 0.01, 0.1);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.segment == 0);
  CHECK(verdict.param == 0.0);
}

}  // TEST_SUITE

TEST_SUITE("planner.guided") {

TEST_CASE("unobstructed problems need no key poses") {
  const geom::Scene scene = empty_scene();
  planner::PlannerConfig config;
  config.rng_seed = 47;
  planner::PlanningProblem problem(scene, tpose(0, 0, 0), tpose(0.3, 0, 0), {}, config);
  CHECK(problem.endpoints_free());
  const auto result = planner::plan_with_demonstration(problem);
  REQUIRE(result.status == planner::PlanStatus::Success);
  CHECK(result.used_key_pose_count == 0);
  REQUIRE(result.attempts.size() == 1);
  CHECK(result.attempts[0].inserted_rank == 0);
  CHECK(result.attempts[0].success);
  CHECK(result.path.waypoints.front().tag == planner::WaypointTag::Start);
  CHECK(result.path.waypoints.back().tag == planner::WaypointTag::Goal);
}

TEST_CASE("infeasible endpoints fail before any planning") {
  const geom::Scene scene = corridor_scene();
  planner::PlannerConfig config;
  planner::PlanningProblem problem(scene, tpose(0, 0.5, 0), tpose(0.4, 0, 0), {},
                                   config);
  CHECK_FALSE(problem.endpoints_free());
  const auto result = planner::plan_with_demonstration(problem);
  CHECK(result.status == planner::PlanStatus::InfeasibleInput);
  CHECK(result.path.empty());
  CHECK(result.segment_calls == 0);
}

TEST_CASE("a key pose in the slot rescues a budget-starved direct attempt") {
  const geom::Scene scene = corridor_scene(0.5, 0.12);
  planner::PlannerConfig config;
  config.rng_seed = 53;
  config.t_e = 10.0;
  config.max_extensions = 300;

  demo::KeyPose key;
  key.pose_in_world = tpose(0.0, 0.5, 0.0);
  key.t = 2.0;
  key.score = 1.0;
  key.rank = 1;

  planner::PlanningProblem problem(scene, tpose(-0.4, 0.2, 0), tpose(0.4, 0.2, 0),
                                   {key}, config);
  const auto result = planner::plan_with_demonstration(problem);
  REQUIRE(result.status == planner::PlanStatus::Success);
  CHECK(result.used_key_pose_count == 1);
  REQUIRE(result.attempts.size() == 2);
  CHECK(result.attempts[0].inserted_rank == 0);
  CHECK_FALSE(result.attempts[0].success);
  CHECK(result.attempts[0].failed_segment >= 0);
  CHECK(result.attempts[1].inserted_rank == 1);
  CHECK(result.attempts[1].success);

  bool saw_key = false;
  for (const auto& w : result.path.waypoints) {
    if (w.tag == planner::WaypointTag::KeyPose) {
      saw_key = true;
      CHECK(w.key_rank == 1);
      CHECK(planner::composite_distance(w.pose, key.pose_in_world,
                                        config.rotation_weight) < 1e-12);
    }
  }
  CHECK(saw_key);
  CHECK(planner::validate_path(result.path, scene, config.validation_resolution,
                               config.rotation_weight,
                               planner::CollisionChecker::Exhaustive)
            .valid);
}

TEST_CASE("key poses are consumed in rank order at their timestamps") {
  // Two walls, two offset slots; each wall needs its own key pose.
  geom::TriMesh walls;
  const auto add_wall = [&walls](double x, double gap_y) {
    const double lo_span = (gap_y - 0.1) - (-0.8);
    const double hi_span = 0.8 - (gap_y + 0.1);
    geom::append_box(walls, {0.08, lo_span, 0.6}, tpose(x, -0.8 + 0.5 * lo_span, 0));
    geom::append_box(walls, {0.08, hi_span, 0.6}, tpose(x, 0.8 - 0.5 * hi_span, 0));
  };
  add_wall(-0.15, 0.45);
  add_wall(0.15, -0.45);
  const geom::Scene scene(geom::make_box({0.1, 0.1, 0.1}),
                          {{walls, geom::RigidTransform()}});

  planner::PlannerConfig config;
  config.rng_seed = 59;
  config.t_e = 10.0;
  config.max_extensions = 900;

  demo::KeyPose first;
  first.pose_in_world = tpose(-0.15, 0.45, 0.0);
  first.t = 1.0;
  first.score = 2.0;
  first.rank = 1;
  demo::KeyPose second;
  second.pose_in_world = tpose(0.15, -0.45, 0.0);
  second.t = 3.0;
  second.score = 1.0;
  second.rank = 2;

  planner::PlanningProblem problem(scene, tpose(-0.45, -0.1, 0), tpose(0.45, 0.1, 0),
                                   {first, second}, config);
  const auto result = planner::plan_with_demonstration(problem);
  REQUIRE(result.status == planner::PlanStatus::Success);
  CHECK(result.used_key_pose_count == 2);
  REQUIRE(result.attempts.size() == 3);
  for (size_t i = 0; i < result.attempts.size(); ++i) {
    CHECK(result.attempts[i].inserted_rank == static_cast<int>(i));
    CHECK(result.attempts[i].success == (i + 1 == result.attempts.size()));
  }

  std::vector<int> key_ranks;
  for (const auto& w : result.path.waypoints) {
    if (w.tag == planner::WaypointTag::KeyPose) key_ranks.push_back(w.key_rank);
  }
  CHECK(key_ranks == std::vector<int>{1, 2});

  const auto& final_attempt = result.attempts.back();
  REQUIRE(final_attempt.segment_seconds.size() == 3);
  CHECK(final_attempt.segment_seconds.front() == 0.0);

  CHECK(planner::validate_path(result.path, scene, config.validation_resolution,
                               config.rotation_weight,
                               planner::CollisionChecker::Exhaustive)
            .valid);
  check_against_sat_oracle(
      [&result] {
        std::vector<geom::RigidTransform> poses;
        for (const auto& w : result.path.waypoints) poses.push_back(w.pose);
        return poses;
      }(),
      scene, 0.005, config.rotation_weight);
}

TEST_CASE("an in-collision key pose is repaired before use") {
  const geom::Scene scene = corridor_scene(0.5, 0.12);
  planner::PlannerConfig config;
  config.rng_seed = 61;
  config.t_e = 10.0;
  config.max_extensions = 300;

  demo::KeyPose key;
  key.pose_in_world = tpose(0.0, 0.512, 0.0);  // 2 mm into the slot's upper wall
  key.t = 2.0;
  key.score = 1.0;
  key.rank = 1;
  REQUIRE(geom::pose_in_collision(key.pose_in_world, scene));

  planner::PlanningProblem problem(scene, tpose(-0.4, 0.2, 0), tpose(0.4, 0.2, 0),
                                   {key}, config);
  const auto result = planner::plan_with_demonstration(problem);
  REQUIRE(result.status == planner::PlanStatus::Success);
  CHECK(result.repaired_ranks == std::vector<int>{1});
  CHECK(result.discarded_ranks.empty());

  bool saw_repaired = false;
  for (const auto& w : result.path.waypoints) {
    if (w.tag == planner::WaypointTag::Repaired) {
      saw_repaired = true;
      CHECK(w.key_rank == 1);
      CHECK_FALSE(geom::pose_in_collision(w.pose, scene));
    }
  }
  CHECK(saw_repaired);
}

TEST_CASE("exhausted candidates end in a timeout verdict") {
  geom::TriMesh wall;
  geom::append_box(wall, {0.1, 1.6, 0.6}, tpose(0, 0, 0));
  const geom::Scene scene(geom::make_box({0.1, 0.1, 0.1}),
                          {{wall, geom::RigidTransform()}});
  planner::PlannerConfig config;
  config.rng_seed = 67;
  config.t_e = 1.0;
  config.max_extensions = 200;

  demo::KeyPose useless;
  useless.pose_in_world = tpose(-0.3, 0.3, 0.0);
  useless.t = 1.0;
  useless.score = 1.0;
  useless.rank = 1;

  planner::PlanningProblem problem(scene, tpose(-0.4, 0, 0), tpose(0.4, 0, 0),
                                   {useless}, config);
  const auto result = planner::plan_with_demonstration(problem);
  CHECK(result.status == planner::PlanStatus::Timeout);
  CHECK(result.attempts.size() == 2);
  for (const auto& attempt : result.attempts) {
    CHECK_FALSE(attempt.success);
    CHECK(attempt.failed_segment >= 0);
  }
  CHECK(result.path.empty());
}

TEST_CASE("the same seed reproduces the same path exactly") {
  const geom::Scene scene = corridor_scene(0.0, 0.15);
  planner::PlannerConfig config;
  config.rng_seed = 71;
  config.t_e = 10.0;
  config.max_extensions = 20000;

  const geom::RigidTransform start = tpose(-0.4, 0.3, 0);
  const geom::RigidTransform goal = tpose(0.4, -0.3, 0);
  planner::PlanningProblem problem(scene, start, goal, {}, config);
  const auto first = planner::plan_with_demonstration(problem);
  const auto second = planner::plan_with_demonstration(problem);
  REQUIRE(first.status == planner::PlanStatus::Success);
  REQUIRE(second.status == planner::PlanStatus::Success);
  REQUIRE(first.path.waypoints.size() == second.path.waypoints.size());
  for (size_t i = 0; i < first.path.waypoints.size(); ++i) {
    CHECK(exact_equal(first.path.waypoints[i].pose, second.path.waypoints[i].pose));
    CHECK(first.path.waypoints[i].tag == second.path.waypoints[i].tag);
  }
  CHECK(first.used_key_pose_count == second.used_key_pose_count);
}

TEST_CASE("disabling the dynamic domain and goal bias still solves free space") {
  const geom::Scene scene = empty_scene();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    planner::PlannerConfig config;
    config.rng_seed = seed;
    config.dynamic_domain_radius = 0.0;
    config.goal_bias = 0.0;
    planner::PlanningProblem problem(scene, tpose(0, 0, 0), tpose(0.3, 0.1, 0), {},
                                     config);
    const auto result = planner::plan_with_demonstration(problem);
    CHECK(result.status == planner::PlanStatus::Success);
  }
}

TEST_CASE("elapsed time stays within the per-attempt budget") {
  const geom::Scene scene = corridor_scene(0.5, 0.12);
  planner::PlannerConfig config;
  config.rng_seed = 73;
  config.t_e = 0.25;
  config.max_extensions = 100000000;

  demo::KeyPose key;
  key.pose_in_world = tpose(0.0, 0.5, 0.0);
  key.t = 2.0;
  key.score = 1.0;
  key.rank = 1;
  planner::PlanningProblem problem(scene, tpose(-0.4, 0.2, 0), tpose(0.4, 0.2, 0),
                                   {key}, config);
  const auto result = planner::plan_with_demonstration(problem);
  int segments = 0;
  for (const auto& attempt : result.attempts) {
    segments += static_cast<int>(attempt.segment_seconds.size());
    for (double s : attempt.segment_seconds) {
      CHECK(s <= config.t_e * 1.5 + 0.05);
    }
  }
  CHECK(result.elapsed_s <= segments * config.t_e * 1.5 + 1.0);
}

}  // TEST_SUITE
