#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <doctest.h>

#include "demoplan/demo/curve_fit.hpp"
#include "demoplan/demo/keypose.hpp"
#include "demoplan/demo/pose_log.hpp"
#include "demoplan/demo/trajectory.hpp"
#include "demoplan/scenario/candidates.hpp"
#include "support/oracles.hpp"
#include "support/test_util.hpp"

using namespace demoplan;
using testutil::to_oracle;

namespace {

demo::IngestReport ingest_text(const std::string& text) {
  std::istringstream in(text);
  return demo::ingest_pose_log(in, "inline");
}

}  // namespace

TEST_SUITE("demo.ingest") {

TEST_CASE("relative records pass through") {
  const auto report = ingest_text(
      "# units: m,s\n"
      "t,x,y,z,qw,qx,qy,qz\n"
      "0,0,0,0,1,0,0,0\n"
      "1,0,0,0,1,0,0,0\n");
  CHECK(report.trajectory.samples.size() == 2);
  CHECK(report.rejected_nonfinite == 0);
  CHECK(geom::is_near_identity(report.trajectory.samples[0].relative_pose));
  CHECK(report.trajectory.duration() == doctest::Approx(1.0));
}

TEST_CASE("world pairs with equal poses give the identity relative pose") {
  std::mt19937_64 rng(3);
  std::vector<std::pair<double, std::pair<geom::RigidTransform, geom::RigidTransform>>>
      rows;
  for (int i = 0; i < 3; ++i) {
    const geom::RigidTransform t = testutil::random_transform(rng);
    rows.push_back({static_cast<double>(i), {t, t}});
  }
  const auto report = ingest_text(testutil::world_pair_log(rows));
  for (const auto& s : report.trajectory.samples) {
    CHECK(geom::is_near_identity(s.relative_pose, 1e-9));
  }
}

TEST_CASE("world pairs match the inverse-product matrix oracle") {
  const geom::RigidTransform t_g = geom::pose_vector_to_transform(
      {0.0, 0.0, 0.0, 0.0, 0.0, M_PI / 2});
  const geom::RigidTransform t_l = geom::pose_vector_to_transform(
      {0.4, -0.2, 0.1, 0.0, 0.0, 0.0});
  const auto report = ingest_text(
      testutil::world_pair_log({{0.0, {t_g, t_l}}, {1.0, {t_g, t_l}}}));

  const oracle::Mat4 expect =
      oracle::mul(oracle::inverse(to_oracle(t_g)), to_oracle(t_l));
  CHECK(oracle::max_abs_diff(to_oracle(report.trajectory.samples[0].relative_pose),
                             expect) < 1e-9);
}

TEST_CASE("non-finite records are dropped and counted") {
  const auto report = ingest_text(
      "# units: m,s\n"
      "t,x,y,z,qw,qx,qy,qz\n"
      "0,0,0,0,1,0,0,0\n"
      "0.5,nan,0,0,1,0,0,0\n"
      "0.7,0,inf,0,1,0,0,0\n"
      "1,0,0,0,1,0,0,0\n");
  CHECK(report.trajectory.samples.size() == 2);
  CHECK(report.rejected_nonfinite == 2);
}

TEST_CASE("duplicate timestamps collapse to the last record") {
  const auto report = ingest_text(
      "# units: m,s\n"
      "t,x,y,z,qw,qx,qy,qz\n"
      "0,0,0,0,1,0,0,0\n"
      "1,0.25,0,0,1,0,0,0\n"
      "1,0.75,0,0,1,0,0,0\n"
      "2,1,0,0,1,0,0,0\n");
  CHECK(report.trajectory.samples.size() == 3);
  CHECK(report.collapsed_duplicates == 1);
  CHECK(report.trajectory.samples[1].relative_pose.translation.x() ==
        doctest::Approx(0.75));
  for (size_t i = 1; i < report.trajectory.samples.size(); ++i) {
    CHECK(report.trajectory.samples[i].t > report.trajectory.samples[i - 1].t);
  }
}

TEST_CASE("malformed inputs are rejected") {
  SUBCASE("fewer than two valid records") {
    CHECK_THROWS_AS(ingest_text("# units: m,s\nt,x,y,z,qw,qx,qy,qz\n0,0,0,0,1,0,0,0\n"),
                    std::runtime_error);
  }
  SUBCASE("missing units declaration") {
    CHECK_THROWS_AS(ingest_text("t,x,y,z,qw,qx,qy,qz\n0,0,0,0,1,0,0,0\n1,0,0,0,1,0,0,0\n"),
                    std::runtime_error);
  }
  SUBCASE("wrong units") {
    CHECK_THROWS_AS(
        ingest_text("# units: mm,s\nt,x,y,z,qw,qx,qy,qz\n0,0,0,0,1,0,0,0\n"),
        std::runtime_error);
  }
  SUBCASE("record not matching the declared schema") {
    CHECK_THROWS_AS(ingest_text("# units: m,s\n"
                                "t,x,y,z,qw,qx,qy,qz\n"
                                "0,0,0,0,1,0,0,0\n"
                                "1,0,0,0,1,0,0,0,0,0,0,1,0,0,0\n"),
                    std::runtime_error);
  }
  SUBCASE("unknown header") {
    CHECK_THROWS_AS(ingest_text("# units: m,s\na,b,c\n1,2,3\n"), std::runtime_error);
  }
}

TEST_CASE("world mapping is left-composition") {
  std::mt19937_64 rng(5);
  demo::DemoTrajectory traj;
  for (int i = 0; i < 5; ++i) {
    traj.samples.push_back({0.1 * i, testutil::random_transform(rng)});
  }

  SUBCASE("identity keeps relative poses") {
    const auto world = demo::to_world_keyposes(traj, geom::RigidTransform::Identity());
    REQUIRE(world.size() == traj.samples.size());
    for (size_t i = 0; i < world.size(); ++i) {
      CHECK(world[i].t == traj.samples[i].t);
      CHECK(geom::translation_distance(world[i].pose,
                                       traj.samples[i].relative_pose) < 1e-12);
    }
  }
  SUBCASE("identity relative pose lands on the fixed-object pose") {
    demo::DemoTrajectory id_traj;
    id_traj.samples = {{0.0, geom::RigidTransform::Identity()},
                       {1.0, geom::RigidTransform::Identity()}};
    const geom::RigidTransform t_g = testutil::random_transform(rng);
    const auto world = demo::to_world_keyposes(id_traj, t_g);
    CHECK(geom::translation_distance(world[0].pose, t_g) < 1e-12);
    CHECK(geom::rotation_angle_between(world[0].pose, t_g) < 1e-12);
  }
  SUBCASE("random products match the matrix oracle") {
    const geom::RigidTransform t_g = testutil::random_transform(rng);
    const auto world = demo::to_world_keyposes(traj, t_g);
    for (size_t i = 0; i < world.size(); ++i) {
      const oracle::Mat4 expect =
          oracle::mul(to_oracle(t_g), to_oracle(traj.samples[i].relative_pose));
      CHECK(oracle::max_abs_diff(to_oracle(world[i].pose), expect) < 1e-9);
    }
  }
}

TEST_CASE("recorded world pairs recompose to the recorded object pose") {
  std::mt19937_64 rng(7);
  const geom::RigidTransform t_g = testutil::random_transform(rng);
  std::vector<geom::RigidTransform> t_l;
  std::vector<std::pair<double, std::pair<geom::RigidTransform, geom::RigidTransform>>>
      rows;
  for (int i = 0; i < 20; ++i) {
    t_l.push_back(testutil::random_transform(rng));
    rows.push_back({0.1 * i, {t_g, t_l.back()}});
  }

  const auto report = ingest_text(testutil::world_pair_log(rows));
  const auto world = demo::to_world_keyposes(report.trajectory, t_g);
  REQUIRE(world.size() == t_l.size());
  for (size_t i = 0; i < world.size(); ++i) {
    CHECK(geom::translation_distance(world[i].pose, t_l[i]) < 1e-9);
    CHECK(geom::rotation_angle_between(world[i].pose, t_l[i]) < 1e-9);
  }
}

}  // TEST_SUITE

TEST_SUITE("demo.fit") {

TEST_CASE("constant data fits exactly") {
  const auto traj = testutil::pitch_trajectory({0, 1, 2, 3, 4},
                                               {0.5, 0.5, 0.5, 0.5, 0.5});
  const demo::PolynomialFit fit = demo::fit_dof_curve(traj, demo::Dof::Pitch, 3);
  REQUIRE(fit.coefficients.size() == 4);
  CHECK(fit.coefficients[0] == doctest::Approx(0.5).epsilon(1e-12));
  for (int j = 1; j < 4; ++j) {
    CHECK(std::abs(fit.coefficients[j]) < 1e-9);
  }
  CHECK(fit.rms_residual < 1e-12);
}

TEST_CASE("cubic data is recovered against the long-double oracle") {
  // p(t) = t^3 - 2 t, scaled into a safe angle range.
  const double scale = 0.2;
  std::vector<double> times, values;
  for (int i = 0; i < 20; ++i) {
    const double t = -1.5 + 3.0 * i / 19.0;
    times.push_back(t);
    values.push_back(scale * (t * t * t - 2.0 * t));
  }
  const auto traj = testutil::pitch_trajectory(times, values);
  const demo::PolynomialFit fit = demo::fit_dof_curve(traj, demo::Dof::Pitch, 3);

  const std::vector<double> expect = oracle::remap_to_normalized(
      {0.0, -2.0 * scale, 0.0, scale}, times.front(), times.back());
  REQUIRE(fit.coefficients.size() == expect.size());
  for (size_t j = 0; j < expect.size(); ++j) {
    CHECK(fit.coefficients[j] == doctest::Approx(expect[j]).epsilon(1e-6));
  }

  const std::vector<double> oracle_fit =
      oracle::polyfit_normalized(times, values, 3, times.front(), times.back());
  for (size_t j = 0; j < oracle_fit.size(); ++j) {
    CHECK(fit.coefficients[j] == doctest::Approx(oracle_fit[j]).epsilon(1e-6));
  }
  CHECK(fit.rms_residual < 1e-9);
}

TEST_CASE("degree clamps to sample count minus one") {
  const auto traj = testutil::pitch_trajectory({0, 1, 2}, {0.0, 0.1, 0.4});
  const demo::PolynomialFit fit = demo::fit_dof_curve(traj, demo::Dof::Pitch, 7);
  CHECK(fit.degree == 2);
  CHECK(fit.coefficients.size() == 3);
}

TEST_CASE("degenerate time ranges are rejected") {
  demo::DemoTrajectory traj;
  geom::PoseVector p;
  traj.samples = {{1.0, geom::pose_vector_to_transform(p)},
                  {1.0, geom::pose_vector_to_transform(p)},
                  {1.0, geom::pose_vector_to_transform(p)}};
  CHECK_THROWS_AS(demo::fit_dof_curve(traj, demo::Dof::Pitch, 2), std::runtime_error);
}

TEST_CASE("angle tracks unwrap before fitting") {
  const auto unwrapped = demo::unwrap_angles({3.0, -3.1, 3.1});
  REQUIRE(unwrapped.size() == 3);
  CHECK(unwrapped[0] == 3.0);
  CHECK(unwrapped[1] ==
        doctest::Approx(-3.1 + 2.0 * std::numbers::pi).epsilon(1e-12));
  CHECK(unwrapped[2] == doctest::Approx(3.1).epsilon(1e-12));

  // A yaw sweep crossing pi must fit as a smooth line, not a jump.
  std::vector<double> times;
  demo::DemoTrajectory traj;
  for (int i = 0; i <= 20; ++i) {
    const double t = i * 0.1;
    geom::PoseVector p;
    p.yaw = 2.8 + 0.06 * i;  // crosses pi around i == 6
    traj.samples.push_back({t, geom::pose_vector_to_transform(p)});
  }
  const demo::PolynomialFit fit = demo::fit_dof_curve(traj, demo::Dof::Yaw, 3);
  CHECK(fit.rms_residual < 1e-6);
  CHECK(fit.derivative_at(1.0) == doctest::Approx(0.6).epsilon(1e-3));
}

TEST_CASE("derivative matches a central difference of the fitted curve") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coeff(-0.3, 0.3);
  std::vector<double> times, values;
  for (int i = 0; i < 30; ++i) {
    times.push_back(0.25 * i);
    values.push_back(coeff(rng));
  }
  const auto traj = testutil::pitch_trajectory(times, values);
  const demo::PolynomialFit fit = demo::fit_dof_curve(traj, demo::Dof::Pitch, 7);

  const double h = 1e-6;
  for (double s = -0.9; s <= 0.9; s += 0.15) {
    const double fd =
        (fit.normalized_value(s + h) - fit.normalized_value(s - h)) / (2.0 * h);
    CHECK(fit.normalized_derivative(s) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("noiseless polynomials reproduce their analytic derivative") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> coeff(-0.2, 0.2);
  for (int degree = 1; degree <= 7; ++degree) {
    std::vector<double> poly(degree + 1);
    for (auto& c : poly) c = coeff(rng);

    std::vector<double> times, values;
    for (int i = 0; i < 40; ++i) {
      const double t = 10.0 * i / 39.0;
      const double s = 2.0 * (t / 10.0) - 1.0;
      times.push_back(t);
      values.push_back(oracle::polyval(poly, s));
    }
    const auto traj = testutil::pitch_trajectory(times, values);
    const demo::PolynomialFit fit = demo::fit_dof_curve(traj, demo::Dof::Pitch, degree);

    for (double t : times) {
      const double s = fit.to_normalized(t);
      CHECK(fit.normalized_derivative(s) ==
            doctest::Approx(oracle::polyderiv(poly, s)).epsilon(1e-6));
    }
  }
}

}  // TEST_SUITE

TEST_SUITE("demo.rank") {

TEST_CASE("constant trajectories rank in time order") {
  const auto traj = testutil::pitch_trajectory({0, 1, 2, 3, 4},
                                               {0.2, 0.2, 0.2, 0.2, 0.2});
  const auto result = demo::rank_key_poses(traj, {"pitch", 3});
  REQUIRE(result.ranked.size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(result.ranked[i].score == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(result.ranked[i].t == doctest::Approx(static_cast<double>(i)));
    CHECK(result.ranked[i].rank == i + 1);
  }
}

TEST_CASE("quadratic pitch ranks by the analytic 2|t| rule") {
  const double scale = 0.08;
  std::vector<double> times = {-2, -1, 0, 1, 2};
  std::vector<double> values;
  for (double t : times) values.push_back(scale * t * t);
  const auto traj = testutil::pitch_trajectory(times, values);

  const auto result = demo::rank_key_poses(traj, {"pitch", 2});
  REQUIRE(result.ranked.size() == 5);

  const std::vector<double> expected_times = {-2, 2, -1, 1, 0};
  for (size_t i = 0; i < expected_times.size(); ++i) {
    CHECK(result.ranked[i].t == doctest::Approx(expected_times[i]));
    CHECK(result.ranked[i].score ==
          doctest::Approx(scale * 2.0 * std::abs(expected_times[i])).epsilon(1e-6));
    CHECK(result.ranked[i].rank == static_cast<int>(i) + 1);
  }
}

TEST_CASE("ranking order is invariant to time shift and value scale") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> coeff(-0.25, 0.25);
  std::vector<double> times, values;
  for (int i = 0; i < 25; ++i) {
    times.push_back(0.4 * i);
    values.push_back(coeff(rng));
  }
  const auto base =
      demo::rank_key_poses(testutil::pitch_trajectory(times, values), {"pitch", 5});

  SUBCASE("uniform time shift") {
    std::vector<double> shifted = times;
    for (auto& t : shifted) t += 37.5;
    const auto moved = demo::rank_key_poses(
        testutil::pitch_trajectory(shifted, values), {"pitch", 5});
    for (size_t i = 0; i < base.ranked.size(); ++i) {
      CHECK(moved.ranked[i].t == doctest::Approx(base.ranked[i].t + 37.5));
      CHECK(moved.ranked[i].score == doctest::Approx(base.ranked[i].score).epsilon(1e-9));
    }
  }
  SUBCASE("positive value scaling") {
    std::vector<double> scaled = values;
    for (auto& v : scaled) v *= 3.0;
    const auto bigger = demo::rank_key_poses(
        testutil::pitch_trajectory(times, scaled), {"pitch", 5});
    for (size_t i = 0; i < base.ranked.size(); ++i) {
      CHECK(bigger.ranked[i].t == doctest::Approx(base.ranked[i].t));
      CHECK(bigger.ranked[i].score ==
            doctest::Approx(3.0 * base.ranked[i].score).epsilon(1e-9));
    }
  }
}

TEST_CASE("scores are non-increasing and ranks a permutation") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> coeff(-0.3, 0.3);
  std::vector<double> times, values;
  for (int i = 0; i < 40; ++i) {
    times.push_back(0.25 * i);
    values.push_back(coeff(rng));
  }
  const auto result =
      demo::rank_key_poses(testutil::pitch_trajectory(times, values), {"pitch", 7});

  std::vector<int> seen(result.ranked.size(), 0);
  for (size_t i = 0; i < result.ranked.size(); ++i) {
    seen[result.ranked[i].rank - 1] += 1;
    if (i > 0) {
      CHECK(result.ranked[i].score <=
            result.ranked[i - 1].score + 1e-9 * std::max(1.0, result.ranked[i - 1].score));
    }
  }
  for (int c : seen) CHECK(c == 1);
}

TEST_CASE("all mode keys on the fastest normalized dof") {
  // x dashes in the middle of the window while pitch drifts slowly; the
  // normalized maximum must pick the dash even though radians are "larger".
  demo::DemoTrajectory traj;
  for (int i = 0; i <= 40; ++i) {
    const double t = 0.25 * i;
    geom::PoseVector p;
    const double u = t / 10.0;
    p.x = 0.05 * std::tanh(8.0 * (u - 0.5));
    p.pitch = 0.4 * u;
    traj.samples.push_back({t, geom::pose_vector_to_transform(p)});
  }
  const auto result = demo::rank_key_poses(traj, {"all", 7});
  CHECK(result.fits.size() == 6);
  CHECK(std::abs(result.ranked.front().t - 5.0) <= 1.0);
}

TEST_CASE("candidate selection honors count, window and spacing") {
  std::vector<double> times, values;
  for (int i = 0; i <= 50; ++i) {
    const double t = 0.2 * i;
    times.push_back(t);
    values.push_back(0.3 * std::sin(t));
  }
  const auto ranking =
      demo::rank_key_poses(testutil::pitch_trajectory(times, values), {"pitch", 7});

  scenario::DemoSettings settings;
  settings.candidate_count = 4;
  settings.roi_begin = 1.0;
  settings.roi_end = 9.0;
  settings.min_time_separation = 1.5;
  const auto picked = scenario::select_candidates(ranking, settings);

  REQUIRE(picked.size() == 4);
  for (size_t i = 0; i < picked.size(); ++i) {
    CHECK(picked[i].rank == static_cast<int>(i) + 1);
    CHECK(picked[i].t >= 1.0);
    CHECK(picked[i].t <= 9.0);
    if (i > 0) CHECK(picked[i].score <= picked[i - 1].score + 1e-12);
    for (size_t j = 0; j < i; ++j) {
      CHECK(std::abs(picked[i].t - picked[j].t) >= 1.5);
    }
  }
}

}  // TEST_SUITE
