// Generates the bundled demonstration data set: fixture and object meshes,
// synthetic demonstration logs, the default kinematic chain, and the scenario
// configs tying them together. Also verifies the generated data (demo samples
// collision-free, endpoint reachability, candidate preview) so scene tuning
// is a matter of editing the keyframe tables below and re-running with
// --check.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "demoplan/demo/pose_log.hpp"
#include "demoplan/geom/obj_io.hpp"
#include "demoplan/geom/scene.hpp"
#include "demoplan/kin/chain_io.hpp"
#include "demoplan/kin/ik.hpp"
#include "demoplan/scenario/candidates.hpp"
#include "demoplan/scenario/config.hpp"

namespace {

namespace fs = std::filesystem;
using demoplan::geom::PoseVector;
using demoplan::geom::RigidTransform;
using demoplan::geom::TriMesh;
using nlohmann::ordered_json;

RigidTransform pose(double x, double y, double z, double roll = 0.0,
                    double pitch = 0.0, double yaw = 0.0) {
  return demoplan::geom::pose_vector_to_transform({x, y, z, roll, pitch, yaw});
}

void add_box(TriMesh& mesh, double cx, double cy, double cz, double ex, double ey,
             double ez) {
  demoplan::geom::append_box(mesh, {ex, ey, ez}, pose(cx, cy, cz));
}

// ---------------------------------------------------------------------------
// Demonstration synthesis: keyframes with smoothstep easing between them.

struct Key {
  double t;
  PoseVector p;
};

double smoothstep(double u) { return u * u * (3.0 - 2.0 * u); }

PoseVector sample_keys(const std::vector<Key>& keys, double t) {
  if (t <= keys.front().t) return keys.front().p;
  if (t >= keys.back().t) return keys.back().p;
  std::size_t i = 1;
  while (keys[i].t < t) ++i;
  const Key& a = keys[i - 1];
  const Key& b = keys[i];
  const double u = (t - a.t) / (b.t - a.t);
  const double e = smoothstep(u);
  const auto lerp = [e](double lo, double hi) { return lo + e * (hi - lo); };
  PoseVector out;
  out.x = lerp(a.p.x, b.p.x);
  out.y = lerp(a.p.y, b.p.y);
  out.z = lerp(a.p.z, b.p.z);
  out.roll = lerp(a.p.roll, b.p.roll);
  out.pitch = lerp(a.p.pitch, b.p.pitch);
  out.yaw = lerp(a.p.yaw, b.p.yaw);
  return out;
}

struct DemoSpec {
  std::vector<Key> keys;
  int samples = 61;

  std::vector<std::pair<double, RigidTransform>> sample() const {
    std::vector<std::pair<double, RigidTransform>> out;
    const double t0 = keys.front().t;
    const double t1 = keys.back().t;
    for (int i = 0; i < samples; ++i) {
      const double t = t0 + (t1 - t0) * i / (samples - 1);
      out.emplace_back(t, demoplan::geom::pose_vector_to_transform(sample_keys(keys, t)));
    }
    return out;
  }
};

void write_world_pair_log(const fs::path& file, const DemoSpec& spec,
                          const RigidTransform& capture_t_fixed) {
  std::ofstream out(file, std::ios::trunc);
  out << "# synthetic demonstration capture (world-frame marker poses)\n";
  out << "# units: m,s\n";
  out << "t,x_g,y_g,z_g,qw_g,qx_g,qy_g,qz_g,x_l,y_l,z_l,qw_l,qx_l,qy_l,qz_l\n";
  char buf[512];
  const RigidTransform& g = capture_t_fixed;
  for (const auto& [t, rel] : spec.sample()) {
    const RigidTransform l = g * rel;
    std::snprintf(buf, sizeof(buf),
                  "%.6f,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n",
                  t, g.translation.x(), g.translation.y(), g.translation.z(),
                  g.rotation.w(), g.rotation.x(), g.rotation.y(), g.rotation.z(),
                  l.translation.x(), l.translation.y(), l.translation.z(),
                  l.rotation.w(), l.rotation.x(), l.rotation.y(), l.rotation.z());
    out << buf;
  }
}

void write_relative_log(const fs::path& file, const DemoSpec& spec) {
  std::ofstream out(file, std::ios::trunc);
  out << "# synthetic demonstration capture (relative poses)\n";
  out << "# units: m,s\n";
  out << "t,x,y,z,qw,qx,qy,qz\n";
  char buf[256];
  for (const auto& [t, rel] : spec.sample()) {
    std::snprintf(buf, sizeof(buf), "%.6f,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n", t,
                  rel.translation.x(), rel.translation.y(), rel.translation.z(),
                  rel.rotation.w(), rel.rotation.x(), rel.rotation.y(),
                  rel.rotation.z());
    out << buf;
  }
}

ordered_json pose_json(const RigidTransform& t) {
  const auto [p, degenerate] = demoplan::geom::transform_to_pose_vector(t);
  (void)degenerate;
  ordered_json j;
  j["xyz"] = {p.x, p.y, p.z};
  j["rpy"] = {p.roll, p.pitch, p.yaw};
  return j;
}

ordered_json pose_json(const PoseVector& p) {
  ordered_json j;
  j["xyz"] = {p.x, p.y, p.z};
  j["rpy"] = {p.roll, p.pitch, p.yaw};
  return j;
}

void write_json(const fs::path& file, const ordered_json& j) {
  std::ofstream out(file, std::ios::trunc);
  out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Scenario descriptions. All fixture geometry lives in the fixture's local
// frame; the scenario's target_frame places it in the planning world.

struct GeneratedScenario {
  std::string name;
  TriMesh object;
  TriMesh fixture;  // empty for free space
  DemoSpec demo;
  RigidTransform target_frame;   // fixture pose in the planning world
  RigidTransform capture_frame;  // fixture pose in the synthetic capture world
  bool world_pair_log = true;
  std::string dof = "pitch";
  int candidate_count = 6;
  // Clips candidate selection away from the log edges, where the fitted
  // polynomial's derivative is unreliable.
  double roi_begin = 0.3;
  double roi_end = 9.7;
  int max_key_poses = 3;
  int max_extensions = 6000;
  int success_floor = 4;
  double t_e = 5.0;
};

// L-shaped rod threaded into a channel block with an overhanging lip. The
// lip covers the deep end of the channel and the open window is shorter than
// the rod, so a level drop-in is impossible; the left wall blocks a level
// slide-in. The rod has to enter tilted, feed its tip under the lip and
// level out inside, mirroring the demonstrated motion.
GeneratedScenario make_l_insertion() {
  GeneratedScenario s;
  s.name = "l_insertion";

  // Rod: 100 mm limb with a 60 mm upright at the left end; 16 mm section.
  add_box(s.object, 0.05, 0.008, 0.008, 0.10, 0.016, 0.016);
  add_box(s.object, 0.008, 0.008, 0.046, 0.016, 0.016, 0.06);

  // Channel block: cavity 116 x 20 mm, open window for x < 88 mm, 8 mm lip
  // over the rest with 52 mm of headroom beneath it. Every slab is thinner
  // than the rod's 16 mm section so a surface-intersection test cannot miss
  // containment.
  add_box(s.fixture, 0.058, 0.010, -0.006, 0.140, 0.044, 0.012);  // floor
  add_box(s.fixture, -0.006, 0.010, 0.0225, 0.012, 0.044, 0.045);  // left wall
  add_box(s.fixture, 0.122, 0.010, 0.030, 0.012, 0.044, 0.060);   // right wall
  add_box(s.fixture, 0.058, -0.006, 0.030, 0.140, 0.012, 0.060);  // front wall
  add_box(s.fixture, 0.058, 0.026, 0.030, 0.140, 0.012, 0.060);   // back wall
  add_box(s.fixture, 0.108, 0.010, 0.056, 0.040, 0.044, 0.008);   // lip

  // Tilt builds up during the descent into the window and unwinds during the
  // in-cavity leveling, so the pitch-derivative ranking promotes poses on
  // both sides of the narrow entry corridor.
  const double y = 0.002;
  s.demo.keys = {
      {0.0, {-0.055, y, 0.115, 0, 0.00, 0}},
      {1.5, {-0.028, y, 0.105, 0, 0.10, 0}},
      {3.0, {-0.022, y, 0.088, 0, 0.30, 0}},
      {4.2, {-0.018, y, 0.074, 0, 0.45, 0}},
      {5.2, {-0.008, y, 0.068, 0, 0.45, 0}},
      {6.2, {0.004, y, 0.058, 0, 0.45, 0}},
      {7.0, {0.004, y, 0.050, 0, 0.45, 0}},
      {8.0, {0.0085, y, 0.0356, 0, 0.30, 0}},
      {9.2, {0.0072, y, 0.009, 0, 0.06, 0}},
      {10.0, {0.008, y, 0.002, 0, 0.00, 0}},
  };

  s.target_frame = pose(0.40, 0.05, 0.28, 0, 0, 0.3);
  s.capture_frame = pose(0.9, -0.35, 0.72, 0, 0, 1.2);
  s.dof = "pitch";
  s.candidate_count = 6;
  s.max_key_poses = 3;
  s.success_floor = 4;
  return s;
}

// Straight bar pushed through aligned mortise holes in two uprights.
GeneratedScenario make_tenon_insertion() {
  GeneratedScenario s;
  s.name = "tenon_insertion";

  add_box(s.object, 0.07, 0.008, 0.008, 0.14, 0.016, 0.016);

  // Floor slab plus two 12 mm boards 40 mm apart, each with a 22 x 22 mm
  // mortise hole (y in [-11,11], z in [29,51] mm) built from four boxes.
  add_box(s.fixture, 0.032, 0.0, -0.006, 0.184, 0.100, 0.012);
  for (const double x0 : {0.0, 0.052}) {
    const double cx = x0 + 0.006;
    add_box(s.fixture, cx, 0.0, 0.0145, 0.012, 0.080, 0.029);      // below hole
    add_box(s.fixture, cx, 0.0, 0.0605, 0.012, 0.080, 0.019);      // above hole
    add_box(s.fixture, cx, -0.0255, 0.040, 0.012, 0.029, 0.022);   // left of hole
    add_box(s.fixture, cx, 0.0255, 0.040, 0.012, 0.029, 0.022);    // right of hole
  }

  // Alignment in front of the first hole is deliberately slow while the
  // through-both-holes push is a quick dash, concentrating the normalized
  // x derivative on the threaded poses the planner actually needs.
  const double y = -0.008;
  s.demo.keys = {
      {0.0, {-0.165, y, 0.090, 0, 0.00, 0}},
      {1.6, {-0.158, y, 0.075, 0, 0.06, 0}},
      {3.2, {-0.152, y, 0.055, 0, 0.10, 0}},
      {4.6, {-0.149, y, 0.0375, 0, 0.05, 0}},
      {5.8, {-0.148, y, 0.0330, 0, 0.01, 0}},
      {6.6, {-0.120, y, 0.0325, 0, 0.00, 0}},
      {7.6, {-0.060, y, 0.0322, 0, 0.00, 0}},
      {8.8, {-0.040, y, 0.0320, 0, 0.00, 0}},
      {10.0, {-0.038, y, 0.0320, 0, 0.00, 0}},
  };

  s.target_frame = pose(0.50, -0.04, 0.22, 0, 0, -0.2);
  s.capture_frame = pose(1.1, 0.25, 0.68, 0, 0, -0.7);
  s.dof = "all";
  s.candidate_count = 11;
  s.max_key_poses = 5;
  s.success_floor = 3;
  return s;
}

// Box through a window with 1 mm clearance; the demonstration crosses the
// window quickly, so ranking on x puts the mid-window pose first and the
// aligned approach/exit poses right behind it.
GeneratedScenario make_narrow_slot() {
  GeneratedScenario s;
  s.name = "narrow_slot";

  add_box(s.object, 0.0, 0.0, 0.0, 0.08, 0.02, 0.02);

  // Closed two-chamber container: the only passage between chambers is a
  // 22 x 22 mm window (centered y=0, z=40 mm) in a 15 mm divider wall.
  // Interior: x in [-0.160, 0] and [0.015, 0.175], y in [-0.085, 0.085],
  // z in [0, 0.130].
  add_box(s.fixture, 0.0075, 0.0, -0.0075, 0.365, 0.200, 0.015);  // floor
  add_box(s.fixture, 0.0075, 0.0, 0.1375, 0.365, 0.200, 0.015);   // ceiling
  add_box(s.fixture, -0.1675, 0.0, 0.065, 0.015, 0.200, 0.130);   // left end
  add_box(s.fixture, 0.1825, 0.0, 0.065, 0.015, 0.200, 0.130);    // right end
  add_box(s.fixture, 0.0075, -0.0925, 0.065, 0.365, 0.015, 0.130);
  add_box(s.fixture, 0.0075, 0.0925, 0.065, 0.365, 0.015, 0.130);
  add_box(s.fixture, 0.0075, 0.0, 0.0145, 0.015, 0.170, 0.029);   // below window
  add_box(s.fixture, 0.0075, 0.0, 0.0905, 0.015, 0.170, 0.079);   // above window
  add_box(s.fixture, 0.0075, -0.048, 0.040, 0.015, 0.074, 0.022);
  add_box(s.fixture, 0.0075, 0.048, 0.040, 0.015, 0.074, 0.022);

  // Start and goal sit off the window axis with a deliberate twist; only the
  // demonstrated mid-passage poses carry the alignment the window demands, so
  // unguided planning has no free straight chord to exploit.
  s.demo.keys = {
      {0.0, {-0.105, 0.035, 0.090, 0, -0.15, 0.25}},
      {1.5, {-0.085, 0.020, 0.065, 0, -0.05, 0.10}},
      {3.0, {-0.058, 0.002, 0.042, 0, 0.00, 0.01}},
      {4.0, {-0.048, 0.000, 0.040, 0, 0.00, 0.00}},
      {5.5, {0.063, 0.000, 0.040, 0, 0.00, 0.00}},
      {7.0, {0.085, 0.000, 0.040, 0, 0.00, 0.00}},
      {8.5, {0.100, -0.015, 0.030, 0, 0.08, -0.15}},
      {10.0, {0.110, -0.028, 0.022, 0, 0.12, -0.22}},
  };

  s.target_frame = pose(0.50, 0.02, 0.26, 0, 0, 0.15);
  s.capture_frame = pose(0.8, 0.4, 0.66, 0, 0, 0.5);
  s.dof = "x";
  s.candidate_count = 5;
  s.max_key_poses = 5;
  s.success_floor = 5;
  return s;
}

// Obstacle-free sanity scenario; ships a relative-schema log and a merged
// gripper mesh to exercise those paths.
GeneratedScenario make_free_space() {
  GeneratedScenario s;
  s.name = "free_space";

  add_box(s.object, 0.0, 0.0, 0.0, 0.04, 0.02, 0.02);

  s.demo.keys = {
      {0.0, {-0.06, -0.04, 0.10, 0, 0.00, 0}},
      {3.0, {-0.02, 0.00, 0.07, 0, 0.15, 0.1}},
      {6.0, {0.03, 0.03, 0.05, 0, -0.10, 0.2}},
      {9.0, {0.06, 0.05, 0.04, 0, 0.00, 0.1}},
      {10.0, {0.065, 0.05, 0.04, 0, 0.00, 0.1}},
  };

  s.target_frame = pose(0.45, 0.0, 0.25);
  s.capture_frame = RigidTransform::Identity();
  s.world_pair_log = false;
  s.dof = "pitch";
  s.candidate_count = 3;
  s.max_key_poses = 3;
  s.success_floor = 5;
  return s;
}

TriMesh make_gripper() {
  TriMesh m;
  add_box(m, 0.0, 0.0, 0.020, 0.050, 0.030, 0.012);    // palm above the box
  add_box(m, 0.024, 0.0, 0.004, 0.012, 0.030, 0.020);  // fingers straddle it
  add_box(m, -0.024, 0.0, 0.004, 0.012, 0.030, 0.020);
  return m;
}

ordered_json chain_json() {
  const auto joint = [](const char* name, std::initializer_list<double> axis,
                        std::initializer_list<double> xyz, double lo, double hi) {
    ordered_json j;
    j["name"] = name;
    j["axis"] = axis;
    j["origin"] = {{"xyz", xyz}, {"rpy", {0.0, 0.0, 0.0}}};
    j["limits"] = {lo, hi};
    return j;
  };
  ordered_json j;
  j["base"] = {{"xyz", {0.0, 0.0, 0.0}}, {"rpy", {0.0, 0.0, 0.0}}};
  j["tip"] = {{"xyz", {0.10, 0.0, 0.0}}, {"rpy", {0.0, 0.0, 0.0}}};
  j["joints"] = ordered_json::array({
      joint("waist_yaw", {0, 0, 1}, {0.0, 0.0, 0.32}, -2.9, 2.9),
      joint("shoulder_pitch", {0, 1, 0}, {0.05, 0.0, 0.08}, -2.0, 2.0),
      joint("shoulder_roll", {1, 0, 0}, {0.0, 0.0, 0.0}, -2.0, 2.0),
      joint("elbow_pitch", {0, 1, 0}, {0.26, 0.0, 0.0}, -2.4, 2.4),
      joint("wrist_roll", {1, 0, 0}, {0.25, 0.0, 0.0}, -2.9, 2.9),
      joint("wrist_pitch", {0, 1, 0}, {0.0, 0.0, 0.0}, -2.0, 2.0),
      joint("wrist_yaw", {0, 0, 1}, {0.0, 0.0, 0.0}, -2.9, 2.9),
  });
  return j;
}

PoseVector grasp_for(const std::string& name) {
  // Object pose expressed in the gripper tip frame. The tip hovers above the
  // grasped feature with the tip x axis aligned to the object x axis.
  if (name == "l_insertion") return {-0.016, -0.008, -0.086, 0, 0, 0};
  if (name == "tenon_insertion") return {-0.07, -0.008, -0.036, 0, 0, 0};
  if (name == "narrow_slot") return {0.0, 0.0, -0.030, 0, 0, 0};
  return {0.0, 0.0, -0.030, 0, 0, 0};
}

ordered_json scenario_json(const GeneratedScenario& s) {
  ordered_json j;
  j["name"] = s.name;
  j["frame"] = "z_up";
  j["object_mesh"] = "../meshes/" + s.name + "_object.obj";
  if (s.name == "free_space") j["gripper_mesh"] = "../meshes/free_space_gripper.obj";
  j["obstacles"] = ordered_json::array();
  if (!s.fixture.empty()) {
    ordered_json o;
    o["mesh"] = "../meshes/" + s.name + "_fixture.obj";
    o["pose"] = pose_json(s.target_frame);
    j["obstacles"].push_back(o);
  }
  j["target_frame"] = pose_json(s.target_frame);

  const RigidTransform start_rel =
      demoplan::geom::pose_vector_to_transform(s.demo.keys.front().p);
  const RigidTransform goal_rel =
      demoplan::geom::pose_vector_to_transform(s.demo.keys.back().p);
  j["start"] = pose_json(s.target_frame * start_rel);
  j["goal"] = pose_json(s.target_frame * goal_rel);

  j["demo"] = {
      {"log", "../logs/" + s.name + "_demo.csv"},
      {"dof", s.dof},
      {"degree", 7},
      {"roi", {s.roi_begin, s.roi_end}},
      {"candidate_count", s.candidate_count},
  };
  j["planner"] = {
      {"t_e", s.t_e},
      {"max_key_poses", s.max_key_poses},
      {"max_extensions", s.max_extensions},
  };
  j["chain"] = "../chains/waist_arm_7dof.json";
  j["grasp"] = pose_json(grasp_for(s.name));
  j["trials"] = 5;
  j["seeds"] = {1, 2, 3, 4, 5};
  j["success_floor"] = s.success_floor;
  return j;
}

// ---------------------------------------------------------------------------
// Verification.

int verify_scenario(const GeneratedScenario& s, const fs::path& out_dir) {
  using namespace demoplan;
  int failures = 0;

  std::vector<std::pair<TriMesh, RigidTransform>> obstacles;
  if (!s.fixture.empty()) {
    obstacles.emplace_back(s.fixture, RigidTransform::Identity());
  }
  TriMesh object = s.object;
  if (s.name == "free_space") {
    const TriMesh gripper = make_gripper();
    const int base = static_cast<int>(object.vertices.size());
    object.vertices.insert(object.vertices.end(), gripper.vertices.begin(),
                           gripper.vertices.end());
    for (const auto& tri : gripper.triangles) {
      object.triangles.push_back({tri[0] + base, tri[1] + base, tri[2] + base});
    }
  }
  const geom::Scene scene(object, obstacles);

  // Every demonstration sample must be collision-free in the fixture frame,
  // including midpoints between consecutive samples.
  const auto samples = s.demo.sample();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (geom::pose_in_collision(samples[i].second, scene)) {
      std::printf("  FAIL %s: demo sample %zu (t=%.3f) in collision\n",
                  s.name.c_str(), i, samples[i].first);
      ++failures;
    }
    if (i > 0) {
      const RigidTransform mid =
          geom::interpolate(samples[i - 1].second, samples[i].second, 0.5);
      if (geom::pose_in_collision(mid, scene)) {
        std::printf("  FAIL %s: demo midpoint before sample %zu in collision\n",
                    s.name.c_str(), i);
        ++failures;
      }
    }
  }

  // Candidate preview through the real ingest + rank + select pipeline.
  const fs::path log = out_dir / "logs" / (s.name + "_demo.csv");
  const demo::IngestReport report = demo::ingest_pose_log(log.string());
  demo::RankingConfig ranking_config;
  ranking_config.dof = s.dof;
  const demo::RankingResult ranking =
      demo::rank_key_poses(report.trajectory, ranking_config, s.target_frame);
  scenario::DemoSettings settings;
  settings.log = log.string();
  settings.ranking = ranking_config;
  settings.roi_begin = s.roi_begin;
  settings.roi_end = s.roi_end;
  settings.candidate_count = s.candidate_count;
  const auto candidates = scenario::select_candidates(ranking, settings);
  std::printf("  %s candidates:\n", s.name.c_str());
  for (const auto& kp : candidates) {
    const RigidTransform rel = invert(s.target_frame) * kp.pose_in_world;
    const bool free = !geom::pose_in_collision(rel, scene);
    const auto [rp, deg] = demoplan::geom::transform_to_pose_vector(rel);
    (void)deg;
    std::printf(
        "    rank %2d  t=%6.3f  score=%8.4f  x=%+7.4f z=%+7.4f pitch=%+6.3f  %s\n",
        kp.rank, kp.t, kp.score, rp.x, rp.z, rp.pitch,
        free ? "free" : "IN COLLISION");
    if (!free) ++failures;
  }

  // Endpoint reachability through the arm at start and goal.
  const kin::KinematicChain chain = kin::parse_chain(chain_json().dump());
  const RigidTransform grasp =
      demoplan::geom::pose_vector_to_transform(grasp_for(s.name));
  for (const char* which : {"start", "goal"}) {
    const RigidTransform rel = demoplan::geom::pose_vector_to_transform(
        which == std::string("start") ? s.demo.keys.front().p : s.demo.keys.back().p);
    const RigidTransform tip = s.target_frame * rel * geom::invert(grasp);
    kin::IkResult ik = kin::inverse_kinematics_scan(
        chain, tip, kin::JointConfig::Zero(chain.dof()));
    if (!ik.success) {
      std::printf("  FAIL %s: %s tip pose unreachable (err %.2e)\n", s.name.c_str(),
                  which, ik.error);
      ++failures;
    }
  }
  return failures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bundled data generator"};
  std::string out = "data";
  bool check = false;
  app.add_option("--out", out, "output directory")->capture_default_str();
  app.add_flag("--check", check, "verify generated data and report candidates");
  CLI11_PARSE(app, argc, argv);

  const fs::path out_dir(out);
  for (const char* sub : {"meshes", "logs", "chains", "scenarios"}) {
    fs::create_directories(out_dir / sub);
  }

  const std::vector<GeneratedScenario> scenarios = {
      make_l_insertion(), make_tenon_insertion(), make_narrow_slot(),
      make_free_space()};

  for (const auto& s : scenarios) {
    demoplan::geom::save_obj(s.object,
                             (out_dir / "meshes" / (s.name + "_object.obj")).string());
    if (!s.fixture.empty()) {
      demoplan::geom::save_obj(
          s.fixture, (out_dir / "meshes" / (s.name + "_fixture.obj")).string());
    }
    const fs::path log = out_dir / "logs" / (s.name + "_demo.csv");
    if (s.world_pair_log) {
      write_world_pair_log(log, s.demo, s.capture_frame);
    } else {
      write_relative_log(log, s.demo);
    }
    write_json(out_dir / "scenarios" / (s.name + ".json"), scenario_json(s));
  }
  demoplan::geom::save_obj(make_gripper(),
                           (out_dir / "meshes" / "free_space_gripper.obj").string());
  write_json(out_dir / "chains" / "waist_arm_7dof.json", chain_json());
  std::printf("wrote data set under %s\n", out_dir.string().c_str());

  if (check) {
    int failures = 0;
    for (const auto& s : scenarios) {
      failures += verify_scenario(s, out_dir);
    }
    if (failures) {
      std::printf("verification FAILED with %d problem(s)\n", failures);
      return 1;
    }
    std::printf("verification passed\n");
  }
  return 0;
}
