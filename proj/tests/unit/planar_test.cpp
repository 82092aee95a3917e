#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cspacevis/errors.hpp"
#include "cspacevis/planar.hpp"
#include "cspacevis/rng.hpp"
#include "oracles.hpp"

using namespace cspacevis;

namespace {

PlanarRobot two_link(double half_width = 0.0) {
  return make_uniform_robot(2, 1.0, half_width);
}

Workspace fig6_scene() {
  Workspace ws;
  ws.id = "fig6";
  ws.obstacles = {{{1.2, 0.5}, 0.3}, {{-0.8, -1.0}, 0.4}, {{0.2, 1.5}, 0.25}};
  return ws;
}

void expect_vec(Vec2 got, double x, double y) {
  EXPECT_NEAR(got.x, x, 1e-12);
  EXPECT_NEAR(got.y, y, 1e-12);
}

}  // namespace

TEST(ForwardKinematics, ZeroAnglesGiveColinearChain) {
  const auto js = forward_kinematics(two_link(), Configuration{{0.0, 0.0}});
  ASSERT_EQ(js.size(), 3u);
  expect_vec(js[0], 0, 0);
  expect_vec(js[1], 1, 0);
  expect_vec(js[2], 2, 0);
}

TEST(ForwardKinematics, QuarterTurnsAccumulate) {
  const auto js = forward_kinematics(two_link(), Configuration{{kPi / 2, kPi / 2}});
  expect_vec(js[1], 0, 1);
  expect_vec(js[2], -1, 1);
}

TEST(ForwardKinematics, HalfTurnSingleLink) {
  const auto js = forward_kinematics(make_uniform_robot(1, 2.0, 0.0), Configuration{{kPi}});
  ASSERT_EQ(js.size(), 2u);
  expect_vec(js[1], -2, 0);
}

TEST(ForwardKinematics, DimensionMismatchRejected) {
  EXPECT_THROW(forward_kinematics(two_link(), Configuration{{0.0}}), InputError);
}

TEST(ForwardKinematics, ChainLengthsHoldForRandomConfigurations) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> len(0.1, 3.0), ang(-kPi, kPi), pos(-5, 5);
  for (int trial = 0; trial < 500; ++trial) {
    PlanarRobot robot;
    robot.base = {pos(gen), pos(gen)};
    const std::size_t n = 1 + trial % 8;
    Configuration q;
    for (std::size_t i = 0; i < n; ++i) {
      robot.links.push_back({len(gen), 0.01});
      q.angles.push_back(ang(gen));
    }
    const auto js = forward_kinematics(robot, q);
    const auto ref = oracle::joints(robot, q.angles);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(norm(js[i + 1] - js[i]), robot.links[i].length, 1e-9);
      EXPECT_NEAR(js[i + 1].x, ref[i + 1].x, 1e-9);
      EXPECT_NEAR(js[i + 1].y, ref[i + 1].y, 1e-9);
    }
  }
}

TEST(PointSegmentDistance, Examples) {
  EXPECT_DOUBLE_EQ(point_segment_distance({1, 0}, {0, 0}, {2, 0}), 0.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({1, 1}, {0, 0}, {2, 0}), 1.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({3, 0}, {0, 0}, {2, 0}), 1.0);
  EXPECT_DOUBLE_EQ(point_segment_distance({3, 4}, {0, 0}, {0, 0}), 5.0);
}

TEST(PointSegmentDistance, MatchesOracleOnRandomInput) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> c(-3, 3);
  for (int i = 0; i < 2000; ++i) {
    const Vec2 p{c(gen), c(gen)}, a{c(gen), c(gen)}, b{c(gen), c(gen)};
    const double d = point_segment_distance(p, a, b);
    EXPECT_GE(d, 0.0);
    EXPECT_NEAR(d, oracle::seg_dist(p, a, b), 1e-12);
  }
}

TEST(InCollision, Examples) {
  const auto robot = make_uniform_robot(1, 1.0, 0.0);
  Workspace ws;
  ws.obstacles = {{{1.0, 0.0}, 0.1}};
  EXPECT_TRUE(in_collision(robot, ws, Configuration{{0.0}}));
  EXPECT_FALSE(in_collision(robot, ws, Configuration{{kPi / 2}}));
  EXPECT_FALSE(in_collision(robot, Workspace{}, Configuration{{0.3}}));
}

TEST(InCollision, TangencyIsFree) {
  const auto robot = make_uniform_robot(1, 1.0, 0.0);
  Workspace ws;
  ws.obstacles = {{{0.5, 0.5}, 0.5}};
  EXPECT_FALSE(in_collision(robot, ws, Configuration{{0.0}}));
}

TEST(InCollision, DimensionMismatchRejected) {
  EXPECT_THROW(in_collision(two_link(), fig6_scene(), Configuration{{0.0, 0.0, 0.0}}),
               InputError);
}

TEST(InCollision, AgreesWithOracleAndPenetration) {
  const auto robot = two_link(0.05);
  const auto ws = fig6_scene();
  Rng rng(3);
  for (int i = 0; i < 5000; ++i) {
    const auto q = uniform_configuration(2, rng);
    const bool hit = in_collision(robot, ws, q);
    EXPECT_EQ(hit, oracle::collides(robot, ws, q.angles));
    EXPECT_EQ(hit, max_penetration(robot, ws, q) > 0.0);
  }
}

TEST(InCollision, EnlargingObstaclesNeverFreesAState) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> grow(0.0, 0.5);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto robot = make_uniform_robot(4, 0.5, 0.03);
    const auto ws = random_workspace(s, 4, {{-2, -2}, {2, 2}}, {0.1, 0.5});
    Rng rng(100 + s);
    for (int i = 0; i < 300; ++i) {
      const auto q = uniform_configuration(4, rng);
      if (!in_collision(robot, ws, q)) continue;
      Workspace bigger = ws;
      for (auto& o : bigger.obstacles) o.radius += grow(gen);
      EXPECT_TRUE(in_collision(robot, bigger, q));
    }
  }
}

TEST(SampleCspace, EmptyWorkspaceFreeOnly) {
  const auto ds = sample_cspace(two_link(), Workspace{}, 100, 1, SampleMode::FreeOnly);
  ASSERT_EQ(ds.size(), 100u);
  EXPECT_EQ(count_label(ds, Label::Free), 100u);
  EXPECT_EQ(ds.n_joints, 2u);
}

TEST(SampleCspace, Deterministic) {
  const auto robot = make_uniform_robot(5, 0.4, 0.02);
  const auto ws = fig6_scene();
  for (auto mode : {SampleMode::FreeOnly, SampleMode::All}) {
    EXPECT_EQ(sample_cspace(robot, ws, 500, 42, mode), sample_cspace(robot, ws, 500, 42, mode));
  }
  EXPECT_NE(sample_cspace(robot, ws, 500, 42, SampleMode::All),
            sample_cspace(robot, ws, 500, 43, SampleMode::All));
}

TEST(SampleCspace, CollisionShareMatchesGridOracle) {
  const auto robot = two_link(0.05);
  const auto ws = fig6_scene();
  const auto ds = sample_cspace(robot, ws, 10000, 2024, SampleMode::All);
  const double sampled = static_cast<double>(count_label(ds, Label::Collision)) / ds.size();
  const double grid = oracle::grid_collision_fraction(robot, ws, 500);
  EXPECT_GT(grid, 0.05);
  EXPECT_NEAR(sampled, grid, 0.02);
}

TEST(SampleCspace, LabelsMatchOracle) {
  const auto robot = two_link(0.05);
  const auto ws = fig6_scene();
  const auto ds = sample_cspace(robot, ws, 2000, 8, SampleMode::All);
  for (std::size_t k = 0; k < ds.size(); ++k) {
    EXPECT_EQ(ds.labels[k] == Label::Collision, oracle::collides(robot, ws, ds.samples[k].angles));
  }
  const auto free = sample_cspace(robot, ws, 2000, 8, SampleMode::FreeOnly);
  for (const auto& q : free.samples) EXPECT_FALSE(oracle::collides(robot, ws, q.angles));
}

TEST(SampleCspace, MarginalsPassChiSquare) {
  const double critical_99_df19 = 36.191;
  const auto robot = make_uniform_robot(3, 0.6, 0.02);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto ds = sample_cspace(robot, Workspace{}, 10000, seed, SampleMode::All);
    for (std::size_t j = 0; j < 3; ++j) {
      std::vector<int> counts(20, 0);
      for (const auto& q : ds.samples) {
        int b = static_cast<int>(std::floor((q[j] + kPi) / (2 * kPi) * 20));
        ++counts[std::min(b, 19)];
      }
      double chi2 = 0;
      for (int c : counts) chi2 += (c - 500.0) * (c - 500.0) / 500.0;
      EXPECT_LT(chi2, critical_99_df19) << "seed " << seed << " joint " << j;
    }
  }
}

TEST(SampleCspace, BlockedSceneTimesOut) {
  Workspace ws;
  ws.obstacles = {{{0, 0}, 5.0}};
  EXPECT_THROW(sample_cspace(two_link(), ws, 3, 1, SampleMode::FreeOnly), SamplingTimeout);
  EXPECT_THROW(sample_cspace(two_link(), ws, 0, 1, SampleMode::All), InputError);
}

TEST(RandomWorkspace, Examples) {
  const Box box{{-2, -2}, {2, 2}};
  EXPECT_TRUE(random_workspace(1, 0, box, {0.1, 0.4}).obstacles.empty());
  EXPECT_EQ(random_workspace(5, 3, box, {0.1, 0.4}), random_workspace(5, 3, box, {0.1, 0.4}));
  const auto ws = random_workspace(6, 3, box, {0.1, 0.4});
  ASSERT_EQ(ws.obstacles.size(), 3u);
  for (const auto& o : ws.obstacles) {
    EXPECT_GE(o.center.x, -2);
    EXPECT_LE(o.center.x, 2);
    EXPECT_GE(o.center.y, -2);
    EXPECT_LE(o.center.y, 2);
    EXPECT_GE(o.radius, 0.1);
    EXPECT_LE(o.radius, 0.4);
  }
}

TEST(RandomWorkspace, EmptyBoundsRejected) {
  EXPECT_THROW(random_workspace(1, 2, {{1, 0}, {0, 1}}, {0.1, 0.4}), InputError);
  EXPECT_THROW(random_workspace(1, 2, {{0, 0}, {1, 1}}, {0.5, 0.1}), InputError);
}
