#include "cspacevis/planar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cspacevis/errors.hpp"

namespace cspacevis {

namespace {

void require_dimension(const PlanarRobot& robot, const Configuration& q) {
  if (q.size() != robot.dof()) {
    throw InputError("configuration has " + std::to_string(q.size()) + " angles, robot has " +
                     std::to_string(robot.dof()) + " joints");
  }
}

bool finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

}  // namespace

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

void validate(const PlanarRobot& robot) {
  if (robot.links.empty()) throw InputError("robot needs at least one link");
  if (!finite(robot.base)) throw InputError("robot base must be finite");
  for (const auto& link : robot.links) {
    if (!(link.length > 0.0) || !std::isfinite(link.length)) {
      throw InputError("link length must be positive and finite");
    }
    if (!(link.half_width >= 0.0) || !std::isfinite(link.half_width)) {
      throw InputError("link half_width must be non-negative and finite");
    }
  }
}

void validate(const Workspace& ws) {
  for (const auto& o : ws.obstacles) {
    if (!finite(o.center)) throw InputError("obstacle center must be finite");
    if (!(o.radius > 0.0) || !std::isfinite(o.radius)) {
      throw InputError("obstacle radius must be positive and finite");
    }
  }
}

PlanarRobot make_uniform_robot(std::size_t n, double link_length, double half_width) {
  PlanarRobot robot;
  robot.links.assign(n, LinkSpec{link_length, half_width});
  validate(robot);
  return robot;
}

std::vector<Vec2> forward_kinematics(const PlanarRobot& robot, const Configuration& q) {
  require_dimension(robot, q);
  std::vector<Vec2> joints;
  joints.reserve(robot.dof() + 1);
  joints.push_back(robot.base);
  double heading = 0.0;
  for (std::size_t i = 0; i < robot.dof(); ++i) {
    heading += q[i];
    const double len = robot.links[i].length;
    joints.push_back(joints.back() + Vec2{len * std::cos(heading), len * std::sin(heading)});
  }
  return joints;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return norm(p - a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return norm(p - (a + t * ab));
}

double max_penetration(const PlanarRobot& robot, const Workspace& ws, const Configuration& q) {
  const auto joints = forward_kinematics(robot, q);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < robot.dof(); ++i) {
    for (const auto& o : ws.obstacles) {
      const double d = point_segment_distance(o.center, joints[i], joints[i + 1]);
      worst = std::max(worst, o.radius + robot.links[i].half_width - d);
    }
  }
  return worst;
}

bool in_collision(const PlanarRobot& robot, const Workspace& ws, const Configuration& q) {
  require_dimension(robot, q);
  if (ws.obstacles.empty()) return false;
  const auto joints = forward_kinematics(robot, q);
  for (std::size_t i = 0; i < robot.dof(); ++i) {
    for (const auto& o : ws.obstacles) {
      const double d = point_segment_distance(o.center, joints[i], joints[i + 1]);
      if (d < o.radius + robot.links[i].half_width) return true;
    }
  }
  return false;
}

Configuration uniform_configuration(std::size_t n, Rng& rng) {
  Configuration q;
  q.angles.resize(n);
  for (auto& a : q.angles) a = rng.uniform(-kPi, kPi);
  return q;
}

Dataset sample_cspace(const PlanarRobot& robot, const Workspace& ws, std::size_t m,
                      std::uint64_t seed, SampleMode mode) {
  validate(robot);
  validate(ws);
  if (m == 0) throw InputError("sample count must be positive");

  Dataset ds;
  ds.n_joints = robot.dof();
  ds.workspace_id = ws.id;
  ds.seed = seed;
  ds.samples.reserve(m);
  ds.labels.reserve(m);

  Rng rng(seed);
  const std::size_t budget = kRejectionBudgetPerSample * m;
  std::size_t attempts = 0;
  while (ds.samples.size() < m) {
    if (mode == SampleMode::FreeOnly && attempts == budget) {
      throw SamplingTimeout("collected " + std::to_string(ds.samples.size()) + " of " +
                            std::to_string(m) + " free states in " + std::to_string(budget) +
                            " attempts");
    }
    ++attempts;
    Configuration q = uniform_configuration(robot.dof(), rng);
    const bool hit = in_collision(robot, ws, q);
    if (mode == SampleMode::FreeOnly && hit) continue;
    ds.samples.push_back(std::move(q));
    ds.labels.push_back(hit ? Label::Collision : Label::Free);
  }
  return ds;
}

Workspace random_workspace(std::uint64_t seed, std::size_t k_obstacles, const Box& bounds,
                           const RadiusRange& radius_range) {
  if (!finite(bounds.lo) || !finite(bounds.hi) || bounds.lo.x > bounds.hi.x ||
      bounds.lo.y > bounds.hi.y) {
    throw InputError("workspace bounds are empty");
  }
  if (!(radius_range.lo > 0.0) || radius_range.lo > radius_range.hi ||
      !std::isfinite(radius_range.hi)) {
    throw InputError("radius range must satisfy 0 < lo <= hi");
  }
  Rng rng(seed);
  Workspace ws;
  ws.id = "ws-" + std::to_string(seed);
  ws.obstacles.reserve(k_obstacles);
  for (std::size_t k = 0; k < k_obstacles; ++k) {
    CircleObstacle o;
    o.center.x = rng.uniform(bounds.lo.x, bounds.hi.x);
    o.center.y = rng.uniform(bounds.lo.y, bounds.hi.y);
    o.radius = rng.uniform(radius_range.lo, radius_range.hi);
    ws.obstacles.push_back(o);
  }
  return ws;
}

}  // namespace cspacevis
