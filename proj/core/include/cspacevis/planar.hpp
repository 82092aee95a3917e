#pragma once

// Planar n-link manipulator with capsule links and circular obstacles.
// Ground-truth collision oracle for C-space datasets.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cspacevis/dataset.hpp"
#include "cspacevis/rng.hpp"

namespace cspacevis {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double norm(Vec2 v);

// A link is a capsule: the segment between consecutive joints swept by
// half_width.
struct LinkSpec {
  double length = 1.0;
  double half_width = 0.0;

  friend bool operator==(const LinkSpec&, const LinkSpec&) = default;
};

struct PlanarRobot {
  Vec2 base;
  std::vector<LinkSpec> links;

  std::size_t dof() const { return links.size(); }
  friend bool operator==(const PlanarRobot&, const PlanarRobot&) = default;
};

struct CircleObstacle {
  Vec2 center;
  double radius = 0.1;

  friend bool operator==(const CircleObstacle&, const CircleObstacle&) = default;
};

struct Workspace {
  std::vector<CircleObstacle> obstacles;
  std::string id;

  friend bool operator==(const Workspace&, const Workspace&) = default;
};

struct Box {
  Vec2 lo;
  Vec2 hi;
};

struct RadiusRange {
  double lo = 0.1;
  double hi = 0.4;
};

enum class SampleMode { FreeOnly, All };

// Throws InputError on n == 0, non-positive lengths or negative widths.
void validate(const PlanarRobot& robot);
void validate(const Workspace& ws);

// n equal links starting at the origin.
PlanarRobot make_uniform_robot(std::size_t n, double link_length, double half_width);

// Base followed by each link's end point (n + 1 positions). Link i points
// along the cumulative angle theta_0 + ... + theta_i.
std::vector<Vec2> forward_kinematics(const PlanarRobot& robot, const Configuration& q);

// Distance from p to the closed segment ab; a == b reduces to |p - a|.
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

// True iff some link capsule strictly overlaps some obstacle disc.
// Tangency counts as free.
bool in_collision(const PlanarRobot& robot, const Workspace& ws, const Configuration& q);

// Largest penetration depth (obstacle radius + half width - distance) over
// all link/obstacle pairs. Positive iff in_collision. -inf for an empty
// workspace.
double max_penetration(const PlanarRobot& robot, const Workspace& ws, const Configuration& q);

// Draws one configuration uniformly per joint over [-pi, pi].
Configuration uniform_configuration(std::size_t n, Rng& rng);

// Rejection budget per requested sample before SamplingTimeout.
inline constexpr std::size_t kRejectionBudgetPerSample = 1000;

// m i.i.d. uniform configurations, labeled by in_collision. FreeOnly keeps
// drawing until m free states are collected or 1000 * m attempts are spent.
Dataset sample_cspace(const PlanarRobot& robot, const Workspace& ws, std::size_t m,
                      std::uint64_t seed, SampleMode mode);

// k circle obstacles with centers uniform in bounds and radii uniform in
// the given range. Throws InputError on empty bounds or a bad radius range.
Workspace random_workspace(std::uint64_t seed, std::size_t k_obstacles, const Box& bounds,
                           const RadiusRange& radius_range);

}  // namespace cspacevis
