#pragma once

// Reference implementations for tests. Deliberately naive and written
// without calling into the library code they check.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "cspacevis/dataset.hpp"
#include "cspacevis/planar.hpp"
#include "cspacevis/raster.hpp"

namespace oracle {

using cspacevis::Configuration;
using cspacevis::Dataset;
using cspacevis::Label;
using cspacevis::PlanarRobot;
using cspacevis::RasterImage;
using cspacevis::RGB8;
using cspacevis::Vec2;
using cspacevis::Workspace;

inline constexpr long double kPiL = 3.141592653589793238462643383279502884L;

inline std::vector<Vec2> joints(const PlanarRobot& robot, const std::vector<double>& q) {
  std::vector<Vec2> out{robot.base};
  long double heading = 0, x = robot.base.x, y = robot.base.y;
  for (std::size_t i = 0; i < q.size(); ++i) {
    heading += q[i];
    x += robot.links[i].length * std::cos(heading);
    y += robot.links[i].length * std::sin(heading);
    out.push_back({static_cast<double>(x), static_cast<double>(y)});
  }
  return out;
}

// Minimizes |p - (a + t (b - a))| by projecting and clamping t.
inline double seg_dist(Vec2 p, Vec2 a, Vec2 b) {
  const long double dx = b.x - a.x, dy = b.y - a.y;
  const long double len2 = dx * dx + dy * dy;
  long double t = 0;
  if (len2 > 0) t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  t = std::fmin(1.0L, std::fmax(0.0L, t));
  const long double ex = a.x + t * dx - p.x, ey = a.y + t * dy - p.y;
  return static_cast<double>(std::sqrt(ex * ex + ey * ey));
}

// Signed clearance of link i against obstacle o (negative = overlap).
inline double clearance(const PlanarRobot& robot, const Workspace& ws,
                        const std::vector<Vec2>& js, std::size_t i, std::size_t o) {
  const auto& ob = ws.obstacles[o];
  return seg_dist(ob.center, js[i], js[i + 1]) - (ob.radius + robot.links[i].half_width);
}

inline bool collides(const PlanarRobot& robot, const Workspace& ws, const std::vector<double>& q) {
  const auto js = joints(robot, q);
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t o = 0; o < ws.obstacles.size(); ++o) {
      if (clearance(robot, ws, js, i, o) < 0) return true;
    }
  }
  return false;
}

// Fraction of colliding cell centers on an N x N grid over (theta_0, theta_1).
inline double grid_collision_fraction(const PlanarRobot& robot, const Workspace& ws, int n) {
  long hits = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double t0 = static_cast<double>(-kPiL + (a + 0.5L) * 2 * kPiL / n);
      const double t1 = static_cast<double>(-kPiL + (b + 0.5L) * 2 * kPiL / n);
      if (collides(robot, ws, {t0, t1})) ++hits;
    }
  }
  return static_cast<double>(hits) / (static_cast<double>(n) * n);
}

enum class CellState { Colliding, Free, Unknown };

// Certifies a square cell of half-width h around (t0, t1) for a 2-link arm.
// Over the cell, link 0's points move at most L0 h and link 1's at most
// L0 h + 2 L1 h, so a clearance margin beyond that decides the whole cell.
inline CellState certify_cell(const PlanarRobot& robot, const Workspace& ws, double t0,
                              double t1, double h) {
  const auto js = joints(robot, {t0, t1});
  const double bound[2] = {robot.links[0].length * h,
                           robot.links[0].length * h + 2 * robot.links[1].length * h};
  bool all_clear = true;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t o = 0; o < ws.obstacles.size(); ++o) {
      const double c = clearance(robot, ws, js, i, o);
      if (c < -bound[i]) return CellState::Colliding;
      if (c <= bound[i]) all_clear = false;
    }
  }
  return all_clear ? CellState::Free : CellState::Unknown;
}

// Classifies each (bin0, bin1) cell at n_d by certifying its sub-cells on a
// fine x fine grid (fine must be a multiple of n_d). Row-major [bin0][bin1].
inline std::vector<CellState> classify_cells(const PlanarRobot& robot, const Workspace& ws,
                                             int n_d, int fine) {
  const int k = fine / n_d;
  const long double w = 2 * kPiL / fine;
  const double h = static_cast<double>(w / 2);
  std::vector<CellState> fine_state(static_cast<std::size_t>(fine) * fine);
  for (int a = 0; a < fine; ++a) {
    for (int b = 0; b < fine; ++b) {
      fine_state[static_cast<std::size_t>(a) * fine + b] =
          certify_cell(robot, ws, static_cast<double>(-kPiL + (a + 0.5L) * w),
                       static_cast<double>(-kPiL + (b + 0.5L) * w), h);
    }
  }
  std::vector<CellState> out(static_cast<std::size_t>(n_d) * n_d);
  for (int a = 0; a < n_d; ++a) {
    for (int b = 0; b < n_d; ++b) {
      bool all_col = true, all_free = true;
      for (int da = 0; da < k; ++da) {
        for (int db = 0; db < k; ++db) {
          const auto s = fine_state[static_cast<std::size_t>(a * k + da) * fine + (b * k + db)];
          all_col = all_col && s == CellState::Colliding;
          all_free = all_free && s == CellState::Free;
        }
      }
      out[static_cast<std::size_t>(a) * n_d + b] =
          all_col ? CellState::Colliding : (all_free ? CellState::Free : CellState::Unknown);
    }
  }
  return out;
}

// Polar attribution of a pixel of a 2-joint render to its (ring, sector).
struct PixelCell {
  int bin0 = 0;
  int bin1 = 0;
  double edge_px = 0;  // arc distance of the pixel center to the nearest sector edge
};

inline std::optional<PixelCell> attribute_pixel(int x, int y, double center, double r0,
                                                double step, int n_d) {
  const double dx = x + 0.5 - center;
  const double dy = center - (y + 0.5);
  const double rho = std::sqrt(dx * dx + dy * dy);
  const long ring = std::lround((rho - r0) / step);
  if (ring < 0 || ring >= n_d) return std::nullopt;
  if (std::fabs(rho - (r0 + ring * step)) > step / 2) return std::nullopt;
  const long double phi = std::atan2(static_cast<long double>(dy), static_cast<long double>(dx));
  const long double u = (phi + kPiL) * n_d / (2 * kPiL);
  long sector = static_cast<long>(std::floor(u));
  if (sector >= n_d) sector = n_d - 1;
  const long double frac = u - std::floor(u);
  const long double edge = std::fmin(frac, 1 - frac) * 2 * kPiL / n_d * rho;
  return PixelCell{static_cast<int>(ring), static_cast<int>(sector), static_cast<double>(edge)};
}

// Duplicate ranks by exhaustive pairwise scan: sample k's rank in pair i is
// the number of earlier samples with the same child bin, counted only when
// that child bin hosts two different parent bins anywhere in the dataset.
inline std::vector<std::size_t> naive_ranks(const Dataset& ds, int n_d) {
  auto bin = [n_d](double t) {
    long b = static_cast<long>(std::floor((t + kPiL) * n_d / (2 * kPiL)));
    return static_cast<int>(b >= n_d ? n_d - 1 : b);
  };
  std::vector<std::size_t> rank(ds.size(), 0);
  for (std::size_t i = 0; i + 1 < ds.n_joints; ++i) {
    for (std::size_t k = 0; k < ds.size(); ++k) {
      const int child = bin(ds.samples[k][i + 1]);
      bool mixed = false;
      std::size_t earlier = 0;
      for (std::size_t j = 0; j < ds.size(); ++j) {
        if (bin(ds.samples[j][i + 1]) != child) continue;
        if (bin(ds.samples[j][i]) != bin(ds.samples[k][i])) mixed = true;
        if (j < k) ++earlier;
      }
      if (mixed && earlier > rank[k]) rank[k] = earlier;
    }
  }
  return rank;
}

inline long double pearson_direct(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  long double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += static_cast<long double>(x[i]) * x[i];
    syy += static_cast<long double>(y[i]) * y[i];
    sxy += static_cast<long double>(x[i]) * y[i];
  }
  const long double cov = sxy - sx * sy / n;
  return cov / std::sqrt((sxx - sx * sx / n) * (syy - sy * sy / n));
}

inline RasterImage random_image(int w, int h, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  RasterImage img(w, h);
  for (auto& p : img.pixels) {
    const auto v = gen();
    p = RGB8{static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(v >> 8),
             static_cast<std::uint8_t>(v >> 16)};
  }
  return img;
}

inline Dataset random_dataset(std::size_t n, std::size_t m, std::uint64_t seed,
                              double collision_share = 0.0) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> angle(-3.141592653589793, 3.141592653589793);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Dataset ds;
  ds.n_joints = n;
  ds.workspace_id = "random";
  ds.seed = seed;
  for (std::size_t k = 0; k < m; ++k) {
    Configuration q;
    for (std::size_t j = 0; j < n; ++j) q.angles.push_back(angle(gen));
    ds.samples.push_back(q);
    ds.labels.push_back(coin(gen) < collision_share ? Label::Collision : Label::Free);
  }
  return ds;
}

}  // namespace oracle
