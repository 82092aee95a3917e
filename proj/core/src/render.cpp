#include "cspacevis/render.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cspacevis/errors.hpp"

namespace cspacevis {

namespace {

bool fits(const LayoutSpec& l, std::size_t n_joints, int n_d) {
  return outermost_radius(n_joints, n_d, l) + l.margin_px <= l.canvas_px / 2.0;
}

void paint_square(RasterImage& img, int limit_y, PixelPoint p, int side, RGB8 color) {
  const int x0 = static_cast<int>(std::floor(p.x - side / 2.0 + 0.5));
  const int y0 = static_cast<int>(std::floor(p.y - side / 2.0 + 0.5));
  const int xa = std::max(x0, 0);
  const int xb = std::min(x0 + side, img.width);
  const int ya = std::max(y0, 0);
  const int yb = std::min(y0 + side, limit_y);
  for (int y = ya; y < yb; ++y) {
    for (int x = xa; x < xb; ++x) img.at(x, y) = color;
  }
}

}  // namespace

double default_ring_step(std::size_t n_joints, int n_d, const LayoutSpec& layout) {
  if (n_joints < 2) throw InputError("a layout needs at least two joints");
  if (n_d < 1) throw InputError("n_d must be at least 1");
  const double pairs = static_cast<double>(n_joints - 1);
  const double room =
      layout.canvas_px / 2.0 - layout.r0 - layout.margin_px - pairs * layout.band_gap;
  return std::max(1.0, std::floor(room / (pairs * n_d)));
}

int canvas_to_fit(std::size_t n_joints, int n_d, const LayoutSpec& layout) {
  const double needed = outermost_radius(n_joints, n_d, layout) + layout.margin_px;
  return 2 * static_cast<int>(std::ceil(needed));
}

LayoutSpec layout_for_canvas(std::size_t n_joints, int n_d, int canvas_px) {
  LayoutSpec l;
  l.canvas_px = canvas_px;
  l.ring_step = default_ring_step(n_joints, n_d, l);
  return l;
}

LayoutSpec default_layout(std::size_t n_joints, int n_d, int canvas_px) {
  LayoutSpec l = layout_for_canvas(n_joints, n_d, canvas_px);
  if (!fits(l, n_joints, n_d)) l.canvas_px = canvas_to_fit(n_joints, n_d, l);
  return l;
}

double ring_radius(std::size_t pair_index, int parent_bin, int n_d, const LayoutSpec& layout) {
  if (parent_bin < 0 || parent_bin >= n_d) {
    throw InputError("parent bin " + std::to_string(parent_bin) + " outside [0, " +
                     std::to_string(n_d) + ")");
  }
  return layout.r0 +
         static_cast<double>(pair_index) * (n_d * layout.ring_step + layout.band_gap) +
         parent_bin * layout.ring_step;
}

double outermost_radius(std::size_t n_joints, int n_d, const LayoutSpec& layout) {
  if (n_joints < 2) return layout.r0;
  return ring_radius(n_joints - 2, n_d - 1, n_d, layout);
}

void validate_layout(const LayoutSpec& layout, std::size_t n_joints, int n_d) {
  if (layout.canvas_px < 1) throw ConfigError("canvas_px must be positive");
  if (!(layout.r0 > 0.0)) throw ConfigError("r0 must be positive");
  if (!(layout.ring_step > 0.0)) throw ConfigError("ring_step must be positive");
  if (!(layout.band_gap >= 0.0)) throw ConfigError("band_gap must be non-negative");
  if (layout.point_px < 1) throw ConfigError("point_px must be at least 1");
  if (layout.legend_strip_px < 0) throw ConfigError("legend_strip_px must be non-negative");
  if (layout.margin_px < 0) throw ConfigError("margin_px must be non-negative");
  if (!fits(layout, n_joints, n_d)) {
    throw ConfigError("layout overflow: outermost ring at " +
                      std::to_string(outermost_radius(n_joints, n_d, layout)) +
                      " px plus margin exceeds half the canvas (" +
                      std::to_string(layout.canvas_px / 2.0) + " px)");
  }
}

RGB8 parent_color(const ColorMapSpec& cmap, int parent_bin, int n_d) {
  if (n_d < 1) throw InputError("n_d must be at least 1");
  if (parent_bin < 0 || parent_bin >= n_d) {
    throw InputError("parent bin " + std::to_string(parent_bin) + " outside [0, " +
                     std::to_string(n_d) + ")");
  }
  return colormap_lookup(cmap, (parent_bin + 0.5) / n_d);
}

PixelPoint polar_to_pixel(const LayoutSpec& layout, double radius, double theta) {
  const double c = layout.canvas_px / 2.0;
  return {c + radius * std::cos(theta), c - radius * std::sin(theta)};
}

RasterImage render(const Dataset& ds, const DiscretizationSpec& spec,
                   const PerturbationSpec& pert, const ColorMapSpec& cmap,
                   const LayoutSpec& layout, PlotPolicy policy) {
  validate(spec);
  validate(cmap);
  validate(ds);
  if (ds.empty()) throw InputError("cannot render an empty dataset");
  if (ds.n_joints < 2) throw InputError("rendering needs at least two joints");
  validate_layout(layout, ds.n_joints, spec.n_d);

  const Dataset perturbed =
      pert.epsilon_max > 0.0 ? apply_epsilon(ds, spec, pert) : Dataset{};
  const Dataset& data = pert.epsilon_max > 0.0 ? perturbed : ds;

  std::vector<RGB8> colors(static_cast<std::size_t>(spec.n_d));
  for (int b = 0; b < spec.n_d; ++b) colors[b] = parent_color(cmap, b, spec.n_d);

  RasterImage img(layout.image_width(), layout.image_height(), layout.background);
  const std::size_t n = data.n_joints;
  for (std::size_t j = 0; j < data.size(); ++j) {
    const bool collision = data.labels[j] == Label::Collision;
    if (collision && policy == PlotPolicy::FreeOnly) continue;
    const auto& q = data.samples[j];
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const int parent = discretize(q[i], spec.n_d);
      const RGB8 color =
          collision && policy == PlotPolicy::CollisionGray ? kCollisionGray : colors[parent];
      const double r = ring_radius(i, parent, spec.n_d, layout);
      paint_square(img, layout.canvas_px, polar_to_pixel(layout, r, q[i + 1]), layout.point_px,
                   color);
    }
  }

  // Legend bars for theta_0 .. theta_{n-2}.
  const int pairs = static_cast<int>(n - 1);
  const int bar_h = layout.legend_strip_px / pairs;
  if (bar_h > 0) {
    std::vector<RGB8> row(static_cast<std::size_t>(img.width));
    for (int x = 0; x < img.width; ++x) {
      row[x] = colormap_lookup(cmap, (x + 0.5) / img.width);
    }
    for (int bar = 0; bar < pairs; ++bar) {
      for (int y = 0; y < bar_h; ++y) {
        const int yy = layout.canvas_px + bar * bar_h + y;
        std::copy(row.begin(), row.end(), img.pixels.begin() + static_cast<std::ptrdiff_t>(yy) * img.width);
      }
    }
  }
  return img;
}

}  // namespace cspacevis
