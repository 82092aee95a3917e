#pragma once

// Radial C-space rendering.
//
// Joint pair i (theta_{i+1} | theta_i) occupies a band of concentric rings,
// one ring per parent bin of theta_i, innermost band i = 0. A sample is a
// point_px square on the ring of its parent bin at polar angle theta_{i+1},
// colored by the parent bin. Free samples are drawn; collision states show
// up as empty arcs. Below the disc, one legend bar per joint pair maps
// [-pi, pi] left to right through the colormap.

#include <cstddef>

#include "cspacevis/color.hpp"
#include "cspacevis/cspace.hpp"
#include "cspacevis/dataset.hpp"
#include "cspacevis/raster.hpp"

namespace cspacevis {

struct LayoutSpec {
  int canvas_px = 2000;        // side of the square radial area
  double r0 = 60.0;            // radius of ring (0, 0)
  double ring_step = 1.0;      // pixels per parent bin
  double band_gap = 12.0;      // pixels between joint-pair bands
  int point_px = 2;            // side of a plotted square
  RGB8 background = kWhite;
  int legend_strip_px = 80;    // height of the legend area below the disc
  int margin_px = 16;          // clearance between the outermost ring and the edge

  int image_width() const { return canvas_px; }
  int image_height() const { return canvas_px + legend_strip_px; }
};

enum class PlotPolicy {
  FreeOnly,       // collision states are left out
  All,            // every sample is drawn with its parent color
  CollisionGray,  // collision states drawn in kCollisionGray
};

inline constexpr int kDefaultCanvasPx = 2000;

// Default layout for n joints and n_d bins: r0 = 60, gap 12, 2 px points,
// 80 px legend, ring step max(1, floor((canvas/2 - r0 - margin - (n-1) gap)
// / ((n-1) n_d))). When even a 1 px step overflows, the canvas grows to fit.
LayoutSpec default_layout(std::size_t n_joints, int n_d, int canvas_px = kDefaultCanvasPx);

// Same as default_layout but keeps the requested canvas; overflow then
// surfaces in validate_layout.
LayoutSpec layout_for_canvas(std::size_t n_joints, int n_d, int canvas_px);

// max(1, floor((canvas/2 - r0 - margin - (n-1) gap) / ((n-1) n_d))) for the
// other fields of `layout`.
double default_ring_step(std::size_t n_joints, int n_d, const LayoutSpec& layout);

// Smallest even canvas side that holds the rings of `layout`.
int canvas_to_fit(std::size_t n_joints, int n_d, const LayoutSpec& layout);

// r = r0 + i (n_d step + gap) + parent_bin step.
double ring_radius(std::size_t pair_index, int parent_bin, int n_d, const LayoutSpec& layout);

double outermost_radius(std::size_t n_joints, int n_d, const LayoutSpec& layout);

// Throws ConfigError if the rings do not fit on the canvas or a field is
// out of range.
void validate_layout(const LayoutSpec& layout, std::size_t n_joints, int n_d);

// colormap_lookup at t = (parent_bin + 0.5) / n_d. Every joint pair uses
// the same colormap.
RGB8 parent_color(const ColorMapSpec& cmap, int parent_bin, int n_d);

RasterImage render(const Dataset& ds, const DiscretizationSpec& spec,
                   const PerturbationSpec& pert, const ColorMapSpec& cmap,
                   const LayoutSpec& layout, PlotPolicy policy = PlotPolicy::FreeOnly);

// Pixel-space position of a point on ring radius r at angle theta; y grows
// downward so counterclockwise angles stay counterclockwise on screen.
struct PixelPoint {
  double x = 0.0;
  double y = 0.0;
};
PixelPoint polar_to_pixel(const LayoutSpec& layout, double radius, double theta);

}  // namespace cspacevis
