#pragma once

// JSON documents for render settings and scenes.
//
// Render config keys (all optional): n_d, epsilon_max, plot
// ("free" | "all" | "gray"), canvas_px, r0, ring_step, band_gap, point_px,
// legend_strip_px, margin_px, background [r, g, b],
// colormap [{"t": 0, "rgb": [r, g, b]}, ...], crop_legend.
//
// Scene: {"schema_version": 1,
//         "robot": {"base": [x, y], "links": [{"length": l, "half_width": w}]},
//         "workspace": {"id": s, "obstacles": [{"center": [x, y], "radius": r}]}}

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "cspacevis/color.hpp"
#include "cspacevis/cspace.hpp"
#include "cspacevis/planar.hpp"
#include "cspacevis/raster.hpp"
#include "cspacevis/render.hpp"

namespace cspacevis {

struct RenderConfig {
  DiscretizationSpec disc;
  PerturbationSpec pert;
  ColorMapSpec colormap = earth_colormap();
  PlotPolicy policy = PlotPolicy::FreeOnly;
  bool crop_legend = false;  // drop the legend strip before image metrics

  // Layout overrides; unset fields take the defaults for (n, n_d).
  std::optional<int> canvas_px;
  std::optional<double> r0;
  std::optional<double> ring_step;
  std::optional<double> band_gap;
  std::optional<int> point_px;
  std::optional<int> legend_strip_px;
  std::optional<int> margin_px;
  std::optional<RGB8> background;
};

// Defaults for (n_joints, n_d) with the overrides applied. Without an
// explicit canvas the canvas grows until the rings fit; with one, a layout
// that does not fit throws ConfigError.
LayoutSpec resolve_layout(const RenderConfig& cfg, std::size_t n_joints);

RasterImage render(const Dataset& ds, const RenderConfig& cfg);

// Rows to drop from the bottom of a render before comparing it.
int metric_crop_rows(const RenderConfig& cfg, std::size_t n_joints);

RenderConfig render_config_from_json(std::string_view text);
std::string render_config_to_json(const RenderConfig& cfg);

struct Scene {
  PlanarRobot robot;
  Workspace workspace;
};

std::string scene_to_json(const Scene& scene);
Scene scene_from_json(std::string_view text);

PlotPolicy parse_plot_policy(std::string_view name);
const char* to_string(PlotPolicy policy);

}  // namespace cspacevis
