#include "cspacevis/config_io.hpp"

#include <algorithm>
#include <string>

#include "cspacevis/errors.hpp"
#include "json_detail.hpp"

namespace cspacevis {

namespace detail {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

void reject_unknown_keys(const json& j, std::initializer_list<std::string_view> allowed,
                         const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw InputError(std::string(what) + ": unknown key '" + key + "'");
    }
  }
}

namespace {

RGB8 rgb_from(const json& j) {
  const auto v = j.get<std::vector<int>>();
  if (v.size() != 3) throw InputError("color must be [r, g, b]");
  for (int c : v) {
    if (c < 0 || c > 255) throw InputError("color channel outside [0, 255]");
  }
  return {static_cast<std::uint8_t>(v[0]), static_cast<std::uint8_t>(v[1]),
          static_cast<std::uint8_t>(v[2])};
}

json rgb_to(RGB8 c) { return json::array({c.r, c.g, c.b}); }

Vec2 vec_from(const json& j) {
  const auto v = j.get<std::vector<double>>();
  if (v.size() != 2) throw InputError("point must be [x, y]");
  return {v[0], v[1]};
}

json vec_to(Vec2 v) { return json::array({v.x, v.y}); }

template <typename T>
void read_opt(const json& j, const char* key, std::optional<T>& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

template <typename T>
void write_opt(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

}  // namespace

json render_config_to_object(const RenderConfig& cfg) {
  json j;
  j["n_d"] = cfg.disc.n_d;
  j["epsilon_max"] = cfg.pert.epsilon_max;
  j["plot"] = to_string(cfg.policy);
  j["crop_legend"] = cfg.crop_legend;
  json cmap = json::array();
  for (const auto& s : cfg.colormap.control_points) {
    cmap.push_back({{"t", s.t}, {"rgb", rgb_to(s.color)}});
  }
  j["colormap"] = std::move(cmap);
  write_opt(j, "canvas_px", cfg.canvas_px);
  write_opt(j, "r0", cfg.r0);
  write_opt(j, "ring_step", cfg.ring_step);
  write_opt(j, "band_gap", cfg.band_gap);
  write_opt(j, "point_px", cfg.point_px);
  write_opt(j, "legend_strip_px", cfg.legend_strip_px);
  write_opt(j, "margin_px", cfg.margin_px);
  if (cfg.background) j["background"] = rgb_to(*cfg.background);
  return j;
}

RenderConfig render_config_from_object(const json& j) {
  reject_unknown_keys(j,
                      {"n_d", "epsilon_max", "plot", "crop_legend", "colormap", "canvas_px", "r0",
                       "ring_step", "band_gap", "point_px", "legend_strip_px", "margin_px",
                       "background"},
                      "render config");
  RenderConfig cfg;
  try {
    cfg.disc.n_d = j.value("n_d", cfg.disc.n_d);
    cfg.pert.epsilon_max = j.value("epsilon_max", cfg.pert.epsilon_max);
    if (j.contains("plot")) cfg.policy = parse_plot_policy(j.at("plot").get<std::string>());
    cfg.crop_legend = j.value("crop_legend", cfg.crop_legend);
    if (j.contains("colormap")) {
      cfg.colormap.control_points.clear();
      for (const auto& s : j.at("colormap")) {
        cfg.colormap.control_points.push_back({s.at("t").get<double>(), rgb_from(s.at("rgb"))});
      }
    }
    read_opt(j, "canvas_px", cfg.canvas_px);
    read_opt(j, "r0", cfg.r0);
    read_opt(j, "ring_step", cfg.ring_step);
    read_opt(j, "band_gap", cfg.band_gap);
    read_opt(j, "point_px", cfg.point_px);
    read_opt(j, "legend_strip_px", cfg.legend_strip_px);
    read_opt(j, "margin_px", cfg.margin_px);
    if (j.contains("background")) cfg.background = rgb_from(j.at("background"));
  } catch (const json::exception& e) {
    throw InputError(std::string("render config: ") + e.what());
  }
  validate(cfg.disc);
  validate(cfg.colormap);
  return cfg;
}

}  // namespace detail

LayoutSpec resolve_layout(const RenderConfig& cfg, std::size_t n_joints) {
  validate(cfg.disc);
  const int n_d = cfg.disc.n_d;
  LayoutSpec l;
  if (cfg.r0) l.r0 = *cfg.r0;
  if (cfg.band_gap) l.band_gap = *cfg.band_gap;
  if (cfg.point_px) l.point_px = *cfg.point_px;
  if (cfg.legend_strip_px) l.legend_strip_px = *cfg.legend_strip_px;
  if (cfg.margin_px) l.margin_px = *cfg.margin_px;
  if (cfg.background) l.background = *cfg.background;
  l.canvas_px = cfg.canvas_px.value_or(kDefaultCanvasPx);
  l.ring_step = cfg.ring_step ? *cfg.ring_step : default_ring_step(n_joints, n_d, l);
  if (!cfg.canvas_px && outermost_radius(n_joints, n_d, l) + l.margin_px > l.canvas_px / 2.0) {
    l.canvas_px = canvas_to_fit(n_joints, n_d, l);
  }
  validate_layout(l, n_joints, n_d);
  return l;
}

RasterImage render(const Dataset& ds, const RenderConfig& cfg) {
  if (ds.n_joints < 2) throw InputError("rendering needs at least two joints");
  return render(ds, cfg.disc, cfg.pert, cfg.colormap, resolve_layout(cfg, ds.n_joints),
                cfg.policy);
}

int metric_crop_rows(const RenderConfig& cfg, std::size_t n_joints) {
  return cfg.crop_legend ? resolve_layout(cfg, n_joints).legend_strip_px : 0;
}

RenderConfig render_config_from_json(std::string_view text) {
  return detail::render_config_from_object(detail::parse_json(text, "render config"));
}

std::string render_config_to_json(const RenderConfig& cfg) {
  return detail::render_config_to_object(cfg).dump(2) + "\n";
}

std::string scene_to_json(const Scene& scene) {
  using detail::json;
  json links = json::array();
  for (const auto& l : scene.robot.links) {
    links.push_back({{"length", l.length}, {"half_width", l.half_width}});
  }
  json obstacles = json::array();
  for (const auto& o : scene.workspace.obstacles) {
    obstacles.push_back({{"center", detail::vec_to(o.center)}, {"radius", o.radius}});
  }
  json j;
  j["schema_version"] = 1;
  j["robot"] = {{"base", detail::vec_to(scene.robot.base)}, {"links", std::move(links)}};
  j["workspace"] = {{"id", scene.workspace.id}, {"obstacles", std::move(obstacles)}};
  return j.dump(2) + "\n";
}

Scene scene_from_json(std::string_view text) {
  const auto j = detail::parse_json(text, "scene");
  Scene scene;
  try {
    const auto& robot = j.at("robot");
    scene.robot.base = detail::vec_from(robot.value("base", detail::json::array({0.0, 0.0})));
    for (const auto& l : robot.at("links")) {
      scene.robot.links.push_back({l.at("length").get<double>(), l.value("half_width", 0.0)});
    }
    const auto& ws = j.at("workspace");
    scene.workspace.id = ws.value("id", std::string{});
    for (const auto& o : ws.at("obstacles")) {
      scene.workspace.obstacles.push_back(
          {detail::vec_from(o.at("center")), o.at("radius").get<double>()});
    }
  } catch (const detail::json::exception& e) {
    throw InputError(std::string("scene: ") + e.what());
  }
  validate(scene.robot);
  validate(scene.workspace);
  return scene;
}

PlotPolicy parse_plot_policy(std::string_view name) {
  if (name == "free") return PlotPolicy::FreeOnly;
  if (name == "all") return PlotPolicy::All;
  if (name == "gray") return PlotPolicy::CollisionGray;
  throw InputError("unknown plot policy '" + std::string(name) + "' (free, all, gray)");
}

const char* to_string(PlotPolicy policy) {
  switch (policy) {
    case PlotPolicy::FreeOnly: return "free";
    case PlotPolicy::All: return "all";
    case PlotPolicy::CollisionGray: return "gray";
  }
  return "free";
}

}  // namespace cspacevis
