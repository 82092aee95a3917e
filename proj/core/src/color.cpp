#include "cspacevis/color.hpp"

#include <algorithm>
#include <cmath>

#include "cspacevis/errors.hpp"

namespace cspacevis {

ColorMapSpec earth_colormap() {
  return ColorMapSpec{{
      {0.00, {0, 0, 70}},
      {0.25, {0, 90, 120}},
      {0.50, {60, 140, 70}},
      {0.75, {180, 160, 100}},
      {1.00, {250, 250, 240}},
  }};
}

void validate(const ColorMapSpec& spec) {
  const auto& cp = spec.control_points;
  if (cp.size() < 2) throw InputError("colormap needs at least two control points");
  if (cp.front().t != 0.0 || cp.back().t != 1.0) {
    throw InputError("colormap control points must start at t=0 and end at t=1");
  }
  for (std::size_t k = 1; k < cp.size(); ++k) {
    if (!(cp[k].t > cp[k - 1].t)) {
      throw InputError("colormap control points must be strictly increasing in t");
    }
  }
}

RGB8 colormap_lookup(const ColorMapSpec& spec, double t) {
  const auto& cp = spec.control_points;
  if (cp.empty()) return kBlack;
  if (!(t > 0.0)) t = 0.0;
  if (t > 1.0) t = 1.0;
  if (t <= cp.front().t) return cp.front().color;
  if (t >= cp.back().t) return cp.back().color;

  const auto hi = std::upper_bound(cp.begin(), cp.end(), t,
                                   [](double v, const ColorStop& s) { return v < s.t; });
  const auto lo = hi - 1;
  const double f = (t - lo->t) / (hi->t - lo->t);
  const auto mix = [f](std::uint8_t a, std::uint8_t b) {
    const double v = a + f * (static_cast<double>(b) - a);
    return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
  };
  return {mix(lo->color.r, hi->color.r), mix(lo->color.g, hi->color.g),
          mix(lo->color.b, hi->color.b)};
}

}  // namespace cspacevis
