#pragma once

#include <cstdint>
#include <vector>

namespace cspacevis {

struct RGB8 {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const RGB8&, const RGB8&) = default;
};

inline constexpr RGB8 kWhite{255, 255, 255};
inline constexpr RGB8 kBlack{0, 0, 0};
// Marks collision states when a render is asked to show them explicitly.
inline constexpr RGB8 kCollisionGray{150, 150, 150};

struct ColorStop {
  double t = 0.0;
  RGB8 color;

  friend bool operator==(const ColorStop&, const ColorStop&) = default;
};

// Piecewise-linear curve through RGB space. Stops are strictly increasing
// in t, starting at 0 and ending at 1.
struct ColorMapSpec {
  std::vector<ColorStop> control_points;

  friend bool operator==(const ColorMapSpec&, const ColorMapSpec&) = default;
};

// Dark-to-light earth palette; luminance increases monotonically so the
// rings stay readable in grayscale.
ColorMapSpec earth_colormap();

void validate(const ColorMapSpec& spec);

// t is clamped to [0, 1]; channels are interpolated linearly between the
// bracketing stops and rounded half-up.
RGB8 colormap_lookup(const ColorMapSpec& spec, double t);

}  // namespace cspacevis
