#pragma once

#include <cstddef>
#include <vector>

#include "cspacevis/color.hpp"

namespace cspacevis {

// Row-major RGB8 grid.
struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<RGB8> pixels;

  RasterImage() = default;
  RasterImage(int w, int h, RGB8 fill = kWhite)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

  RGB8& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  const RGB8& at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }

  bool same_size(const RasterImage& o) const { return width == o.width && height == o.height; }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;
};

// Drops the bottom `rows` rows (e.g. a legend strip).
RasterImage crop_bottom(const RasterImage& img, int rows);

}  // namespace cspacevis
