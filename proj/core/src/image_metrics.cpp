#include "cspacevis/image_metrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "cspacevis/errors.hpp"

namespace cspacevis {

namespace {

void require_same_size(const RasterImage& a, const RasterImage& b) {
  if (!a.same_size(b)) {
    throw InputError("image sizes differ: " + std::to_string(a.width) + "x" +
                     std::to_string(a.height) + " vs " + std::to_string(b.width) + "x" +
                     std::to_string(b.height));
  }
}

DiffStats finish(std::uint64_t before, std::uint64_t after) {
  return {before, after,
          before == 0 ? 0.0 : static_cast<double>(after) / static_cast<double>(before)};
}

}  // namespace

RasterImage crop_bottom(const RasterImage& img, int rows) {
  rows = std::clamp(rows, 0, img.height);
  RasterImage out;
  out.width = img.width;
  out.height = img.height - rows;
  out.pixels.assign(img.pixels.begin(),
                    img.pixels.begin() + static_cast<std::ptrdiff_t>(out.width) * out.height);
  return out;
}

SetMinusResult pixel_setminus(const RasterImage& a, const RasterImage& b, RGB8 white) {
  require_same_size(a, b);
  SetMinusResult result{a, {}};
  std::uint64_t before = 0;
  std::uint64_t after = 0;
  for (std::size_t p = 0; p < a.pixels.size(); ++p) {
    if (a.pixels[p] != white) ++before;
    if (a.pixels[p] == b.pixels[p]) result.image.pixels[p] = white;
    if (result.image.pixels[p] != white) ++after;
  }
  result.stats = finish(before, after);
  return result;
}

DiffStats setminus_stats(const RasterImage& a, const RasterImage& b, RGB8 white) {
  require_same_size(a, b);
  std::uint64_t before = 0;
  std::uint64_t after = 0;
  for (std::size_t p = 0; p < a.pixels.size(); ++p) {
    if (a.pixels[p] == white) continue;
    ++before;
    if (a.pixels[p] != b.pixels[p]) ++after;
  }
  return finish(before, after);
}

RasterImage negative_subtraction(const RasterImage& a, const RasterImage& b) {
  require_same_size(a, b);
  RasterImage out(a.width, a.height);
  const auto neg = [](std::uint8_t x, std::uint8_t y) {
    return static_cast<std::uint8_t>(255 - std::abs(int{x} - int{y}));
  };
  for (std::size_t p = 0; p < a.pixels.size(); ++p) {
    const RGB8 pa = a.pixels[p];
    const RGB8 pb = b.pixels[p];
    out.pixels[p] = {neg(pa.r, pb.r), neg(pa.g, pb.g), neg(pa.b, pb.b)};
  }
  return out;
}

double mse(const RasterImage& a, const RasterImage& b) {
  require_same_size(a, b);
  if (a.pixels.empty()) return 0.0;
  std::uint64_t sum = 0;
  const auto sq = [](std::uint8_t x, std::uint8_t y) {
    const int d = int{x} - int{y};
    return static_cast<std::uint64_t>(d * d);
  };
  for (std::size_t p = 0; p < a.pixels.size(); ++p) {
    sum += sq(a.pixels[p].r, b.pixels[p].r) + sq(a.pixels[p].g, b.pixels[p].g) +
           sq(a.pixels[p].b, b.pixels[p].b);
  }
  return static_cast<double>(sum) / (3.0 * static_cast<double>(a.pixels.size()));
}

}  // namespace cspacevis
