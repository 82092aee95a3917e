#pragma once

// Pixel-level comparison of two renders of the same size.

#include <cstdint>

#include "cspacevis/raster.hpp"

namespace cspacevis {

struct DiffStats {
  std::uint64_t nonwhite_before = 0;  // non-white pixels of A
  std::uint64_t nonwhite_after = 0;   // non-white pixels of A \ B
  double mismatch_ratio = 0.0;        // after / before, 0 when before == 0
};

struct SetMinusResult {
  RasterImage image;
  DiffStats stats;
};

// A \ B = A ∩ Bᶜ: pixels where A and B agree exactly become `white`, the
// rest keep A's color.
SetMinusResult pixel_setminus(const RasterImage& a, const RasterImage& b, RGB8 white = kWhite);

// Same statistics without materializing the output image.
DiffStats setminus_stats(const RasterImage& a, const RasterImage& b, RGB8 white = kWhite);

// Per channel 255 - |A - B|; agreeing regions render white.
RasterImage negative_subtraction(const RasterImage& a, const RasterImage& b);

// Mean of (A - B)^2 over all pixels and channels, on 0..255 values.
double mse(const RasterImage& a, const RasterImage& b);

}  // namespace cspacevis
