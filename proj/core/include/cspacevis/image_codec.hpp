#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "cspacevis/raster.hpp"

namespace cspacevis {

using Bytes = std::vector<std::uint8_t>;

enum class ImageFormat { Ppm, Png };

// Binary P6: "P6\n{w} {h}\n255\n" followed by row-major RGB triplets.
Bytes encode_ppm(const RasterImage& img);
// Accepts any whitespace and '#' comments in the header; maxval must be 255.
RasterImage decode_ppm(std::span<const std::uint8_t> bytes);

// 8-bit RGB, no alpha.
Bytes encode_png(const RasterImage& img);
RasterImage decode_png(std::span<const std::uint8_t> bytes);

Bytes encode_image(const RasterImage& img, ImageFormat format);

// Sniffs the magic bytes, so the extension does not matter.
RasterImage decode_image(std::span<const std::uint8_t> bytes);

RasterImage load_image(const std::filesystem::path& path);
void save_image(const RasterImage& img, const std::filesystem::path& path, ImageFormat format);

// "ppm" / "png"; throws InputError otherwise.
ImageFormat parse_image_format(std::string_view name);
const char* extension_for(ImageFormat format);

}  // namespace cspacevis
