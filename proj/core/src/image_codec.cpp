#include "cspacevis/image_codec.hpp"

#include <png.h>

#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "cspacevis/errors.hpp"

namespace cspacevis {

namespace {

constexpr std::uint8_t kPngMagic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};

class PpmHeaderReader {
 public:
  explicit PpmHeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  int next_int() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw InputError("PPM header: expected a number");
    }
    long v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_++] - '0');
      if (v > 1'000'000) throw InputError("PPM header: value too large");
    }
    return static_cast<int>(v);
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_offset() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw InputError("PPM header: missing separator before raster");
    }
    return pos_ + 1;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 2;
};

}  // namespace

Bytes encode_ppm(const RasterImage& img) {
  const std::string header =
      "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  Bytes out;
  out.reserve(header.size() + img.pixels.size() * 3);
  out.insert(out.end(), header.begin(), header.end());
  for (const RGB8& p : img.pixels) {
    out.push_back(p.r);
    out.push_back(p.g);
    out.push_back(p.b);
  }
  return out;
}

RasterImage decode_ppm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
    throw InputError("not a binary PPM (P6) image");
  }
  PpmHeaderReader reader(bytes);
  const int w = reader.next_int();
  const int h = reader.next_int();
  const int maxval = reader.next_int();
  if (maxval != 255) throw InputError("PPM maxval must be 255");
  const std::size_t offset = reader.raster_offset();
  const std::size_t need = static_cast<std::size_t>(w) * h * 3;
  if (bytes.size() - offset < need) throw InputError("PPM raster is truncated");

  RasterImage img(w, h);
  const std::uint8_t* src = bytes.data() + offset;
  for (auto& p : img.pixels) {
    p = {src[0], src[1], src[2]};
    src += 3;
  }
  return img;
}

Bytes encode_png(const RasterImage& img) {
  static_assert(sizeof(RGB8) == 3, "RGB8 must be tightly packed");
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width);
  image.height = static_cast<png_uint_32>(img.height);
  image.format = PNG_FORMAT_RGB;

  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&image, nullptr, &size, 0, img.pixels.data(), 0, nullptr)) {
    throw InputError(std::string("PNG encode failed: ") + image.message);
  }
  Bytes out(size);
  if (!png_image_write_to_memory(&image, out.data(), &size, 0, img.pixels.data(), 0, nullptr)) {
    throw InputError(std::string("PNG encode failed: ") + image.message);
  }
  out.resize(size);
  return out;
}

RasterImage decode_png(std::span<const std::uint8_t> bytes) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw InputError(std::string("PNG decode failed: ") + image.message);
  }
  image.format = PNG_FORMAT_RGB;
  RasterImage img(static_cast<int>(image.width), static_cast<int>(image.height));
  if (!png_image_finish_read(&image, nullptr, img.pixels.data(), 0, nullptr)) {
    png_image_free(&image);
    throw InputError(std::string("PNG decode failed: ") + image.message);
  }
  return img;
}

Bytes encode_image(const RasterImage& img, ImageFormat format) {
  return format == ImageFormat::Png ? encode_png(img) : encode_ppm(img);
}

RasterImage decode_image(std::span<const std::uint8_t> bytes) {
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngMagic, 8) == 0) return decode_png(bytes);
  return decode_ppm(bytes);
}

RasterImage load_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  const Bytes bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_image(bytes);
}

void save_image(const RasterImage& img, const std::filesystem::path& path, ImageFormat format) {
  const Bytes bytes = encode_image(img, format);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw InputError("short write to " + path.string());
}

ImageFormat parse_image_format(std::string_view name) {
  if (name == "ppm") return ImageFormat::Ppm;
  if (name == "png") return ImageFormat::Png;
  throw InputError("unknown image format '" + std::string(name) + "' (expected ppm or png)");
}

const char* extension_for(ImageFormat format) {
  return format == ImageFormat::Png ? ".png" : ".ppm";
}

}  // namespace cspacevis
