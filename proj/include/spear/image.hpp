#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "spear/geometry.hpp"

namespace spear {

// Plain 8-bit RGB raster. Screenshots are small enough that a flat buffer
// beats pulling in a full imaging library for fill/crop/noise.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> rgb;  // width * height * 3, row-major

  Image() = default;
  Image(int w, int h, uint8_t fill = 0)
      : width(w), height(h), rgb(static_cast<size_t>(w) * h * 3, fill) {}

  bool operator==(const Image&) const = default;

  uint8_t* px(int x, int y) { return rgb.data() + (static_cast<size_t>(y) * width + x) * 3; }
  const uint8_t* px(int x, int y) const {
    return rgb.data() + (static_cast<size_t>(y) * width + x) * 3;
  }
};

Image read_png(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const Image& img);

void fill_rect(Image& img, const Rect& rect, uint8_t r, uint8_t g, uint8_t b);
Image crop(const Image& img, const Rect& window);

uint64_t image_digest(const Image& img);

}  // namespace spear
