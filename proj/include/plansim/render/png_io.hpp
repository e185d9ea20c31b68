#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace plansim::render {

/// 8-bit RGB raster, row-major.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // 3 bytes per pixel

  static Image filled(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b);

  std::uint8_t* at(int x, int y) { return &pixels[3 * (static_cast<std::size_t>(y) * width + x)]; }
  const std::uint8_t* at(int x, int y) const {
    return &pixels[3 * (static_cast<std::size_t>(y) * width + x)];
  }

  bool operator==(const Image&) const = default;
};

void write_png(const Image& image, const std::filesystem::path& path);
std::vector<std::uint8_t> encode_png(const Image& image);
Image read_png(const std::filesystem::path& path);

}  // namespace plansim::render
