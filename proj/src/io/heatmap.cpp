#include "ubisim/io/heatmap.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>
#include <vector>

namespace ubisim::io {
namespace {

// Viridis sampled at nine evenly spaced points.
constexpr std::array<Rgb, 9> kAnchors = {{
    {68, 1, 84},
    {71, 44, 122},
    {59, 81, 139},
    {44, 113, 142},
    {33, 144, 141},
    {39, 173, 129},
    {92, 200, 99},
    {170, 220, 50},
    {253, 231, 37},
}};

constexpr Rgb kBackground = {255, 255, 255};
constexpr int kMargin = 8;
constexpr int kBarWidth = 16;

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};

}  // namespace

Rgb colormap(double value) {
  const double v = std::isnan(value) ? 0.0 : std::clamp(value, 0.0, 1.0);
  const double pos = v * static_cast<double>(kAnchors.size() - 1);
  const auto lo = std::min(static_cast<std::size_t>(pos), kAnchors.size() - 2);
  const double frac = pos - static_cast<double>(lo);
  Rgb out{};
  for (int ch = 0; ch < 3; ++ch) {
    const double a = kAnchors[lo][ch];
    const double b = kAnchors[lo + 1][ch];
    out[ch] = static_cast<std::uint8_t>(std::lround(a + (b - a) * frac));
  }
  return out;
}

void write_heatmap_png(const MetricTable& table, const std::filesystem::path& path, int cell_px) {
  const int cols = static_cast<int>(table.b_d_values.size());
  const int rows = static_cast<int>(table.phi_values.size());
  if (cols == 0 || rows == 0) throw std::runtime_error("heatmap: empty table for " + path.string());

  const int map_w = cols * cell_px;
  const int map_h = rows * cell_px;
  const int width = kMargin + map_w + kMargin + kBarWidth + kMargin;
  const int height = kMargin + map_h + kMargin;

  std::vector<Rgb> pixels(static_cast<std::size_t>(width) * height, kBackground);
  auto put = [&](int x, int y, Rgb c) { pixels[static_cast<std::size_t>(y) * width + x] = c; };

  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const Rgb color = colormap(table.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
      // phi grows upwards: row 0 is drawn at the bottom.
      const int y0 = kMargin + (rows - 1 - r) * cell_px;
      const int x0 = kMargin + c * cell_px;
      for (int dy = 0; dy < cell_px; ++dy)
        for (int dx = 0; dx < cell_px; ++dx) put(x0 + dx, y0 + dy, color);
    }
  }
  const int bar_x = kMargin + map_w + kMargin;
  for (int y = 0; y < map_h; ++y) {
    const double v = map_h > 1 ? 1.0 - static_cast<double>(y) / (map_h - 1) : 1.0;
    for (int dx = 0; dx < kBarWidth; ++dx) put(bar_x + dx, kMargin + y, colormap(v));
  }

  std::unique_ptr<std::FILE, FileCloser> file(std::fopen(path.c_str(), "wb"));
  if (!file) throw std::runtime_error("cannot open for writing: " + path.string());

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("libpng initialization failed for " + path.string());
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("libpng write failed for " + path.string());
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
               PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < height; ++y) {
    png_write_row(png, reinterpret_cast<png_const_bytep>(&pixels[static_cast<std::size_t>(y) * width]));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace ubisim::io
