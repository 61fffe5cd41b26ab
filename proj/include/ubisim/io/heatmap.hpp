#pragma once

#include <array>
#include <cstdint>
#include <filesystem>

#include "ubisim/io/grid_io.hpp"

namespace ubisim::io {

using Rgb = std::array<std::uint8_t, 3>;

/// Fixed linear color scale over [0, 1]; values outside are clamped.
Rgb colormap(double value);

/// Renders a table as a PNG heatmap: B_D increases to the right, phi
/// upwards, with a vertical color bar for [0, 1] on the right.
void write_heatmap_png(const MetricTable& table, const std::filesystem::path& path,
                       int cell_px = 32);

}  // namespace ubisim::io
