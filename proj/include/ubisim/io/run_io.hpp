#pragma once

#include <filesystem>
#include <string>

#include "ubisim/simulation/simulation.hpp"

namespace ubisim::io {

/// Per-period metrics as CSV, one row per period.
std::string period_csv(const SimulationRun& run);

void write_period_csv(const SimulationRun& run, const std::filesystem::path& path);

}  // namespace ubisim::io
