#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ubisim/sweep/sweep.hpp"

namespace ubisim::io {

inline constexpr std::string_view kVersion = "0.1.0";

/// One metric laid out like the exported CSV: rows are phi, columns B_D.
struct MetricTable {
  std::vector<double> phi_values;
  std::vector<double> b_d_values;
  std::vector<double> values;  // row-major [phi][b_d]

  double at(std::size_t phi_index, std::size_t b_d_index) const {
    return values[phi_index * b_d_values.size() + b_d_index];
  }
  bool operator==(const MetricTable&) const = default;
};

MetricTable metric_table(const SweepGrid& grid, Metric metric, bool stddev = false);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// CSV text: header "phi\b_d" then the B_D values; one row per phi.
std::string to_csv(const MetricTable& table);

/// Inverse of to_csv. Throws std::runtime_error on malformed input.
MetricTable parse_csv(std::string_view text);
MetricTable read_csv(const std::filesystem::path& path);

/// Writes text to a file, throwing std::runtime_error with the path on failure.
void write_text(const std::filesystem::path& path, std::string_view text);
std::string read_text(const std::filesystem::path& path);

struct ExportOptions {
  bool heatmaps = true;
  /// JSON text of the config actually used; embedded in the manifest.
  std::string config_json;
};

/// Writes <metric>.csv for the four metrics (plus <metric>_std.csv when
/// replicates > 1), manifest.json, and <metric>.png heatmaps into out_dir.
/// Returns the paths written.
std::vector<std::filesystem::path> export_grid(const SweepGrid& grid,
                                               const std::filesystem::path& out_dir,
                                               const ExportOptions& options = {});

/// Manifest JSON: spec echo, every cell seed, version, timestamp.
std::string manifest_json(const SweepGrid& grid, const ExportOptions& options,
                          const std::vector<std::string>& files);

}  // namespace ubisim::io
