#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ubisim/core/params.hpp"
#include "ubisim/sweep/sweep.hpp"

namespace ubisim::io {

/// Everything a config file can set. Keys are flat and named after the
/// fields of ModelParams and SweepSpec; every key has a default.
struct Config {
  ModelParams model;
  SweepSpec sweep;
  /// Non-empty turns on the three-axis sweep: one grid per decay rate.
  std::vector<double> decay_values;
  double boundary_threshold = 0.8;
};

/// Parse or validation failure. `violations` names each offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string origin, std::vector<ParamViolation> violations);

  const std::vector<ParamViolation>& violations() const { return violations_; }

 private:
  std::vector<ParamViolation> violations_;
};

/// Defaults for every key, including the default sweep grid.
Config default_config();

/// Parses JSON config text. Empty or whitespace-only text yields defaults.
/// Unknown keys, type mismatches and constraint violations throw ConfigError.
Config parse_config(std::string_view text, std::string_view origin = "<config>");

/// Reads and parses a config file. Unreadable files throw ConfigError.
Config load_config(const std::filesystem::path& path);

/// The fully defaulted config as JSON (what the run actually used).
std::string config_to_json(const Config& config, int indent = 2);

/// Names of all accepted keys, in documentation order.
const std::vector<std::string>& config_keys();

}  // namespace ubisim::io
