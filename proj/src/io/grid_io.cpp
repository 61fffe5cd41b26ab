#include "ubisim/io/grid_io.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"
#include "ubisim/io/heatmap.hpp"
#include "ubisim/simulation/rng.hpp"

namespace ubisim::io {
namespace {

constexpr std::string_view kCorner = "phi\\b_d";

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view s, std::size_t line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error("csv line " + std::to_string(line_no) + ": not a number: '" +
                             std::string(s) + "'");
  }
  return v;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json params_json(const ModelParams& p) {
  nlohmann::json j;
  j["ubi_amount"] = p.ubi_amount;
  j["acceptance_ratio"] = p.acceptance_ratio;
  j["decay_rate"] = p.decay_rate;
  j["savings_weight"] = p.savings_weight;
  j["unmet_penalty"] = p.unmet_penalty;
  j["wage_essential"] = p.wage_essential;
  j["wage_nonessential"] = p.wage_nonessential;
  j["labor_disutility_essential"] = p.labor_disutility_essential;
  j["labor_disutility_nonessential"] = p.labor_disutility_nonessential;
  j["labor_disutility_nonwork"] = p.labor_disutility_nonwork;
  j["necessity_total"] = p.necessity_total;
  j["alpha_min"] = p.alpha_min;
  j["alpha_max"] = p.alpha_max;
  j["population_size"] = p.population_size;
  j["horizon"] = p.horizon;
  j["burn_in"] = p.burn_in;
  j["essential_capacity"] =
      p.essential_capacity ? nlohmann::json(*p.essential_capacity) : nlohmann::json(nullptr);
  return j;
}

}  // namespace

MetricTable metric_table(const SweepGrid& grid, Metric metric, bool stddev) {
  MetricTable t;
  t.phi_values = grid.spec.phi_values;
  t.b_d_values = grid.spec.b_d_values;
  t.values.reserve(grid.cells.size());
  for (const auto& c : grid.cells) {
    const MetricStat& s = metric_of(c, metric);
    t.values.push_back(stddev ? s.stddev : s.mean);
  }
  return t;
}

std::string format_double(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

std::string to_csv(const MetricTable& table) {
  std::string out(kCorner);
  for (double b : table.b_d_values) {
    out += ',';
    out += format_double(b);
  }
  out += '\n';
  for (std::size_t r = 0; r < table.phi_values.size(); ++r) {
    out += format_double(table.phi_values[r]);
    for (std::size_t c = 0; c < table.b_d_values.size(); ++c) {
      out += ',';
      out += format_double(table.at(r, c));
    }
    out += '\n';
  }
  return out;
}

MetricTable parse_csv(std::string_view text) {
  MetricTable t;
  std::size_t line_no = 0;
  bool header = true;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    const auto fields = split(line, ',');
    if (header) {
      if (fields.front() != kCorner) throw std::runtime_error("csv: missing header cell '" + std::string(kCorner) + "'");
      for (std::size_t i = 1; i < fields.size(); ++i) t.b_d_values.push_back(parse_double(fields[i], line_no));
      header = false;
      continue;
    }
    if (fields.size() != t.b_d_values.size() + 1) {
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected " +
                               std::to_string(t.b_d_values.size() + 1) + " fields");
    }
    t.phi_values.push_back(parse_double(fields[0], line_no));
    for (std::size_t i = 1; i < fields.size(); ++i) t.values.push_back(parse_double(fields[i], line_no));
  }
  if (header) throw std::runtime_error("csv: empty input");
  return t;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MetricTable read_csv(const std::filesystem::path& path) {
  try {
    return parse_csv(read_text(path));
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

std::string manifest_json(const SweepGrid& grid, const ExportOptions& options,
                          const std::vector<std::string>& files) {
  const SweepSpec& spec = grid.spec;
  nlohmann::json j;
  j["tool"] = "ubisim";
  j["version"] = std::string(kVersion);
  j["created_utc"] = utc_timestamp();
  j["wall_seconds"] = grid.wall_seconds;
  j["spec"] = {{"b_d_values", spec.b_d_values},
               {"phi_values", spec.phi_values},
               {"replicates", spec.replicates},
               {"base_seed", spec.base_seed},
               {"base_params", params_json(spec.base_params)}};
  nlohmann::json cells = nlohmann::json::array();
  for (std::size_t r = 0; r < spec.phi_values.size(); ++r) {
    for (std::size_t c = 0; c < spec.b_d_values.size(); ++c) {
      nlohmann::json seeds = nlohmann::json::array();
      for (std::int64_t k = 0; k < spec.replicates; ++k) {
        seeds.push_back(rng::cell_seed(spec.base_seed, c, r, static_cast<std::uint64_t>(k)));
      }
      cells.push_back({{"phi_index", r}, {"b_d_index", c}, {"seeds", seeds}});
    }
  }
  j["seeds"] = {{"base_seed", spec.base_seed},
                {"derivation", "cell_seed(base_seed, b_d_index, phi_index, replicate)"},
                {"cells", cells}};
  j["files"] = files;
  if (!options.config_json.empty()) j["config"] = nlohmann::json::parse(options.config_json);
  return j.dump(2) + "\n";
}

std::vector<std::filesystem::path> export_grid(const SweepGrid& grid,
                                               const std::filesystem::path& out_dir,
                                               const ExportOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create directory " + out_dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;
  for (Metric m : kAllMetrics) {
    const std::string name = metric_name(m);
    const MetricTable table = metric_table(grid, m);
    written.push_back(out_dir / (name + ".csv"));
    write_text(written.back(), to_csv(table));
    if (grid.spec.replicates > 1) {
      written.push_back(out_dir / (name + "_std.csv"));
      write_text(written.back(), to_csv(metric_table(grid, m, true)));
    }
    if (options.heatmaps) {
      written.push_back(out_dir / (name + ".png"));
      write_heatmap_png(table, written.back());
    }
  }

  std::vector<std::string> names;
  for (const auto& p : written) names.push_back(p.filename().string());
  written.push_back(out_dir / "manifest.json");
  write_text(written.back(), manifest_json(grid, options, names));
  return written;
}

}  // namespace ubisim::io
