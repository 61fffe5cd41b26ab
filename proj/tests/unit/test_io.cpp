#include <algorithm>
#include <cstring>
#include <filesystem>
#include <random>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "ubisim/io/config.hpp"
#include "ubisim/io/grid_io.hpp"
#include "ubisim/io/heatmap.hpp"
#include "ubisim/io/run_io.hpp"

using namespace ubisim;
using namespace ubisim::io;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const char* name) {
  fs::path p = fs::temp_directory_path() / "ubisim_test_io" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

bool has_violation(const ConfigError& e, std::string_view key, std::string_view fragment) {
  for (const auto& v : e.violations())
    if (v.key == key && v.constraint.find(fragment) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("empty config yields defaults") {
  for (std::string_view text : {"", "   \n", "{}"}) {
    const Config c = parse_config(text);
    CHECK(c.model == ModelParams{});
    CHECK(c.sweep == default_sweep_spec(ModelParams{}));
    CHECK(c.boundary_threshold == 0.8);
    CHECK(c.decay_values.empty());
  }
}

TEST_CASE("config overrides and derived axes") {
  const Config c = parse_config(R"({"necessity_total": 50, "replicates": 1, "phi_values": [0.25, 0.75]})");
  CHECK(c.model.necessity_total == 50.0);
  CHECK(c.sweep.replicates == 1);
  CHECK(c.sweep.phi_values == std::vector<double>{0.25, 0.75});
  CHECK(c.sweep.b_d_values.back() == 100.0);
  CHECK(c.sweep.base_params == c.model);
}

TEST_CASE("config rejects bad values with the key and bound") {
  SUBCASE("acceptance_ratio above 1") {
    try {
      (void)parse_config(R"({"acceptance_ratio": 1.3})");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(has_violation(e, "acceptance_ratio", "[0, 1]"));
    }
  }
  SUBCASE("L_N not below L_E") {
    try {
      (void)parse_config(R"({"labor_disutility_nonessential": 2.5, "labor_disutility_essential": 2.0})");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(has_violation(e, "labor_disutility_essential", "ordering"));
    }
  }
  SUBCASE("unknown key") {
    try {
      (void)parse_config(R"({"acceptence_ratio": 0.5})");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(has_violation(e, "acceptence_ratio", "unknown"));
    }
  }
  SUBCASE("wrong type and malformed JSON") {
    CHECK_THROWS_AS(parse_config(R"({"horizon": "long"})"), ConfigError);
    CHECK_THROWS_AS(parse_config("{"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"phi_values": [0.5, 1.2]})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"boundary_threshold": 1.0})"), ConfigError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_config("/nonexistent/ubisim.json"), ConfigError);
  }
}

TEST_CASE("config_to_json round-trips") {
  Config c = parse_config(R"({"decay_values": [0.0, 0.5], "essential_capacity": 400})");
  const Config back = parse_config(config_to_json(c));
  CHECK(back.model == c.model);
  CHECK(back.sweep == c.sweep);
  CHECK(back.decay_values == c.decay_values);
  const auto j = nlohmann::json::parse(config_to_json(c));
  for (const auto& key : config_keys()) CHECK_MESSAGE(j.contains(key), key);
}

TEST_CASE("CSV round trip is exact") {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    MetricTable t;
    const std::size_t rows = 1 + trial % 5, cols = 1 + trial % 7;
    for (std::size_t r = 0; r < rows; ++r) t.phi_values.push_back(static_cast<double>(r) / 7.0);
    for (std::size_t c = 0; c < cols; ++c) t.b_d_values.push_back(13.37 * static_cast<double>(c));
    for (std::size_t i = 0; i < rows * cols; ++i) {
      const double u = unit(gen);
      t.values.push_back(trial % 3 == 0 ? u * 1e-300 : u);
    }
    const MetricTable back = parse_csv(to_csv(t));
    CHECK(back == t);
    CHECK(std::memcmp(back.values.data(), t.values.data(), t.values.size() * sizeof(double)) == 0);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK_THROWS_AS(parse_csv("phi\\b_d,1\n0.5,abc\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_csv("phi\\b_d,1,2\n0.5,1\n"), std::runtime_error);
}

TEST_CASE("exporting a 1x1 grid") {
  SweepSpec s;
  s.base_params.population_size = 20;
  s.base_params.horizon = 5;
  s.b_d_values = {100.0};
  s.phi_values = {0.5};
  s.replicates = 1;
  s.base_seed = 424242;
  const SweepGrid g = run_sweep(s, 1);
  const fs::path dir = scratch("one_cell");
  const auto files = export_grid(g, dir, {true, "{}"});

  const MetricTable t = read_csv(dir / "min_rho_E.csv");
  CHECK(t.values.size() == 1);
  CHECK(t.values[0] == g.cells[0].min_rho_E.mean);
  CHECK(fs::exists(dir / "min_rho_E.png"));
  CHECK_FALSE(fs::exists(dir / "min_rho_E_std.csv"));

  const auto m = nlohmann::json::parse(read_text(dir / "manifest.json"));
  CHECK(m["spec"]["base_seed"].get<std::uint64_t>() == 424242);
  CHECK(m["version"] == std::string(kVersion));
  CHECK(m["seeds"]["cells"].size() == 1);
  for (const auto& f : files) CHECK(fs::exists(f));
}

TEST_CASE("replicated export writes spread grids") {
  SweepSpec s;
  s.base_params.population_size = 20;
  s.base_params.horizon = 5;
  s.b_d_values = {0.0, 100.0};
  s.phi_values = {0.0, 1.0};
  s.replicates = 2;
  const fs::path dir = scratch("replicated");
  export_grid(run_sweep(s, 1), dir, {false, "{}"});
  CHECK(fs::exists(dir / "avg_unmet_std.csv"));
  CHECK_FALSE(fs::exists(dir / "avg_unmet.png"));
}

TEST_CASE("colormap") {
  CHECK(colormap(-1.0) == colormap(0.0));
  CHECK(colormap(2.0) == colormap(1.0));
  CHECK(colormap(0.0) != colormap(1.0));
  // dark at zero, bright at one
  const auto lum = [](Rgb c) { return 0.299 * c[0] + 0.587 * c[1] + 0.114 * c[2]; };
  double prev = -1.0;
  for (int i = 0; i <= 20; ++i) {
    const double l = lum(colormap(i / 20.0));
    CHECK(l > prev);
    prev = l;
  }
}

TEST_CASE("period CSV") {
  ModelParams p;
  p.population_size = 10;
  p.horizon = 3;
  const std::string csv = period_csv(run_simulation(p, 1));
  CHECK(csv.rfind("t,rho_E,share_N,share_0,unmet_fraction", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}
