// Command-line driver: single runs, grid sweeps, boundary detection on saved
// grids, and config validation. Reads simulation output only.
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "ubisim/io/config.hpp"
#include "ubisim/io/grid_io.hpp"
#include "ubisim/io/run_io.hpp"
#include "ubisim/simulation/simulation.hpp"
#include "ubisim/sweep/sweep.hpp"

namespace fs = std::filesystem;
using namespace ubisim;

namespace {

enum Exit { kOk = 0, kFailure = 1, kConfigError = 2 };

struct Options {
  std::string config_path;
  std::string out_dir = "ubisim_out";
  std::optional<std::uint64_t> seed;
  std::int64_t threads = 0;
  bool quiet = false;
  std::string grid_dir;
  std::optional<double> threshold;
  bool no_heatmaps = false;
};

class Console {
 public:
  explicit Console(bool quiet)
      : quiet_(quiet), color_(std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout)) != 0) {}

  void info(const std::string& msg) const {
    if (!quiet_) std::cout << msg << '\n';
  }
  void ok(const std::string& msg) const {
    if (!quiet_) std::cout << paint("32", msg) << '\n';
  }
  void error(const std::string& msg) const {
    const bool tty = std::getenv("NO_COLOR") == nullptr && isatty(fileno(stderr)) != 0;
    std::cerr << (tty ? "\x1b[31mubisim: error:\x1b[0m " : "ubisim: error: ") << msg << '\n';
  }

 private:
  std::string paint(const char* code, const std::string& s) const {
    return color_ ? std::string("\x1b[") + code + "m" + s + "\x1b[0m" : s;
  }
  bool quiet_;
  bool color_;
};

io::Config load(const Options& opt) {
  io::Config cfg = opt.config_path.empty() ? io::default_config() : io::load_config(opt.config_path);
  if (opt.seed) cfg.sweep.base_seed = *opt.seed;
  return cfg;
}

std::int64_t thread_count(const Options& opt) {
  if (opt.threads > 0) return opt.threads;
  return std::max<std::int64_t>(1, std::thread::hardware_concurrency());
}

std::string boundary_line(const std::vector<double>& b_d, const std::vector<std::optional<double>>& phi) {
  std::string s;
  for (std::size_t i = 0; i < b_d.size(); ++i) {
    s += "  B_D=" + io::format_double(b_d[i]) + ": " +
         (phi[i] ? "phi=" + io::format_double(*phi[i]) : std::string("none")) + "\n";
  }
  return s;
}

int cmd_validate(const Options& opt, const Console& out) {
  const io::Config cfg = load(opt);
  out.ok("config OK" + (opt.config_path.empty() ? std::string(" (defaults)") : ": " + opt.config_path));
  out.info(io::config_to_json(cfg));
  return kOk;
}

int cmd_run(const Options& opt, const Console& out) {
  const io::Config cfg = load(opt);
  const SimulationRun run = run_simulation(cfg.model, cfg.sweep.base_seed);
  const RunSummary s = summarize(run, cfg.model.burn_in);
  fs::create_directories(opt.out_dir);
  const fs::path csv = fs::path(opt.out_dir) / "periods.csv";
  io::write_period_csv(run, csv);
  out.ok("wrote " + csv.string());
  out.info("min_rho_E=" + io::format_double(s.min_rho_E) + " max_share_0=" +
           io::format_double(s.max_share_0) + " avg_share_0=" + io::format_double(s.avg_share_0) +
           " avg_unmet=" + io::format_double(s.avg_unmet));
  return kOk;
}

int cmd_sweep(const Options& opt, const Console& out) {
  const io::Config cfg = load(opt);
  io::ExportOptions ex;
  ex.heatmaps = !opt.no_heatmaps;
  ex.config_json = io::config_to_json(cfg);
  const double threshold = opt.threshold.value_or(cfg.boundary_threshold);

  auto report = [&](const SweepGrid& grid, const fs::path& dir) {
    io::export_grid(grid, dir, ex);
    out.ok("wrote grid to " + dir.string() + " (" + std::to_string(grid.rows()) + "x" +
           std::to_string(grid.cols()) + " cells, " + io::format_double(grid.wall_seconds) + " s)");
    out.info("phase boundary (min_rho_E < " + io::format_double(threshold) + "):\n" +
             boundary_line(grid.spec.b_d_values, detect_phase_boundary(grid, threshold)));
  };

  if (cfg.decay_values.empty()) {
    report(run_sweep(cfg.sweep, thread_count(opt)), opt.out_dir);
  } else {
    const auto grids = run_decay_sweep(cfg.sweep, cfg.decay_values, thread_count(opt));
    for (std::size_t i = 0; i < grids.size(); ++i) {
      report(grids[i], fs::path(opt.out_dir) / ("decay_" + std::to_string(i)));
    }
  }
  return kOk;
}

int cmd_boundary(const Options& opt, const Console& out) {
  double threshold = 0.8;
  if (!opt.config_path.empty()) threshold = load(opt).boundary_threshold;
  if (opt.threshold) threshold = *opt.threshold;
  const fs::path dir = opt.grid_dir.empty() ? fs::path(opt.out_dir) : fs::path(opt.grid_dir);
  const io::MetricTable t = io::read_csv(dir / "min_rho_E.csv");
  const auto phi = detect_phase_boundary(t.phi_values, t.b_d_values, t.values, threshold);
  out.ok("phase boundary (min_rho_E < " + io::format_double(threshold) + ") from " + dir.string());
  std::cout << "b_d,phi_boundary\n";
  for (std::size_t i = 0; i < phi.size(); ++i) {
    std::cout << io::format_double(t.b_d_values[i]) << ','
              << (phi[i] ? io::format_double(*phi[i]) : std::string("none")) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ubisim: dual-currency UBI agent-based simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--config", opt.config_path, "JSON config file (defaults when omitted)");
  app.add_option("--out", opt.out_dir, "Output directory");
  app.add_option("--seed", opt.seed, "Override base_seed");
  app.add_option("--threads", opt.threads, "Worker threads for sweeps (default: all cores)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", opt.quiet, "Print errors only");

  auto* run = app.add_subcommand("run", "Single simulation; writes per-period metrics CSV");
  auto* sweep = app.add_subcommand("sweep", "Full (B_D, phi) grid; writes CSV grids, manifest, heatmaps");
  sweep->add_flag("--no-heatmaps", opt.no_heatmaps, "Skip PNG rendering");
  sweep->add_option("--threshold", opt.threshold, "Boundary threshold for the printed summary");
  auto* boundary = app.add_subcommand("boundary", "Detect the phase boundary on a saved grid");
  boundary->add_option("--grid", opt.grid_dir, "Directory holding min_rho_E.csv (default: --out)");
  boundary->add_option("--threshold", opt.threshold, "min_rho_E threshold in (0, 1)");
  auto* validate = app.add_subcommand("validate", "Check a config and print it with defaults applied");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  const Console console(opt.quiet);
  try {
    if (*run) return cmd_run(opt, console);
    if (*sweep) return cmd_sweep(opt, console);
    if (*boundary) return cmd_boundary(opt, console);
    if (*validate) return cmd_validate(opt, console);
  } catch (const io::ConfigError& e) {
    console.error(std::string("config: ") + e.what());
    return kConfigError;
  } catch (const InvalidParams& e) {
    console.error(e.what());
    return kConfigError;
  } catch (const std::exception& e) {
    console.error(e.what());
    return kFailure;
  }
  return kFailure;
}
