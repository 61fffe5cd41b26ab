#include "ubisim/sweep/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "ubisim/simulation/rng.hpp"

namespace ubisim {

SweepSpec default_sweep_spec(const ModelParams& base) {
  SweepSpec spec;
  spec.base_params = base;
  for (int i = 0; i <= 10; ++i) {
    spec.phi_values.push_back(i / 10.0);
    spec.b_d_values.push_back(2.0 * base.necessity_total * i / 10.0);
  }
  return spec;
}

const char* metric_name(Metric m) {
  switch (m) {
    case Metric::MinRhoE:
      return "min_rho_E";
    case Metric::MaxShare0:
      return "max_share_0";
    case Metric::AvgShare0:
      return "avg_share_0";
    case Metric::AvgUnmet:
      return "avg_unmet";
  }
  return "?";
}

const MetricStat& metric_of(const SweepCellSummary& cell, Metric m) {
  switch (m) {
    case Metric::MinRhoE:
      return cell.min_rho_E;
    case Metric::MaxShare0:
      return cell.max_share_0;
    case Metric::AvgShare0:
      return cell.avg_share_0;
    case Metric::AvgUnmet:
      break;
  }
  return cell.avg_unmet;
}

ModelParams cell_params(const SweepSpec& spec, std::size_t phi_index, std::size_t b_d_index) {
  ModelParams p = spec.base_params;
  p.acceptance_ratio = spec.phi_values.at(phi_index);
  p.ubi_amount = spec.b_d_values.at(b_d_index);
  return p;
}

std::vector<ParamViolation> check_sweep_spec(const SweepSpec& spec) {
  std::vector<ParamViolation> v;
  auto check_axis = [&](const std::vector<double>& axis, const char* key) {
    if (axis.empty()) {
      v.push_back({key, "must be non-empty"});
      return;
    }
    for (std::size_t i = 0; i < axis.size(); ++i) {
      if (!std::isfinite(axis[i])) v.push_back({key, "values must be finite"});
      if (i > 0 && !(axis[i] > axis[i - 1])) v.push_back({key, "must be strictly increasing"});
    }
  };
  check_axis(spec.b_d_values, "b_d_values");
  check_axis(spec.phi_values, "phi_values");
  for (double phi : spec.phi_values) {
    if (!(phi >= 0.0 && phi <= 1.0)) {
      v.push_back({"phi_values", "every acceptance ratio must lie in [0, 1]"});
      break;
    }
  }
  for (double b : spec.b_d_values) {
    if (!(b >= 0.0)) {
      v.push_back({"b_d_values", "every UBI amount must be >= 0"});
      break;
    }
  }
  if (spec.replicates < 1) v.push_back({"replicates", "must be >= 1"});

  // Swept fields are covered above; the rest come from the template.
  for (auto& p : check_params(spec.base_params)) {
    if (p.key != "acceptance_ratio" && p.key != "ubi_amount") v.push_back(std::move(p));
  }
  return v;
}

namespace {

MetricStat stat_of(const std::vector<RunSummary>& runs, std::size_t first, std::size_t count,
                   double RunSummary::*field) {
  double sum = 0.0;
  for (std::size_t r = 0; r < count; ++r) sum += runs[first + r].*field;
  const double mean = sum / static_cast<double>(count);
  double sq = 0.0;
  for (std::size_t r = 0; r < count; ++r) {
    const double dev = runs[first + r].*field - mean;
    sq += dev * dev;
  }
  return {mean, std::sqrt(sq / static_cast<double>(count))};
}

RunSummary run_task(const SweepSpec& spec, std::size_t task, KernelPath path) {
  const auto reps = static_cast<std::size_t>(spec.replicates);
  const std::size_t cell = task / reps;
  const std::size_t rep = task % reps;
  const std::size_t phi_index = cell / spec.b_d_values.size();
  const std::size_t b_d_index = cell % spec.b_d_values.size();
  const ModelParams p = cell_params(spec, phi_index, b_d_index);
  const std::uint64_t seed = rng::cell_seed(spec.base_seed, b_d_index, phi_index, rep);
  return summarize(run_simulation(p, seed, path), p.burn_in);
}

SweepGrid assemble(const SweepSpec& spec, const std::vector<RunSummary>& runs) {
  SweepGrid grid;
  grid.spec = spec;
  const auto reps = static_cast<std::size_t>(spec.replicates);
  const std::size_t cells = spec.phi_values.size() * spec.b_d_values.size();
  grid.cells.resize(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    SweepCellSummary& s = grid.cells[c];
    s.min_rho_E = stat_of(runs, c * reps, reps, &RunSummary::min_rho_E);
    s.max_share_0 = stat_of(runs, c * reps, reps, &RunSummary::max_share_0);
    s.avg_share_0 = stat_of(runs, c * reps, reps, &RunSummary::avg_share_0);
    s.avg_unmet = stat_of(runs, c * reps, reps, &RunSummary::avg_unmet);
  }
  return grid;
}

void require_valid(const SweepSpec& spec) {
  auto v = check_sweep_spec(spec);
  if (!v.empty()) throw InvalidParams(std::move(v));
}

std::size_t task_count(const SweepSpec& spec) {
  return spec.phi_values.size() * spec.b_d_values.size() *
         static_cast<std::size_t>(spec.replicates);
}

}  // namespace

SweepGrid run_sweep(const SweepSpec& spec, std::int64_t parallelism, KernelPath path) {
  require_valid(spec);
  if (parallelism < 1) throw std::invalid_argument("run_sweep: parallelism must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  const std::size_t tasks = task_count(spec);
  std::vector<RunSummary> runs(tasks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t t = next++; t < tasks; t = next++) {
      try {
        runs[t] = run_task(spec, t, path);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks;
      }
    }
  };

  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(parallelism), tasks);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  SweepGrid grid = assemble(spec, runs);
  grid.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return grid;
}

SweepGrid run_sweep_in_order(const SweepSpec& spec, const std::vector<std::size_t>& order,
                             KernelPath path) {
  require_valid(spec);
  const std::size_t cells = spec.phi_values.size() * spec.b_d_values.size();
  if (order.size() != cells) throw std::invalid_argument("run_sweep_in_order: order must cover every cell");
  const auto reps = static_cast<std::size_t>(spec.replicates);
  std::vector<RunSummary> runs(task_count(spec));
  std::vector<bool> seen(cells, false);
  for (std::size_t c : order) {
    if (c >= cells || seen[c]) throw std::invalid_argument("run_sweep_in_order: not a permutation");
    seen[c] = true;
    for (std::size_t r = 0; r < reps; ++r) runs[c * reps + r] = run_task(spec, c * reps + r, path);
  }
  return assemble(spec, runs);
}

std::vector<std::optional<double>> detect_phase_boundary(const std::vector<double>& phi_values,
                                                         const std::vector<double>& b_d_values,
                                                         const std::vector<double>& min_rho_e,
                                                         double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw std::invalid_argument("detect_phase_boundary: threshold must lie in (0, 1)");
  }
  if (min_rho_e.size() != phi_values.size() * b_d_values.size()) {
    throw std::invalid_argument("detect_phase_boundary: matrix size does not match axes");
  }
  std::vector<std::optional<double>> out(b_d_values.size());
  for (std::size_t col = 0; col < b_d_values.size(); ++col) {
    for (std::size_t row = 0; row < phi_values.size(); ++row) {
      if (min_rho_e[row * b_d_values.size() + col] < threshold) {
        out[col] = phi_values[row];
        break;
      }
    }
  }
  return out;
}

std::vector<std::optional<double>> detect_phase_boundary(const SweepGrid& grid, double threshold) {
  std::vector<double> values;
  values.reserve(grid.cells.size());
  for (const auto& c : grid.cells) values.push_back(c.min_rho_E.mean);
  return detect_phase_boundary(grid.spec.phi_values, grid.spec.b_d_values, values, threshold);
}

std::vector<SweepGrid> run_decay_sweep(const SweepSpec& spec, const std::vector<double>& decay_rates,
                                       std::int64_t parallelism, KernelPath path) {
  std::vector<SweepSpec> specs;
  for (double rate : decay_rates) {
    SweepSpec s = spec;
    s.base_params.decay_rate = rate;
    require_valid(s);
    specs.push_back(std::move(s));
  }
  std::vector<SweepGrid> grids;
  for (const auto& s : specs) grids.push_back(run_sweep(s, parallelism, path));
  return grids;
}

}  // namespace ubisim
