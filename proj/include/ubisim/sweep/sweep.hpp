#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ubisim/core/params.hpp"
#include "ubisim/kernels/kernels.hpp"
#include "ubisim/simulation/simulation.hpp"

namespace ubisim {

/// The (B_D, phi) grid behind the phase diagrams.
struct SweepSpec {
  std::vector<double> b_d_values;
  std::vector<double> phi_values;
  std::int64_t replicates = 3;
  ModelParams base_params;
  std::uint64_t base_seed = 20240101;

  bool operator==(const SweepSpec&) const = default;
};

/// Default grid: phi in {0, 0.1, ..., 1}, B_D at 11 evenly spaced points in
/// [0, 2 * necessity_total], three replicates.
SweepSpec default_sweep_spec(const ModelParams& base);

/// Mean across replicates and its population standard deviation.
struct MetricStat {
  double mean = 0.0;
  double stddev = 0.0;

  bool operator==(const MetricStat&) const = default;
};

struct SweepCellSummary {
  MetricStat min_rho_E;
  MetricStat max_share_0;
  MetricStat avg_share_0;
  MetricStat avg_unmet;

  bool operator==(const SweepCellSummary&) const = default;
};

enum class Metric { MinRhoE, MaxShare0, AvgShare0, AvgUnmet };

inline constexpr Metric kAllMetrics[] = {Metric::MinRhoE, Metric::MaxShare0,
                                         Metric::AvgShare0, Metric::AvgUnmet};

const char* metric_name(Metric m);
const MetricStat& metric_of(const SweepCellSummary& cell, Metric m);

struct SweepGrid {
  SweepSpec spec;
  /// Row-major, indexed [phi index][b_d index].
  std::vector<SweepCellSummary> cells;
  double wall_seconds = 0.0;

  std::size_t rows() const { return spec.phi_values.size(); }
  std::size_t cols() const { return spec.b_d_values.size(); }
  const SweepCellSummary& at(std::size_t phi_index, std::size_t b_d_index) const {
    return cells[phi_index * cols() + b_d_index];
  }
};

/// Lists spec problems (empty or non-increasing axes, phi outside [0, 1],
/// invalid derived ModelParams for any cell).
std::vector<ParamViolation> check_sweep_spec(const SweepSpec& spec);

/// Parameters of cell (phi index, b_d index).
ModelParams cell_params(const SweepSpec& spec, std::size_t phi_index, std::size_t b_d_index);

/// Simulates and summarizes every cell on up to `parallelism` threads. The
/// result does not depend on the thread count or the execution order.
/// Throws InvalidParams before any cell runs when the spec is invalid.
SweepGrid run_sweep(const SweepSpec& spec, std::int64_t parallelism,
                    KernelPath path = KernelPath::Auto);

/// As run_sweep, but visits cells in the given order (a permutation of the
/// row-major cell indices) on one thread.
SweepGrid run_sweep_in_order(const SweepSpec& spec, const std::vector<std::size_t>& order,
                             KernelPath path = KernelPath::Auto);

/// For each B_D column, the smallest phi whose mean min_rho_E falls below
/// `threshold`, or nullopt if none does.
std::vector<std::optional<double>> detect_phase_boundary(const SweepGrid& grid,
                                                         double threshold);

/// Same detection on a bare matrix of min_rho_E values laid out [phi][b_d].
std::vector<std::optional<double>> detect_phase_boundary(
    const std::vector<double>& phi_values, const std::vector<double>& b_d_values,
    const std::vector<double>& min_rho_e, double threshold);

/// Three-axis variant: one grid per decay rate.
std::vector<SweepGrid> run_decay_sweep(const SweepSpec& spec,
                                       const std::vector<double>& decay_rates,
                                       std::int64_t parallelism,
                                       KernelPath path = KernelPath::Auto);

}  // namespace ubisim
