#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ubisim/core/params.hpp"
#include "ubisim/economy/economy.hpp"
#include "ubisim/economy/population.hpp"
#include "ubisim/kernels/kernels.hpp"
#include "ubisim/simulation/metrics.hpp"

namespace ubisim {

/// Full record of one run: the inputs plus one PeriodMetrics per period.
struct SimulationRun {
  ModelParams params;
  std::uint64_t seed = 0;
  std::vector<PeriodMetrics> metrics;
  Population final_population;

  bool operator==(const SimulationRun&) const = default;
};

/// Summary statistics of one run.
struct RunSummary {
  double min_rho_E = 0.0;    // over all periods
  double max_share_0 = 0.0;  // over all periods
  double avg_share_0 = 0.0;  // over periods t >= burn_in
  double avg_unmet = 0.0;    // over periods t >= burn_in

  bool operator==(const RunSummary&) const = default;
};

/// population_size agents with alpha ~ Uniform[alpha_min, alpha_max] drawn
/// from a counter-based generator keyed by (seed, agent index); zero balances.
Population init_population(const ModelParams& params, std::uint64_t seed);

/// Observer called after each period with the period index and its outcome.
struct RunObserver {
  virtual ~RunObserver() = default;
  virtual void on_period(std::int64_t t, const Population& population,
                         const PeriodOutcome& outcome) = 0;
};

/// Runs horizon periods. Throws InvalidParams for invalid parameters.
SimulationRun run_simulation(const ModelParams& params, std::uint64_t seed,
                             KernelPath path = KernelPath::Auto,
                             RunObserver* observer = nullptr);

/// Extremes over the full series, averages over t >= burn_in.
/// Throws std::invalid_argument when no period remains after burn-in.
RunSummary summarize(std::span<const PeriodMetrics> metrics, std::int64_t burn_in);
RunSummary summarize(const SimulationRun& run, std::int64_t burn_in);

}  // namespace ubisim
