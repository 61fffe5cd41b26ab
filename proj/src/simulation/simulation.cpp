#include "ubisim/simulation/simulation.hpp"

#include <algorithm>
#include <stdexcept>

#include "ubisim/simulation/rng.hpp"

namespace ubisim {

Population init_population(const ModelParams& params, std::uint64_t seed) {
  validate_params(params);
  const auto n = static_cast<std::size_t>(params.population_size);
  Population pop(n);
  const double width = params.alpha_max - params.alpha_min;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng::to_unit(rng::draw(seed, rng::kAlphaStream, i));
    pop.alpha[i] = params.alpha_min + width * u;
  }
  return pop;
}

SimulationRun run_simulation(const ModelParams& params, std::uint64_t seed, KernelPath path,
                             RunObserver* observer) {
  SimulationRun run;
  run.params = params;
  run.seed = seed;
  run.final_population = init_population(params, seed);
  run.metrics.reserve(static_cast<std::size_t>(params.horizon));
  for (std::int64_t t = 0; t < params.horizon; ++t) {
    PeriodOutcome outcome = step_period(run.final_population, params, path);
    if (observer != nullptr) observer->on_period(t, run.final_population, outcome);
    run.metrics.push_back(outcome.metrics);
  }
  return run;
}

RunSummary summarize(std::span<const PeriodMetrics> metrics, std::int64_t burn_in) {
  if (burn_in < 0 || static_cast<std::size_t>(burn_in) >= metrics.size()) {
    throw std::invalid_argument("summarize: burn_in leaves no periods to average");
  }
  RunSummary s;
  s.min_rho_E = metrics.front().rho_E;
  s.max_share_0 = metrics.front().share_0;
  for (const auto& m : metrics) {
    s.min_rho_E = std::min(s.min_rho_E, m.rho_E);
    s.max_share_0 = std::max(s.max_share_0, m.share_0);
  }
  double share_sum = 0.0;
  double unmet_sum = 0.0;
  for (std::size_t t = static_cast<std::size_t>(burn_in); t < metrics.size(); ++t) {
    share_sum += metrics[t].share_0;
    unmet_sum += metrics[t].unmet_fraction;
  }
  const auto window = static_cast<double>(metrics.size() - static_cast<std::size_t>(burn_in));
  s.avg_share_0 = share_sum / window;
  s.avg_unmet = unmet_sum / window;
  return s;
}

RunSummary summarize(const SimulationRun& run, std::int64_t burn_in) {
  return summarize(std::span<const PeriodMetrics>(run.metrics), burn_in);
}

}  // namespace ubisim
