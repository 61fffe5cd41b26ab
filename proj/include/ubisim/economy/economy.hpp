#pragma once

#include <cstdint>
#include <vector>

#include "ubisim/core/action.hpp"
#include "ubisim/core/agent.hpp"
#include "ubisim/core/params.hpp"
#include "ubisim/economy/population.hpp"
#include "ubisim/kernels/kernels.hpp"
#include "ubisim/simulation/metrics.hpp"

namespace ubisim {

/// Money flows of one period, summed over agents in index order.
struct PeriodLedger {
  double ubi_issued = 0.0;
  double wages_paid = 0.0;
  double d_decayed = 0.0;
  double d_spent = 0.0;
  double y_spent = 0.0;

  bool operator==(const PeriodLedger&) const = default;
};

/// Credits the period's UBI to D. Y is untouched.
AgentState distribute_ubi(AgentState agent, const ModelParams& params);

/// Carried D shrinks by the decay rate: d <- d * (1 - lambda).
AgentState apply_decay(AgentState agent, const ModelParams& params);

struct PeriodOutcome {
  PeriodMetrics metrics;
  PeriodLedger ledger;
  /// Chosen action per agent, after any essential-slot rationing.
  std::vector<Action> actions;
  /// Per-agent payments toward necessities this period.
  std::vector<double> d_spent;
  std::vector<double> y_spent;
};

/// Advances every agent by one period, in place:
///   1. distribute UBI, 2. choose an action and credit its wage to Y,
///   3. settle necessities, 4. decay the carried D.
/// With an essential capacity, agents with the largest U_E - max(U_N, U_0)
/// keep the slots (lower index first on equal margins); the rest fall back
/// to their best other action.
PeriodOutcome step_period(Population& population, const ModelParams& params,
                          KernelPath path = KernelPath::Auto);

}  // namespace ubisim
