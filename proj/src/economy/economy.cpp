#include "ubisim/economy/economy.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace ubisim {

AgentState distribute_ubi(AgentState agent, const ModelParams& params) {
  agent.d_balance = agent.d_balance + params.ubi_amount;
  return agent;
}

AgentState apply_decay(AgentState agent, const ModelParams& params) {
  agent.d_balance = agent.d_balance * (1.0 - params.decay_rate);
  return agent;
}

namespace {

void ration_essential(std::int64_t capacity, std::span<std::uint8_t> action,
                      std::span<const std::uint8_t> fallback, std::span<const double> margin) {
  std::vector<std::size_t> essential;
  for (std::size_t i = 0; i < action.size(); ++i) {
    if (action[i] == static_cast<std::uint8_t>(Action::Essential)) essential.push_back(i);
  }
  if (static_cast<std::int64_t>(essential.size()) <= capacity) return;
  std::stable_sort(essential.begin(), essential.end(),
                   [&](std::size_t a, std::size_t b) { return margin[a] > margin[b]; });
  for (std::size_t r = static_cast<std::size_t>(capacity); r < essential.size(); ++r) {
    action[essential[r]] = fallback[essential[r]];
  }
}

}  // namespace

PeriodOutcome step_period(Population& population, const ModelParams& params, KernelPath path) {
  const StepKernels& kern = select_kernels(path);
  const KernelContext ctx{params, KernelParams::from(params)};
  const std::size_t n = population.size();

  PeriodOutcome out;
  for (std::size_t i = 0; i < n; ++i) {
    population.d_balance[i] = distribute_ubi(population.agent(i), params).d_balance;
    out.ledger.ubi_issued += params.ubi_amount;
  }

  std::vector<std::uint8_t> action(n), fallback(n), unmet(n);
  std::vector<double> margin(n);
  kern.decide(ctx, population.alpha, population.d_balance, population.y_balance,
              {action, fallback, margin});
  if (params.essential_capacity) ration_essential(*params.essential_capacity, action, fallback, margin);

  std::vector<double> d_spent(n), y_spent(n), d_decayed(n);
  kern.settle(ctx, {action, population.d_balance, population.y_balance, d_spent, y_spent,
                    d_decayed, unmet});

  std::array<std::int64_t, kActionCount> counts{};
  out.actions.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<Action>(action[i]);
    out.actions[i] = a;
    ++counts[index_of(a)];
    out.ledger.wages_paid += params.wage(a);
    out.ledger.d_spent += d_spent[i];
    out.ledger.y_spent += y_spent[i];
    out.ledger.d_decayed += d_decayed[i];
    out.metrics.unmet_count += unmet[i];
  }

  const double total = static_cast<double>(n);
  out.metrics.essential_count = counts[index_of(Action::Essential)];
  out.metrics.nonessential_count = counts[index_of(Action::NonEssential)];
  out.metrics.nonwork_count = counts[index_of(Action::NonWork)];
  out.metrics.rho_E = static_cast<double>(out.metrics.essential_count) / total;
  out.metrics.share_N = static_cast<double>(out.metrics.nonessential_count) / total;
  out.metrics.share_0 = static_cast<double>(out.metrics.nonwork_count) / total;
  out.metrics.unmet_fraction = static_cast<double>(out.metrics.unmet_count) / total;
  out.d_spent = std::move(d_spent);
  out.y_spent = std::move(y_spent);
  return out;
}

}  // namespace ubisim
