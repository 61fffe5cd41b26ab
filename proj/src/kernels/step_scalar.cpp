// Scalar reference kernels. They call the same functions the rest of the
// library uses for single agents, so they define the expected bits for the
// vectorized variants.
#include <cmath>

#include "ubisim/core/decision.hpp"
#include "ubisim/economy/economy.hpp"
#include "ubisim/economy/settlement.hpp"
#include "ubisim/kernels/kernels.hpp"

namespace ubisim::kernels {

void decide_scalar(const KernelContext& ctx, std::span<const double> alpha,
                   std::span<const double> d, std::span<const double> y, DecideOutput out) {
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const Choice c = choose_action({alpha[i], d[i], y[i]}, ctx.params);
    out.action[i] = static_cast<std::uint8_t>(c.action);
    out.fallback[i] = static_cast<std::uint8_t>(c.best_non_essential());
    out.margin[i] = c.essential_margin();
  }
}

void settle_scalar(const KernelContext& ctx, SettleIo io) {
  for (std::size_t i = 0; i < io.d.size(); ++i) {
    const auto action = static_cast<Action>(io.action[i]);
    const double y_with_income = io.y[i] + ctx.params.wage(action);
    const SettlementResult s = settle_necessities(io.d[i], y_with_income, ctx.params);
    const AgentState after = apply_decay({0.0, s.post_d, s.post_y}, ctx.params);
    io.d_spent[i] = s.d_spent;
    io.y_spent[i] = s.y_spent;
    io.d_decayed[i] = s.post_d - after.d_balance;
    io.unmet[i] = s.unmet ? 1 : 0;
    io.d[i] = after.d_balance;
    io.y[i] = after.y_balance;
  }
}

}  // namespace ubisim::kernels
