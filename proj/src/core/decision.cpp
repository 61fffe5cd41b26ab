#include "ubisim/core/decision.hpp"

#include "ubisim/core/value.hpp"
#include "ubisim/economy/settlement.hpp"

namespace ubisim {

ActionEvaluation evaluate_action(const AgentState& agent, Action action,
                                 const ModelParams& params) {
  const double y_with_income = agent.y_balance + params.wage(action);
  const SettlementResult s = settle_necessities(agent.d_balance, y_with_income, params);

  ActionEvaluation e;
  e.action = action;
  e.satisfied_necessities = s.satisfied_necessities;
  e.residual_y = s.post_y;
  e.unmet = s.unmet;
  // Evaluated left to right; the vector kernels use the same order.
  double u = concave_value(s.satisfied_necessities);
  u = u + params.savings_weight * concave_value(s.post_y);
  u = u - agent.alpha * params.disutility(action);
  u = u - (s.unmet ? params.unmet_penalty : 0.0);
  e.utility = u;
  return e;
}

Action argmax_action(double u_essential, double u_nonessential, double u_nonwork) {
  if (u_essential >= u_nonessential && u_essential >= u_nonwork) return Action::Essential;
  if (u_nonessential >= u_nonwork) return Action::NonEssential;
  return Action::NonWork;
}

double Choice::essential_margin() const {
  const double un = evaluations[index_of(Action::NonEssential)].utility;
  const double u0 = evaluations[index_of(Action::NonWork)].utility;
  return evaluations[index_of(Action::Essential)].utility - (u0 > un ? u0 : un);
}

Action Choice::best_non_essential() const {
  return evaluations[index_of(Action::NonEssential)].utility >=
                 evaluations[index_of(Action::NonWork)].utility
             ? Action::NonEssential
             : Action::NonWork;
}

Choice choose_action(const AgentState& agent, const ModelParams& params) {
  Choice c;
  for (Action a : kAllActions) c.evaluations[index_of(a)] = evaluate_action(agent, a, params);
  c.action = argmax_action(c.evaluations[0].utility, c.evaluations[1].utility,
                           c.evaluations[2].utility);
  return c;
}

}  // namespace ubisim
