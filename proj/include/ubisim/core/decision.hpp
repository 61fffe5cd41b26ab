#pragma once

#include <array>

#include "ubisim/core/action.hpp"
#include "ubisim/core/agent.hpp"
#include "ubisim/core/params.hpp"

namespace ubisim {

/// Outcome of one hypothetical action for one agent in the current period.
struct ActionEvaluation {
  Action action = Action::NonWork;
  double satisfied_necessities = 0.0;  // C_D(a): necessities covered, D first
  double residual_y = 0.0;             // S_Y(a): Y left after settlement
  bool unmet = false;
  double utility = 0.0;

  bool operator==(const ActionEvaluation&) const = default;
};

/// Utility of taking `action` this period, without mutating the agent.
///
/// The wage is credited to Y first, then necessities are settled, then
///   U = u(C_D) + beta * u(S_Y) - alpha * L(a) - pi * [unmet].
ActionEvaluation evaluate_action(const AgentState& agent, Action action,
                                 const ModelParams& params);

/// Index of the maximum utility in branch order: E on any tie, then N over 0.
Action argmax_action(double u_essential, double u_nonessential,
                     double u_nonwork);

struct Choice {
  Action action = Action::NonWork;
  std::array<ActionEvaluation, kActionCount> evaluations{};

  const ActionEvaluation& chosen() const { return evaluations[index_of(action)]; }

  /// U_E - max(U_N, U_0); used to rank agents when essential slots run out.
  double essential_margin() const;

  /// Best action once Essential is ruled out.
  Action best_non_essential() const;
};

/// Evaluates all three actions and returns the utility maximizer.
Choice choose_action(const AgentState& agent, const ModelParams& params);

}  // namespace ubisim
