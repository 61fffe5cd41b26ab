#pragma once

namespace ubisim {

/// One agent: its fixed disutility scale and its two currency balances.
struct AgentState {
  double alpha = 1.0;
  double d_balance = 0.0;
  double y_balance = 0.0;

  bool operator==(const AgentState&) const = default;
};

}  // namespace ubisim
