#pragma once

#include <cstddef>
#include <vector>

#include "ubisim/core/agent.hpp"

namespace ubisim {

/// Structure-of-arrays population; index i across the three columns is one
/// agent. The layout feeds the vectorized step kernels directly.
struct Population {
  std::vector<double> alpha;
  std::vector<double> d_balance;
  std::vector<double> y_balance;

  Population() = default;
  explicit Population(std::size_t n) : alpha(n, 1.0), d_balance(n, 0.0), y_balance(n, 0.0) {}

  std::size_t size() const { return alpha.size(); }
  bool empty() const { return alpha.empty(); }

  AgentState agent(std::size_t i) const { return {alpha[i], d_balance[i], y_balance[i]}; }

  void set(std::size_t i, const AgentState& a) {
    alpha[i] = a.alpha;
    d_balance[i] = a.d_balance;
    y_balance[i] = a.y_balance;
  }

  void push_back(const AgentState& a) {
    alpha.push_back(a.alpha);
    d_balance.push_back(a.d_balance);
    y_balance.push_back(a.y_balance);
  }

  bool operator==(const Population&) const = default;
};

}  // namespace ubisim
