#pragma once

#include "ubisim/core/params.hpp"

namespace ubisim {

/// Result of paying one period's necessities out of a D and a Y balance.
struct SettlementResult {
  double satisfied_necessities = 0.0;
  double d_spent = 0.0;
  double y_spent = 0.0;
  bool unmet = false;
  double post_d = 0.0;
  double post_y = 0.0;

  bool operator==(const SettlementResult&) const = default;
};

/// min() with the operand order of the x86 vector min instructions: returns
/// `b` unless `a < b`. The scalar and SIMD paths share this so they agree on
/// every bit.
constexpr double lesser(double a, double b) { return a < b ? a : b; }
constexpr double greater(double a, double b) { return a > b ? a : b; }

/// Settles necessities at unit prices.
///
/// The D-acceptable portion phi * n is paid with D first, up to the D
/// balance. Everything still owed (any D-portion shortfall plus the Y-only
/// portion) is paid with Y, up to the Y balance. This order maximizes the
/// necessities covered and, among such payments, keeps the most Y.
SettlementResult settle_necessities(double d_balance, double y_balance,
                                    const ModelParams& params);

/// Necessity units payable in D under the acceptance ratio.
inline double d_acceptable_portion(const ModelParams& params) {
  return params.acceptance_ratio * params.necessity_total;
}

}  // namespace ubisim
