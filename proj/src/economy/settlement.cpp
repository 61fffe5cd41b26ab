#include "ubisim/economy/settlement.hpp"

#include <cmath>

namespace ubisim {

SettlementResult settle_necessities(double d_balance, double y_balance,
                                    const ModelParams& params) {
  const double n = params.necessity_total;
  SettlementResult r;
  r.d_spent = lesser(d_balance, d_acceptable_portion(params));
  // Y is accepted everywhere, so one Y payment covers both the D-portion
  // shortfall and the Y-only portion.
  const double y_due = n - r.d_spent;
  r.y_spent = lesser(y_balance, y_due);
  r.unmet = y_balance < y_due;
  r.post_d = d_balance - r.d_spent;
  r.post_y = y_balance - r.y_spent;
  r.satisfied_necessities =
      r.unmet ? lesser(r.d_spent + r.y_spent, std::nextafter(n, 0.0)) : n;
  return r;
}

}  // namespace ubisim
