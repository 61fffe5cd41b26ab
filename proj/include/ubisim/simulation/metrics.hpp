#pragma once

#include <cstdint>

namespace ubisim {

/// Population shares of one period. The counts partition the population
/// exactly; the fractions are the counts over the population size.
struct PeriodMetrics {
  std::int64_t essential_count = 0;
  std::int64_t nonessential_count = 0;
  std::int64_t nonwork_count = 0;
  std::int64_t unmet_count = 0;
  double rho_E = 0.0;
  double share_N = 0.0;
  double share_0 = 0.0;
  double unmet_fraction = 0.0;

  bool operator==(const PeriodMetrics&) const = default;
};

}  // namespace ubisim
