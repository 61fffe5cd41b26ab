#pragma once

#include <cmath>
#include <stdexcept>

namespace ubisim {

/// Concave value of consumption and savings: u(x) = sqrt(x), x >= 0.
inline double concave_value(double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("concave_value: argument must be non-negative");
  }
  return std::sqrt(x);
}

}  // namespace ubisim
