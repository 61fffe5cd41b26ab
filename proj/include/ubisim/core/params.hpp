#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ubisim/core/action.hpp"

namespace ubisim {

/// Exogenous policy and behavioral parameters of one simulation.
///
/// Money is measured in units where one unit of either currency buys one
/// unit of necessities. The defaults form the desk-scale configuration used
/// by the CLI when a config file leaves a key unset.
struct ModelParams {
  double ubi_amount = 100.0;        // B_D, currency D per period
  double acceptance_ratio = 0.5;    // phi, share of necessities payable in D
  double decay_rate = 0.1;          // lambda, per-period loss of carried D
  double savings_weight = 0.2;      // beta
  double unmet_penalty = 10.0;      // pi
  double wage_essential = 62.0;     // currency Y per period
  double wage_nonessential = 30.0;  // currency Y per period
  double labor_disutility_essential = 2.0;
  double labor_disutility_nonessential = 1.0;
  double labor_disutility_nonwork = 0.0;
  double necessity_total = 100.0;
  double alpha_min = 0.5;
  double alpha_max = 1.5;
  std::int64_t population_size = 1000;
  std::int64_t horizon = 240;
  std::int64_t burn_in = 0;
  /// Essential-labor slots per period; unset means unlimited.
  std::optional<std::int64_t> essential_capacity;

  double wage(Action a) const {
    switch (a) {
      case Action::Essential:
        return wage_essential;
      case Action::NonEssential:
        return wage_nonessential;
      case Action::NonWork:
        break;
    }
    return 0.0;
  }

  double disutility(Action a) const {
    switch (a) {
      case Action::Essential:
        return labor_disutility_essential;
      case Action::NonEssential:
        return labor_disutility_nonessential;
      case Action::NonWork:
        break;
    }
    return labor_disutility_nonwork;
  }

  bool operator==(const ModelParams&) const = default;
};

/// One violated constraint, keyed by the parameter name used in config files.
struct ParamViolation {
  std::string key;
  std::string constraint;
};

class InvalidParams : public std::invalid_argument {
 public:
  explicit InvalidParams(std::vector<ParamViolation> violations);

  const std::vector<ParamViolation>& violations() const { return violations_; }

 private:
  std::vector<ParamViolation> violations_;
};

/// Lists every violated constraint; empty when the parameters are valid.
std::vector<ParamViolation> check_params(const ModelParams& params);

/// Throws InvalidParams naming all violations.
void validate_params(const ModelParams& params);

}  // namespace ubisim
