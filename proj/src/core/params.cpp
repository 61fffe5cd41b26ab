#include "ubisim/core/params.hpp"

#include <cmath>

namespace ubisim {
namespace {

std::string join(const std::vector<ParamViolation>& v) {
  std::string out = "invalid parameters:";
  for (const auto& p : v) {
    out += " ";
    out += p.key;
    out += " (";
    out += p.constraint;
    out += ");";
  }
  return out;
}

}  // namespace

InvalidParams::InvalidParams(std::vector<ParamViolation> violations)
    : std::invalid_argument(join(violations)), violations_(std::move(violations)) {}

std::vector<ParamViolation> check_params(const ModelParams& p) {
  std::vector<ParamViolation> v;
  auto require = [&](bool ok, const char* key, const char* constraint) {
    if (!ok) v.push_back({key, constraint});
  };
  auto finite_nonneg = [](double x) { return std::isfinite(x) && x >= 0.0; };

  require(finite_nonneg(p.ubi_amount), "ubi_amount", "must be finite and >= 0");
  require(p.acceptance_ratio >= 0.0 && p.acceptance_ratio <= 1.0, "acceptance_ratio",
          "must lie in [0, 1]");
  require(p.decay_rate >= 0.0 && p.decay_rate <= 1.0, "decay_rate", "must lie in [0, 1]");
  require(finite_nonneg(p.savings_weight), "savings_weight", "must be finite and >= 0");
  require(finite_nonneg(p.unmet_penalty), "unmet_penalty", "must be finite and >= 0");
  require(finite_nonneg(p.wage_essential), "wage_essential", "must be finite and >= 0");
  require(finite_nonneg(p.wage_nonessential), "wage_nonessential", "must be finite and >= 0");
  require(p.wage_essential > p.wage_nonessential, "wage_essential",
          "must exceed wage_nonessential");
  require(p.labor_disutility_nonwork == 0.0, "labor_disutility_nonwork", "must equal 0");
  require(std::isfinite(p.labor_disutility_nonessential) &&
              p.labor_disutility_nonessential > p.labor_disutility_nonwork,
          "labor_disutility_nonessential",
          "disutility ordering L_E > L_N > L_0 = 0 requires labor_disutility_nonessential > "
          "labor_disutility_nonwork");
  require(std::isfinite(p.labor_disutility_essential) &&
              p.labor_disutility_essential > p.labor_disutility_nonessential,
          "labor_disutility_essential",
          "disutility ordering L_E > L_N > L_0 = 0 requires labor_disutility_essential > "
          "labor_disutility_nonessential");
  require(std::isfinite(p.necessity_total) && p.necessity_total > 0.0, "necessity_total",
          "must be finite and > 0");
  require(std::isfinite(p.alpha_min) && p.alpha_min > 0.0, "alpha_min", "must be > 0");
  require(std::isfinite(p.alpha_max) && p.alpha_max >= p.alpha_min, "alpha_max",
          "must be >= alpha_min");
  require(p.population_size >= 1, "population_size", "must be >= 1");
  require(p.horizon >= 1, "horizon", "must be >= 1");
  require(p.burn_in >= 0 && p.burn_in < p.horizon, "burn_in", "must satisfy 0 <= burn_in < horizon");
  require(!p.essential_capacity || *p.essential_capacity >= 0, "essential_capacity",
          "must be >= 0 when set");
  return v;
}

void validate_params(const ModelParams& params) {
  auto v = check_params(params);
  if (!v.empty()) throw InvalidParams(std::move(v));
}

}  // namespace ubisim
