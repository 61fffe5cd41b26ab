#include "ubisim/io/config.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace ubisim::io {
namespace {

using nlohmann::json;

std::string describe(const std::string& origin, const std::vector<ParamViolation>& v) {
  std::string out = origin + ":";
  for (const auto& p : v) out += " " + p.key + ": " + p.constraint + ";";
  return out;
}

struct KeyError {
  ParamViolation violation;
};

double as_number(const json& j, const std::string& key) {
  if (!j.is_number()) throw KeyError{{key, "expected a number"}};
  return j.get<double>();
}

std::int64_t as_integer(const json& j, const std::string& key) {
  if (!j.is_number_integer()) throw KeyError{{key, "expected an integer"}};
  return j.get<std::int64_t>();
}

std::vector<double> as_number_list(const json& j, const std::string& key) {
  if (!j.is_array()) throw KeyError{{key, "expected an array of numbers"}};
  std::vector<double> out;
  for (const auto& e : j) out.push_back(as_number(e, key));
  return out;
}

struct KeySpec {
  std::string name;
  std::function<void(Config&, const json&)> read;
  std::function<json(const Config&)> write;
};

template <typename Field>
KeySpec model_number(std::string name, Field ModelParams::*field) {
  return {name,
          [name, field](Config& c, const json& j) { c.model.*field = as_number(j, name); },
          [field](const Config& c) { return json(c.model.*field); }};
}

template <typename Field>
KeySpec model_integer(std::string name, Field ModelParams::*field) {
  return {name,
          [name, field](Config& c, const json& j) { c.model.*field = as_integer(j, name); },
          [field](const Config& c) { return json(c.model.*field); }};
}

const std::vector<KeySpec>& key_specs() {
  static const std::vector<KeySpec> specs = [] {
    std::vector<KeySpec> s;
    s.push_back(model_number("ubi_amount", &ModelParams::ubi_amount));
    s.push_back(model_number("acceptance_ratio", &ModelParams::acceptance_ratio));
    s.push_back(model_number("decay_rate", &ModelParams::decay_rate));
    s.push_back(model_number("savings_weight", &ModelParams::savings_weight));
    s.push_back(model_number("unmet_penalty", &ModelParams::unmet_penalty));
    s.push_back(model_number("wage_essential", &ModelParams::wage_essential));
    s.push_back(model_number("wage_nonessential", &ModelParams::wage_nonessential));
    s.push_back(model_number("labor_disutility_essential", &ModelParams::labor_disutility_essential));
    s.push_back(model_number("labor_disutility_nonessential",
                             &ModelParams::labor_disutility_nonessential));
    s.push_back(model_number("labor_disutility_nonwork", &ModelParams::labor_disutility_nonwork));
    s.push_back(model_number("necessity_total", &ModelParams::necessity_total));
    s.push_back(model_number("alpha_min", &ModelParams::alpha_min));
    s.push_back(model_number("alpha_max", &ModelParams::alpha_max));
    s.push_back(model_integer("population_size", &ModelParams::population_size));
    s.push_back(model_integer("horizon", &ModelParams::horizon));
    s.push_back(model_integer("burn_in", &ModelParams::burn_in));
    s.push_back({"essential_capacity",
                 [](Config& c, const json& j) {
                   if (j.is_null()) {
                     c.model.essential_capacity.reset();
                   } else {
                     c.model.essential_capacity = as_integer(j, "essential_capacity");
                   }
                 },
                 [](const Config& c) {
                   return c.model.essential_capacity ? json(*c.model.essential_capacity) : json(nullptr);
                 }});
    s.push_back({"b_d_values",
                 [](Config& c, const json& j) { c.sweep.b_d_values = as_number_list(j, "b_d_values"); },
                 [](const Config& c) { return json(c.sweep.b_d_values); }});
    s.push_back({"phi_values",
                 [](Config& c, const json& j) { c.sweep.phi_values = as_number_list(j, "phi_values"); },
                 [](const Config& c) { return json(c.sweep.phi_values); }});
    s.push_back({"replicates",
                 [](Config& c, const json& j) { c.sweep.replicates = as_integer(j, "replicates"); },
                 [](const Config& c) { return json(c.sweep.replicates); }});
    s.push_back({"base_seed",
                 [](Config& c, const json& j) {
                   if (!j.is_number_unsigned()) throw KeyError{{"base_seed", "expected a non-negative integer"}};
                   c.sweep.base_seed = j.get<std::uint64_t>();
                 },
                 [](const Config& c) { return json(c.sweep.base_seed); }});
    s.push_back({"decay_values",
                 [](Config& c, const json& j) { c.decay_values = as_number_list(j, "decay_values"); },
                 [](const Config& c) { return json(c.decay_values); }});
    s.push_back({"boundary_threshold",
                 [](Config& c, const json& j) { c.boundary_threshold = as_number(j, "boundary_threshold"); },
                 [](const Config& c) { return json(c.boundary_threshold); }});
    return s;
  }();
  return specs;
}

std::vector<ParamViolation> validate(const Config& c) {
  std::vector<ParamViolation> v = check_params(c.model);
  for (auto& p : check_sweep_spec(c.sweep)) {
    // Base-parameter problems are already reported by check_params.
    if (p.key == "b_d_values" || p.key == "phi_values" || p.key == "replicates") {
      v.push_back(std::move(p));
    }
  }
  for (double rate : c.decay_values) {
    if (!(rate >= 0.0 && rate <= 1.0)) {
      v.push_back({"decay_values", "every decay rate must lie in [0, 1]"});
      break;
    }
  }
  if (!(c.boundary_threshold > 0.0 && c.boundary_threshold < 1.0)) {
    v.push_back({"boundary_threshold", "must lie in (0, 1)"});
  }
  return v;
}

}  // namespace

ConfigError::ConfigError(std::string origin, std::vector<ParamViolation> violations)
    : std::runtime_error(describe(origin, violations)), violations_(std::move(violations)) {}

Config default_config() {
  Config c;
  c.sweep = default_sweep_spec(c.model);
  return c;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& s : key_specs()) k.push_back(s.name);
    return k;
  }();
  return keys;
}

Config parse_config(std::string_view text, std::string_view origin) {
  const std::string name(origin);
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return default_config();

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(name, {{"<file>", std::string("parse error: ") + e.what()}});
  }
  if (!doc.is_object()) throw ConfigError(name, {{"<file>", "top level must be a JSON object"}});

  Config c;
  std::vector<ParamViolation> problems;
  for (const auto& [key, value] : doc.items()) {
    const auto& specs = key_specs();
    auto it = std::find_if(specs.begin(), specs.end(), [&](const KeySpec& s) { return s.name == key; });
    if (it == specs.end()) {
      problems.push_back({key, "unknown key"});
      continue;
    }
    try {
      it->read(c, value);
    } catch (const KeyError& e) {
      problems.push_back(e.violation);
    }
  }
  if (!problems.empty()) throw ConfigError(name, std::move(problems));

  // The default grid is derived from necessity_total, so it is built after
  // the model keys are read.
  SweepSpec defaults = default_sweep_spec(c.model);
  if (!doc.contains("b_d_values")) c.sweep.b_d_values = defaults.b_d_values;
  if (!doc.contains("phi_values")) c.sweep.phi_values = defaults.phi_values;
  c.sweep.base_params = c.model;

  auto violations = validate(c);
  if (!violations.empty()) throw ConfigError(name, std::move(violations));
  return c;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string(), {{"<file>", "cannot open for reading"}});
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

std::string config_to_json(const Config& config, int indent) {
  json out = json::object();
  for (const auto& s : key_specs()) out[s.name] = s.write(config);
  return out.dump(indent);
}

}  // namespace ubisim::io
