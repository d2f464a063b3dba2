#include "pgl/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "pgl/discounting.hpp"
#include "pgl/errors.hpp"
#include "pgl/repeated_game.hpp"
#include "pgl/serialize.hpp"

namespace pgl {

namespace {

using nlohmann::json;

[[noreturn]] void bad_key(const std::string& key, const char* expected) {
  throw ValidationError("config: key \"" + key + "\" must be " + expected);
}

double as_number(const json& value, const std::string& key) {
  if (!value.is_number()) bad_key(key, "a number");
  return value.get<double>();
}

int as_int(const json& value, const std::string& key) {
  if (!value.is_number_integer()) bad_key(key, "an integer");
  return value.get<int>();
}

bool as_bool(const json& value, const std::string& key) {
  if (!value.is_boolean()) bad_key(key, "a boolean");
  return value.get<bool>();
}

std::string as_string(const json& value, const std::string& key) {
  if (!value.is_string()) bad_key(key, "a string");
  return value.get<std::string>();
}

std::vector<double> as_number_array(const json& value, const std::string& key) {
  if (!value.is_array()) bad_key(key, "an array of numbers");
  std::vector<double> out;
  out.reserve(value.size());
  for (const json& item : value) {
    if (!item.is_number()) bad_key(key, "an array of numbers");
    out.push_back(item.get<double>());
  }
  return out;
}

ShockSpec parse_shock(const json& value) {
  if (!value.is_object()) bad_key("shock", "an object");
  std::string kind;
  double lo = 0.0, hi = 0.0, mean = 0.0, scale = 0.0;
  std::uint64_t seed = 0;
  for (const auto& [key, item] : value.items()) {
    if (key == "kind") {
      kind = as_string(item, "shock.kind");
    } else if (key == "lo") {
      lo = as_number(item, "shock.lo");
    } else if (key == "hi") {
      hi = as_number(item, "shock.hi");
    } else if (key == "mean") {
      mean = as_number(item, "shock.mean");
    } else if (key == "scale") {
      scale = as_number(item, "shock.scale");
    } else if (key == "seed") {
      if (!item.is_number_unsigned()) bad_key("shock.seed", "a non-negative integer");
      seed = item.get<std::uint64_t>();
    } else {
      throw ValidationError("config: unknown key \"shock." + key + "\"");
    }
  }
  if (kind == "uniform") return ShockSpec::uniform(lo, hi, seed);
  if (kind == "logisticClippedPositive") {
    return ShockSpec::logistic_clipped_positive(mean, scale, seed);
  }
  if (kind == "none" || kind.empty()) return ShockSpec::none();
  throw ValidationError("config: shock.kind must be one of none, uniform, "
                        "logisticClippedPositive");
}

}  // namespace

double RunConfig::effective_sanction() const {
  if (sanction.has_value()) return *sanction;
  return committed ? std::numeric_limits<double>::infinity() : 0.0;
}

std::uint64_t RunConfig::effective_seed() const {
  if (seed.has_value()) return *seed;
  if (shock.has_value() && shock->seed != 0) return shock->seed;
  return 42;
}

void RunConfig::validate() const {
  GameParams game{a, b_bar, punishment_periods, shock};
  (void)game;
  PolicymakerProfile profile{beta, beta_hat, delta, committed, effective_sanction()};
  (void)profile;
  DiscountSpec baseline = DiscountSpec::exponential_from_factor(effective_q());
  (void)baseline;
  if (format.has_value() && *format != "json" && *format != "csv" &&
      *format != "text") {
    throw ValidationError("config: format must be one of json, csv, text");
  }
  if (horizon < 1) {
    throw ValidationError("config: horizon must be >= 1");
  }
  if (trials < 1) {
    throw ValidationError("config: trials must be >= 1");
  }
  if (!std::isfinite(target) || target < 0.0) {
    throw ValidationError("config: target must be finite and >= 0");
  }
}

RunConfig parse_config_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ValidationError("config: top level must be a JSON object");
  }

  RunConfig config;
  for (const auto& [key, value] : doc.items()) {
    if (value.is_null()) continue;  // null leaves the default in place
    if (key == "a") {
      config.a = as_number(value, key);
    } else if (key == "bBar") {
      config.b_bar = as_number(value, key);
    } else if (key == "beta") {
      config.beta = as_number(value, key);
    } else if (key == "betaHat") {
      config.beta_hat = as_number(value, key);
    } else if (key == "delta") {
      config.delta = as_number(value, key);
    } else if (key == "q") {
      config.q = as_number(value, key);
    } else if (key == "target") {
      config.target = as_number(value, key);
    } else if (key == "horizon") {
      config.horizon = as_int(value, key);
    } else if (key == "punishmentPeriods") {
      config.punishment_periods = as_int(value, key);
    } else if (key == "committed") {
      config.committed = as_bool(value, key);
    } else if (key == "sanction") {
      if (value.is_string() && value.get<std::string>() == "inf") {
        config.sanction = std::numeric_limits<double>::infinity();
      } else {
        config.sanction = as_number(value, key);
      }
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) bad_key(key, "a non-negative integer");
      config.seed = value.get<std::uint64_t>();
    } else if (key == "format") {
      config.format = as_string(value, key);
    } else if (key == "output") {
      config.output = as_string(value, key);
    } else if (key == "shock") {
      ShockSpec shock = parse_shock(value);
      if (shock.kind != ShockKind::None) config.shock = shock;
    } else if (key == "betaGrid") {
      config.beta_grid = as_number_array(value, key);
    } else if (key == "deltaGrid") {
      config.delta_grid = as_number_array(value, key);
    } else if (key == "qGrid") {
      config.q_grid = as_number_array(value, key);
    } else if (key == "trials") {
      config.trials = as_int(value, key);
    } else {
      throw ValidationError("config: unknown key \"" + key + "\"");
    }
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open config file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("failed reading config file: " + path);
  }
  return parse_config_json(buffer.str());
}

std::string to_json(const RunConfig& config) {
  std::ostringstream out;
  out << "{";
  out << "\"a\":" << format_g12(config.a);
  out << ",\"bBar\":" << format_g12(config.b_bar);
  out << ",\"beta\":" << format_g12(config.beta);
  out << ",\"betaHat\":" << format_g12(config.beta_hat);
  out << ",\"delta\":" << format_g12(config.delta);
  out << ",\"q\":" << format_g12(config.effective_q());
  out << ",\"target\":" << format_g12(config.target);
  out << ",\"horizon\":" << config.horizon;
  out << ",\"punishmentPeriods\":" << config.punishment_periods;
  out << ",\"committed\":" << (config.committed ? "true" : "false");
  if (!config.sanction.has_value() && !config.committed) {
    out << ",\"sanction\":null";
  } else if (std::isinf(config.effective_sanction())) {
    out << ",\"sanction\":\"inf\"";
  } else {
    out << ",\"sanction\":" << format_g12(config.effective_sanction());
  }
  out << ",\"seed\":" << config.effective_seed();
  out << ",\"format\":\"" << config.effective_format("json") << "\"";
  out << ",\"trials\":" << config.trials;
  if (config.shock.has_value()) {
    const ShockSpec& shock = *config.shock;
    out << ",\"shock\":{\"kind\":\"" << to_string(shock.kind) << "\"";
    if (shock.kind == ShockKind::Uniform) {
      out << ",\"lo\":" << format_g12(shock.lo) << ",\"hi\":" << format_g12(shock.hi);
    } else if (shock.kind == ShockKind::LogisticClippedPositive) {
      out << ",\"mean\":" << format_g12(shock.mean)
          << ",\"scale\":" << format_g12(shock.scale);
    }
    out << ",\"seed\":" << shock.seed << "}";
  }
  if (!config.beta_grid.empty() || !config.delta_grid.empty()) {
    auto emit_grid = [&out](const char* name, const std::vector<double>& grid) {
      out << ",\"" << name << "\":[";
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i > 0) out << ",";
        out << format_g12(grid[i]);
      }
      out << "]";
    };
    emit_grid("betaGrid", config.beta_grid);
    emit_grid("deltaGrid", config.delta_grid);
    if (!config.q_grid.empty()) emit_grid("qGrid", config.q_grid);
  }
  out << "}";
  return out.str();
}

}  // namespace pgl
