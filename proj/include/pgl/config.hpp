#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgl/policy_game.hpp"

namespace pgl {

/// Effective run settings shared by every subcommand. Config-file keys are
/// the camelCase forms of the CLI flags (bBar for --b-bar and so on), plus
/// sweep grids (betaGrid, deltaGrid, qGrid), verify trials, and an optional
/// shock object. Command-line flags override file values.
struct RunConfig {
  double a = 1.0;
  double b_bar = 1.0;
  double beta = 1.0;
  double beta_hat = 1.0;
  double delta = 0.9;
  std::optional<double> q;  // baseline per-period factor; defaults to delta
  double target = 0.0;
  int horizon = 50;
  int punishment_periods = 1;
  bool committed = false;
  std::optional<double> sanction;  // defaults to +infinity when committed
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;  // json | csv | text
  std::string output;                 // path; empty writes to stdout
  std::optional<ShockSpec> shock;

  std::vector<double> beta_grid;   // sweep only
  std::vector<double> delta_grid;  // sweep only
  std::vector<double> q_grid;      // sweep only
  int trials = 1000;               // verify only

  double effective_q() const { return q.has_value() ? *q : delta; }
  double effective_sanction() const;
  /// Explicit seed, else the shock's stream seed, else 42.
  std::uint64_t effective_seed() const;
  /// Explicit format, else the subcommand's natural default.
  std::string effective_format(const char* fallback) const {
    return format.has_value() ? *format : fallback;
  }

  /// Cross-field checks that do not depend on the subcommand.
  void validate() const;
};

/// Parses a JSON object with the camelCase keys above. Unknown keys and
/// wrongly typed values are rejected with a ValidationError naming the key.
RunConfig parse_config_json(const std::string& text);

/// Reads and parses path. Missing or unreadable file throws IoError.
RunConfig load_config(const std::string& path);

/// Effective-config echo embedded in JSON reports. Null for an unset
/// sanction; an infinite sanction serializes as the string "inf".
std::string to_json(const RunConfig& config);

}  // namespace pgl
