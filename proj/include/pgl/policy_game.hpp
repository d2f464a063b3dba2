#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "pgl/discounting.hpp"
#include "pgl/errors.hpp"
#include "pgl/rng.hpp"

namespace pgl {

enum class ShockKind { None, Uniform, LogisticClippedPositive };

std::string to_string(ShockKind kind);

/// Distribution for the per-period benefit slope b_t. The mean must equal
/// the game's b_bar; support is strictly positive.
struct ShockSpec {
  ShockKind kind = ShockKind::None;
  double lo = 0.0;           // Uniform
  double hi = 0.0;           // Uniform
  double mean = 0.0;         // LogisticClippedPositive
  double scale = 0.0;        // LogisticClippedPositive
  std::uint64_t seed = 0;    // default stream seed; ops with a seed parameter override

  static ShockSpec none();
  static ShockSpec uniform(double lo, double hi, std::uint64_t seed);
  static ShockSpec logistic_clipped_positive(double mean, double scale, std::uint64_t seed);

  /// Analytic mean of the declared distribution.
  double analytic_mean() const;
  /// One b_t draw. Returns fallback_mean for ShockKind::None.
  double draw(Rng& rng, double fallback_mean) const;
};

/// Primitives of the inflation game: pi-cost weight a, mean benefit slope
/// b_bar, punishment length, optional b_t shock.
struct GameParams {
  double a = 1.0;
  double b_bar = 1.0;
  int punishment_periods = 1;
  std::optional<ShockSpec> shock;

  GameParams() = default;
  GameParams(double a, double b_bar, int punishment_periods = 1,
             std::optional<ShockSpec> shock = std::nullopt);

  void validate() const;

  /// b_bar / a, the rate under period-by-period re-optimization.
  double pi_discretion() const { return b_bar / a; }
};

enum class ReportMode { Baseline, Behavioral };

std::string to_string(ReportMode mode);

/// Equilibrium summary for one parameterization: the discretionary rate, the
/// ideal rule, the best enforceable rule, and the closed enforceable interval
/// [pi_best_enforceable, pi_discretion].
struct EquilibriumReport {
  ReportMode mode = ReportMode::Baseline;
  double a = 0.0;
  double b_bar = 0.0;
  double discount_factor = 0.0;  // q in Baseline mode, beta*delta in Behavioral mode
  double pi_discretion = 0.0;
  double pi_ideal = 0.0;
  double pi_best_enforceable = 0.0;
  double range_lo = 0.0;
  double range_hi = 0.0;
  double range_width = 0.0;
};

/// Per-period objective (a/2)pi^2 - b_t (pi - pi_e).
double loss(double pi, double pi_e, const GameParams& params, double b_t);

/// Inflation cost component (a/2)pi^2.
double inflation_cost(double pi, const GameParams& params);

/// Surprise benefit component b_t (pi - pi_e).
double surprise_benefit(double pi, double pi_e, double b_t);

/// Loss-minimizing surprise inflation, b_bar/a. Independent of expectations.
double best_cheat(const GameParams& params);

/// One-period gain from cheating when agents expect `target`:
/// (a*target - b_bar)^2 / (2a). Zero exactly at target = b_bar/a.
double temptation(double target, const GameParams& params);

/// Undiscounted per-punishment-period loss differential
/// b_bar^2/(2a) - (a/2) target^2: loss at discretion minus loss under the rule.
double enforcement_differential(double target, const GameParams& params);

/// Discounted punishment-period loss differential. With punishment length P,
/// sums discount_factor^j * [b_bar^2/(2a) - (a/2) target^2] over j = 1..P;
/// for P = 1 this is discount_factor times the differential.
double enforcement(double target, const GameParams& params, double discount_factor);

/// Same differential weighted by the discount function: sum of D(j) over the
/// punishment periods j = 1..P.
double enforcement(double target, const GameParams& params, const DiscountSpec& spec);

/// Monte Carlo mean with standard error, for games with a ShockSpec.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t draws = 0;
};

/// Mean one-period cheating gain over b_t draws. The deviation itself is the
/// ex-ante best cheat b_bar/a; realized b_t enters only the loss evaluation,
/// so the estimate is unbiased for the deterministic temptation.
McEstimate temptation_mc(double target, const GameParams& params, std::size_t draws,
                         std::uint64_t seed);

McEstimate enforcement_mc(double target, const GameParams& params, double discount_factor,
                          std::size_t draws, std::uint64_t seed);

/// Fixed point of best-response iteration on expectations, computed both
/// analytically (b_bar/a) and by damped iteration from pi_e = 0; throws
/// NumericalError if the two disagree beyond 1e-12.
double discretionary_equilibrium(const GameParams& params);

struct EnforceableRule {
  double closed_form = 0.0;
  double bisection = 0.0;
  double value() const { return closed_form; }
};

/// Smallest target pi >= 0 with temptation(pi) <= enforcement(pi, df),
/// computed by the closed form (b_bar/a)(1-S)/(1+S) with S the discounted
/// punishment weight, and independently by bisection on
/// g(pi) = temptation - enforcement. Throws NumericalError if the two
/// routes disagree beyond 1e-10 relative.
EnforceableRule best_enforceable_rule_detail(const GameParams& params, double discount_factor);

/// The agreed value from best_enforceable_rule_detail.
double best_enforceable_rule(const GameParams& params, double discount_factor);

/// Full report for an Exponential (Baseline, df = q) or QuasiHyperbolic
/// (Behavioral, df = beta*delta) spec. GeneralizedHyperbolic has no single
/// per-period factor and is rejected.
EquilibriumReport equilibrium_report(const GameParams& params, const DiscountSpec& spec);

}  // namespace pgl
