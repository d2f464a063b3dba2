#include "pgl/policy_game.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pgl {

std::string to_string(ShockKind kind) {
  switch (kind) {
    case ShockKind::None: return "none";
    case ShockKind::Uniform: return "uniform";
    case ShockKind::LogisticClippedPositive: return "logisticClippedPositive";
  }
  return "unknown";
}

std::string to_string(ReportMode mode) {
  return mode == ReportMode::Baseline ? "baseline" : "behavioral";
}

ShockSpec ShockSpec::none() { return ShockSpec{}; }

ShockSpec ShockSpec::uniform(double lo, double hi, std::uint64_t seed) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw ValidationError("ShockSpec: lo and hi must be finite");
  }
  if (lo <= 0.0) {
    throw ValidationError("ShockSpec: lo must be > 0 (support strictly positive)");
  }
  if (hi <= lo) {
    throw ValidationError("ShockSpec: hi must be > lo");
  }
  ShockSpec s;
  s.kind = ShockKind::Uniform;
  s.lo = lo;
  s.hi = hi;
  s.seed = seed;
  return s;
}

ShockSpec ShockSpec::logistic_clipped_positive(double mean, double scale, std::uint64_t seed) {
  if (!std::isfinite(mean) || !std::isfinite(scale)) {
    throw ValidationError("ShockSpec: mean and scale must be finite");
  }
  if (mean <= 0.0) {
    throw ValidationError("ShockSpec: mean must be > 0");
  }
  if (scale <= 0.0) {
    throw ValidationError("ShockSpec: scale must be > 0");
  }
  ShockSpec s;
  s.kind = ShockKind::LogisticClippedPositive;
  s.mean = mean;
  s.scale = scale;
  s.seed = seed;
  return s;
}

double ShockSpec::analytic_mean() const {
  switch (kind) {
    case ShockKind::None: return 0.0;
    case ShockKind::Uniform: return 0.5 * (lo + hi);
    case ShockKind::LogisticClippedPositive: return mean;
  }
  return 0.0;
}

double ShockSpec::draw(Rng& rng, double fallback_mean) const {
  switch (kind) {
    case ShockKind::None:
      return fallback_mean;
    case ShockKind::Uniform:
      return rng.uniform(lo, hi);
    case ShockKind::LogisticClippedPositive:
      // Clip to keep the support strictly positive.
      return std::max(rng.logistic(mean, scale), 1e-12);
  }
  return fallback_mean;
}

GameParams::GameParams(double a_, double b_bar_, int punishment_periods_,
                       std::optional<ShockSpec> shock_)
    : a(a_), b_bar(b_bar_), punishment_periods(punishment_periods_), shock(std::move(shock_)) {
  validate();
}

void GameParams::validate() const {
  if (!std::isfinite(a) || a <= 0.0) {
    throw ValidationError("GameParams: a must be finite and > 0");
  }
  if (!std::isfinite(b_bar) || b_bar <= 0.0) {
    throw ValidationError("GameParams: b_bar must be finite and > 0");
  }
  if (punishment_periods < 1) {
    throw ValidationError("GameParams: punishment_periods must be >= 1");
  }
  if (shock && shock->kind != ShockKind::None) {
    const double mean = shock->analytic_mean();
    if (std::abs(mean - b_bar) > 1e-9 * std::max(1.0, std::abs(b_bar))) {
      std::ostringstream os;
      os << "GameParams: shock mean " << mean << " must equal b_bar " << b_bar;
      throw ValidationError(os.str());
    }
  }
}

namespace {
void require_finite_inputs(double pi, double pi_e, double b_t) {
  if (!std::isfinite(pi) || !std::isfinite(pi_e) || !std::isfinite(b_t)) {
    throw ValidationError("loss: pi, pi_e and b_t must be finite");
  }
}
}  // namespace

double inflation_cost(double pi, const GameParams& params) {
  return 0.5 * params.a * pi * pi;
}

double surprise_benefit(double pi, double pi_e, double b_t) {
  return b_t * (pi - pi_e);
}

double loss(double pi, double pi_e, const GameParams& params, double b_t) {
  params.validate();
  require_finite_inputs(pi, pi_e, b_t);
  return inflation_cost(pi, params) - surprise_benefit(pi, pi_e, b_t);
}

double best_cheat(const GameParams& params) {
  params.validate();
  return params.b_bar / params.a;
}

double temptation(double target, const GameParams& params) {
  params.validate();
  if (!std::isfinite(target) || target < 0.0) {
    throw ValidationError("temptation: target must be >= 0");
  }
  const double gap = params.a * target - params.b_bar;
  return gap * gap / (2.0 * params.a);
}

double enforcement_differential(double target, const GameParams& params) {
  return params.b_bar * params.b_bar / (2.0 * params.a) - 0.5 * params.a * target * target;
}

namespace {

// Sum of df^j for j = 1..P.
double geometric_weight(double df, int periods) {
  double weight = 0.0;
  double term = 1.0;
  for (int j = 1; j <= periods; ++j) {
    term *= df;
    weight += term;
  }
  return weight;
}

// Sum of D(j) for j = 1..P under the given discount function.
double spec_weight(const DiscountSpec& spec, int periods) {
  double weight = 0.0;
  for (int j = 1; j <= periods; ++j) {
    weight += eval_discount(spec, j);
  }
  return weight;
}

void require_target(double target) {
  if (!std::isfinite(target) || target < 0.0) {
    throw ValidationError("enforcement: target must be >= 0");
  }
}

}  // namespace

double enforcement(double target, const GameParams& params, double discount_factor) {
  params.validate();
  require_target(target);
  if (!std::isfinite(discount_factor) || discount_factor <= 0.0 || discount_factor > 1.0) {
    throw ValidationError("enforcement: discount_factor must be in (0, 1]");
  }
  return geometric_weight(discount_factor, params.punishment_periods) *
         enforcement_differential(target, params);
}

double enforcement(double target, const GameParams& params, const DiscountSpec& spec) {
  params.validate();
  require_target(target);
  if (spec.kind() == DiscountKind::GeneralizedHyperbolic) {
    // No per-period enforcement factor exists for this curve.
    throw ValidationError("enforcement: generalized hyperbolic discounting is not supported");
  }
  return spec_weight(spec, params.punishment_periods) * enforcement_differential(target, params);
}

namespace {

McEstimate mc_over_draws(const GameParams& params, std::size_t draws, std::uint64_t seed,
                         double (*per_draw)(double b_t, double target, const GameParams&),
                         double target) {
  if (draws < 1) {
    throw ValidationError("Monte Carlo estimate requires draws >= 1");
  }
  Rng rng(seed);
  const ShockSpec shock = params.shock.value_or(ShockSpec::none());
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < draws; ++i) {
    const double b_t = shock.draw(rng, params.b_bar);
    const double v = per_draw(b_t, target, params);
    sum += v;
    sum_sq += v * v;
  }
  McEstimate est;
  est.draws = draws;
  est.mean = sum / static_cast<double>(draws);
  if (draws > 1) {
    const double n = static_cast<double>(draws);
    const double var = std::max(0.0, (sum_sq - n * est.mean * est.mean) / (n - 1.0));
    est.std_error = std::sqrt(var / n);
  }
  return est;
}

double cheat_gain_draw(double b_t, double target, const GameParams& params) {
  // The deviation is fixed at the ex-ante best cheat b_bar/a; the realized
  // b_t enters only through the loss evaluation.
  const double pi_cheat = params.b_bar / params.a;
  return loss(target, target, params, b_t) - loss(pi_cheat, target, params, b_t);
}

double differential_draw(double b_t, double target, const GameParams& params) {
  const double pi_d = params.b_bar / params.a;
  return loss(pi_d, pi_d, params, b_t) - loss(target, target, params, b_t);
}

}  // namespace

McEstimate temptation_mc(double target, const GameParams& params, std::size_t draws,
                         std::uint64_t seed) {
  params.validate();
  if (!std::isfinite(target) || target < 0.0) {
    throw ValidationError("temptation_mc: target must be >= 0");
  }
  return mc_over_draws(params, draws, seed, &cheat_gain_draw, target);
}

McEstimate enforcement_mc(double target, const GameParams& params, double discount_factor,
                          std::size_t draws, std::uint64_t seed) {
  params.validate();
  require_target(target);
  if (!std::isfinite(discount_factor) || discount_factor <= 0.0 || discount_factor > 1.0) {
    throw ValidationError("enforcement_mc: discount_factor must be in (0, 1]");
  }
  McEstimate est = mc_over_draws(params, draws, seed, &differential_draw, target);
  const double weight = geometric_weight(discount_factor, params.punishment_periods);
  est.mean *= weight;
  est.std_error *= weight;
  return est;
}

double discretionary_equilibrium(const GameParams& params) {
  params.validate();
  const double analytic = params.b_bar / params.a;

  // Damped iteration on expectations. The best response is independent of
  // pi_e, so the map is constant and the loop contracts geometrically.
  const double damping = 0.5;
  const int max_steps = 10000;
  double pi_e = 0.0;
  bool converged = false;
  for (int step = 0; step < max_steps; ++step) {
    const double response = params.b_bar / params.a;
    const double delta = damping * (response - pi_e);
    pi_e += delta;
    if (std::abs(delta) < 1e-12) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NumericalError("discretionary_equilibrium: iteration did not converge");
  }
  if (std::abs(pi_e - analytic) > 1e-12 * std::max(1.0, std::abs(analytic))) {
    std::ostringstream os;
    os << "discretionary_equilibrium: iterate " << pi_e << " disagrees with analytic "
       << analytic;
    throw NumericalError(os.str());
  }
  // The iterate carries the stopping tolerance; report the agreed exact value.
  return analytic;
}

namespace {

// Bisection on g(pi) = temptation - enforcement over [0, pi_discretion],
// driven to floating-point resolution. g is positive at 0 (cheating pays at
// the ideal rule) and negative just inside the discretionary rate.
double bisect_enforceable(const GameParams& params, double discount_factor) {
  const auto g = [&](double pi) {
    return temptation(pi, params) - enforcement(pi, params, discount_factor);
  };

  double lo = 0.0;
  if (g(lo) <= 0.0) {
    return 0.0;  // ideal rule already enforceable
  }
  double hi = params.b_bar / params.a;
  // The endpoint value is an exact root in real arithmetic; a few ulps of
  // rounding can leave g(hi) on the wrong side.
  for (int i = 0; i < 8 && g(hi) > 0.0; ++i) {
    hi = std::nextafter(hi, 0.0);
  }
  if (g(hi) > 0.0) {
    std::ostringstream os;
    os << "best_enforceable_rule: no bracket on [0, " << hi << "], g(lo)=" << g(lo)
       << " g(hi)=" << g(hi);
    throw NumericalError(os.str());
  }

  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) {
      break;
    }
    if (g(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

EnforceableRule best_enforceable_rule_detail(const GameParams& params, double discount_factor) {
  params.validate();
  if (!std::isfinite(discount_factor) || discount_factor <= 0.0 || discount_factor >= 1.0) {
    throw ValidationError("best_enforceable_rule: discount_factor must be in (0, 1)");
  }

  const double weight = geometric_weight(discount_factor, params.punishment_periods);
  const double pi_d = params.b_bar / params.a;

  EnforceableRule rule;
  rule.closed_form = std::max(0.0, pi_d * (1.0 - weight) / (1.0 + weight));
  rule.bisection = bisect_enforceable(params, discount_factor);

  const double denom = std::max(std::abs(rule.closed_form), std::abs(rule.bisection));
  if (denom > 0.0 && std::abs(rule.closed_form - rule.bisection) > 1e-10 * denom) {
    std::ostringstream os;
    os << "best_enforceable_rule: closed form " << rule.closed_form
       << " disagrees with bisection " << rule.bisection;
    throw NumericalError(os.str());
  }
  return rule;
}

double best_enforceable_rule(const GameParams& params, double discount_factor) {
  return best_enforceable_rule_detail(params, discount_factor).value();
}

EquilibriumReport equilibrium_report(const GameParams& params, const DiscountSpec& spec) {
  params.validate();

  EquilibriumReport report;
  switch (spec.kind()) {
    case DiscountKind::Exponential:
      report.mode = ReportMode::Baseline;
      report.discount_factor = spec.factor();
      break;
    case DiscountKind::QuasiHyperbolic:
      report.mode = ReportMode::Behavioral;
      report.discount_factor = spec.beta() * spec.delta();
      break;
    case DiscountKind::GeneralizedHyperbolic:
      throw ValidationError(
          "equilibrium_report: generalized hyperbolic discounting has no per-period "
          "factor; use exponential or quasi-hyperbolic");
  }

  report.a = params.a;
  report.b_bar = params.b_bar;
  report.pi_discretion = discretionary_equilibrium(params);
  report.pi_ideal = 0.0;
  report.pi_best_enforceable = best_enforceable_rule(params, report.discount_factor);
  report.range_lo = report.pi_best_enforceable;
  report.range_hi = report.pi_discretion;
  report.range_width = report.range_hi - report.range_lo;
  return report;
}

}  // namespace pgl
