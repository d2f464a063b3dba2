#include "pgl/verify.hpp"

#include <algorithm>
#include <cmath>

#include "pgl/discounting.hpp"
#include "pgl/policy_game.hpp"
#include "pgl/repeated_game.hpp"
#include "pgl/rng.hpp"
#include "pgl/sweep.hpp"

namespace pgl {

bool VerifyReport::all_passed() const {
  for (const CheckResult& c : checks) {
    if (!c.ok()) return false;
  }
  return !checks.empty();
}

int VerifyReport::total_passed() const {
  int n = 0;
  for (const CheckResult& c : checks) n += c.passed;
  return n;
}

int VerifyReport::total_failed() const {
  int n = 0;
  for (const CheckResult& c : checks) n += c.failed;
  return n;
}

namespace {

void tally(CheckResult& check, bool ok) {
  if (ok) {
    ++check.passed;
  } else {
    ++check.failed;
  }
}

CheckResult check_closed_form_vs_bisection() {
  CheckResult check{"closedFormVsBisection"};
  const double a_grid[] = {0.5, 1.0, 1.5, 2.5, 4.0};
  const double b_grid[] = {0.5, 0.8, 1.0, 1.5, 2.0};
  const double df_grid[] = {0.05, 0.35, 0.65, 0.95};
  for (double a : a_grid) {
    for (double b_bar : b_grid) {
      for (double df : df_grid) {
        GameParams params{a, b_bar};
        EnforceableRule rule = best_enforceable_rule_detail(params, df);
        const double scale =
            std::max(std::abs(rule.closed_form), std::abs(rule.bisection));
        const double diff = std::abs(rule.closed_form - rule.bisection);
        tally(check, scale == 0.0 ? diff == 0.0 : diff <= 1e-10 * scale);
      }
    }
  }
  return check;
}

CheckResult check_one_shot_identity(int trials, Rng& rng) {
  CheckResult check{"oneShotIdentity"};
  for (int i = 0; i < trials; ++i) {
    const double a = rng.uniform(0.5, 4.0);
    const double b_bar = rng.uniform(0.5, 2.0);
    const double beta = rng.uniform(0.05, 1.0);
    const double delta = rng.uniform(0.05, 0.95);
    GameParams params{a, b_bar};
    const double target = rng.uniform01() * params.pi_discretion();
    DiscountSpec spec = DiscountSpec::quasi_hyperbolic(beta, delta);
    const double direct = one_shot_deviation_value(params, spec, target);
    const double algebraic =
        temptation(target, params) - enforcement(target, params, spec);
    tally(check, std::abs(direct - algebraic) <= 1e-12);
  }
  return check;
}

CheckResult check_fixed_point(int trials, Rng& rng) {
  CheckResult check{"fixedPoint"};
  for (int i = 0; i < trials; ++i) {
    const double a = rng.uniform(0.5, 4.0);
    const double b_bar = rng.uniform(0.5, 2.0);
    GameParams params{a, b_bar};
    // Independent damped replay of expectation updating: the best response
    // to any expectation is b_bar/a, so iterate x <- x + (1/2)(br - x) from
    // zero until the iterate stops moving.
    double x = 0.0;
    const double br = b_bar / a;
    for (int step = 0; step < 200; ++step) {
      const double next = x + 0.5 * (br - x);
      if (next == x) break;
      x = next;
    }
    const double reported = discretionary_equilibrium(params);
    tally(check, std::abs(x - reported) <= 1e-12);
  }
  return check;
}

CheckResult check_beta_one_reduction(int trials, Rng& rng) {
  CheckResult check{"betaOneReduction"};
  for (int i = 0; i < trials; ++i) {
    const double a = rng.uniform(0.5, 4.0);
    const double b_bar = rng.uniform(0.5, 2.0);
    const double delta = rng.uniform(0.05, 0.95);
    GameParams params{a, b_bar};
    EquilibriumReport behavioral =
        equilibrium_report(params, DiscountSpec::quasi_hyperbolic(1.0, delta));
    EquilibriumReport baseline =
        equilibrium_report(params, DiscountSpec::exponential_from_factor(delta));
    bool same = true;
    const double pairs[][2] = {
        {behavioral.discount_factor, baseline.discount_factor},
        {behavioral.pi_discretion, baseline.pi_discretion},
        {behavioral.pi_ideal, baseline.pi_ideal},
        {behavioral.pi_best_enforceable, baseline.pi_best_enforceable},
        {behavioral.range_lo, baseline.range_lo},
        {behavioral.range_hi, baseline.range_hi},
        {behavioral.range_width, baseline.range_width},
    };
    for (const auto& p : pairs) {
      if (std::abs(p[0] - p[1]) > 1e-15) same = false;
    }
    tally(check, same);
  }
  return check;
}

CheckResult check_reversal_region(int trials, Rng& rng) {
  CheckResult check{"reversalRegion"};
  for (int i = 0; i < trials; ++i) {
    const double a = rng.uniform(0.5, 4.0);
    const double b_bar = rng.uniform(0.5, 2.0);
    const double beta = rng.uniform(0.05, 1.0);
    const double beta_hat = beta + rng.uniform01() * (1.0 - beta);
    const double delta = rng.uniform(0.05, 0.95);
    GameParams params{a, b_bar};
    const double target = rng.uniform01() * params.pi_discretion();
    PolicymakerProfile profile{beta, beta_hat, delta};
    const bool reported = detect_reversal(profile, params, target);
    const double differential = enforcement_differential(target, params);
    const double tempt = temptation(target, params);
    const bool believed_comply = beta_hat * delta * differential >= tempt;
    const bool actual_cheat = beta * delta * differential < tempt;
    tally(check, reported == (believed_comply && actual_cheat));
  }
  return check;
}

CheckResult check_narrowing_monotone() {
  CheckResult check{"narrowingMonotone"};
  SweepSpec spec;
  spec.beta_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  spec.delta_grid = {0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
  NarrowingReport report = narrowing_report(spec);
  tally(check, report.monotone);
  tally(check, report.min_ratio > 0.0 && report.min_ratio < 1.0);
  for (const SweepRow& row : report.rows) {
    if (row.beta < 1.0) {
      tally(check, row.width_ratio_vs_beta1 < 1.0);
    } else {
      tally(check, row.width_ratio_vs_beta1 == 1.0);
    }
  }
  return check;
}

CheckResult check_mc_estimators(std::uint64_t seed) {
  CheckResult check{"mcEstimators"};
  const std::size_t draws = 40000;
  {
    GameParams params{1.0, 1.0, 1, ShockSpec::uniform(0.5, 1.5, seed)};
    McEstimate est = temptation_mc(0.25, params, draws, seed);
    const double exact = temptation(0.25, params);
    tally(check, std::abs(est.mean - exact) <= 3.0 * est.std_error);
  }
  {
    GameParams params{2.0, 1.0, 1, ShockSpec::logistic_clipped_positive(1.0, 0.1, seed)};
    McEstimate est = temptation_mc(0.1, params, draws, seed + 1);
    const double exact = temptation(0.1, params);
    tally(check, std::abs(est.mean - exact) <= 3.0 * est.std_error);
  }
  {
    GameParams params{1.0, 1.0, 1, ShockSpec::uniform(0.8, 1.2, seed)};
    McEstimate est = enforcement_mc(0.2, params, 0.9, draws, seed + 2);
    const double exact = enforcement(0.2, params, 0.9);
    tally(check, std::abs(est.mean - exact) <= 3.0 * est.std_error);
  }
  return check;
}

}  // namespace

VerifyReport run_verify(int trials, std::uint64_t seed) {
  if (trials < 1) {
    throw ValidationError("verify: trials must be >= 1");
  }
  VerifyReport report;
  Rng rng(seed);
  report.checks.push_back(check_closed_form_vs_bisection());
  report.checks.push_back(check_one_shot_identity(trials, rng));
  report.checks.push_back(check_fixed_point(std::min(trials, 50), rng));
  report.checks.push_back(check_beta_one_reduction(std::min(trials, 200), rng));
  report.checks.push_back(check_reversal_region(trials, rng));
  report.checks.push_back(check_narrowing_monotone());
  report.checks.push_back(check_mc_estimators(seed));
  return report;
}

}  // namespace pgl
