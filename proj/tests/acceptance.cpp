// End-to-end acceptance checks. Each check prints one PASS/FAIL line with the
// observed worst case next to the tolerance it must meet; the process exits
// nonzero if any line fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pgl/discounting.hpp"
#include "pgl/policy_game.hpp"
#include "pgl/repeated_game.hpp"
#include "pgl/rng.hpp"
#include "pgl/serialize.hpp"
#include "pgl/sweep.hpp"

using pgl::Action;
using pgl::DiscountSpec;
using pgl::GameParams;
using pgl::PolicymakerProfile;

namespace {

int g_failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
  if (!ok) ++g_failures;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

// A behavioral report with no present bias must be the exponential baseline
// report, field for field.
void check_beta_one_reduction() {
  pgl::Rng rng(101);
  double max_gap = 0.0;
  bool modes_ok = true;
  const int cases = 50;
  for (int rep = 0; rep < cases; ++rep) {
    GameParams params{rng.uniform(0.5, 4.0), rng.uniform(0.5, 2.0)};
    const double delta = rng.uniform(0.05, 0.95);
    const pgl::EquilibriumReport behavioral =
        pgl::equilibrium_report(params, DiscountSpec::quasi_hyperbolic(1.0, delta));
    const pgl::EquilibriumReport baseline =
        pgl::equilibrium_report(params, DiscountSpec::exponential_from_factor(delta));
    modes_ok = modes_ok && behavioral.mode == pgl::ReportMode::Behavioral &&
               baseline.mode == pgl::ReportMode::Baseline;
    const double gaps[] = {
        std::abs(behavioral.discount_factor - baseline.discount_factor),
        std::abs(behavioral.pi_discretion - baseline.pi_discretion),
        std::abs(behavioral.pi_ideal - baseline.pi_ideal),
        std::abs(behavioral.pi_best_enforceable - baseline.pi_best_enforceable),
        std::abs(behavioral.range_lo - baseline.range_lo),
        std::abs(behavioral.range_hi - baseline.range_hi),
        std::abs(behavioral.range_width - baseline.range_width)};
    for (double gap : gaps) max_gap = std::max(max_gap, gap);
  }
  std::ostringstream detail;
  detail << "beta=1 behavioral reports vs exponential baselines, " << cases
         << " random parameter sets, max field gap " << sci(max_gap)
         << " (tolerance 1e-15)";
  report("beta-one reduction", modes_ok && max_gap <= 1e-15, detail.str());
}

// Present bias must strictly narrow the enforceable range, and more bias must
// narrow it more, at every long-run delta.
void check_present_bias_narrowing() {
  GameParams params{1.0, 1.0};
  int violations = 0;
  int comparisons = 0;
  for (int i = 0; i < 10; ++i) {
    const double delta = 0.05 + 0.9 * static_cast<double>(i) / 9.0;
    const pgl::EquilibriumReport base =
        pgl::equilibrium_report(params, DiscountSpec::exponential_from_factor(delta));
    double prev_width = -1.0;
    for (int j = 0; j < 10; ++j) {
      const double beta = 0.05 + 0.9 * static_cast<double>(j) / 9.0;
      const pgl::EquilibriumReport rep =
          pgl::equilibrium_report(params, DiscountSpec::quasi_hyperbolic(beta, delta));
      ++comparisons;
      if (!(rep.range_width < base.range_width)) ++violations;
      if (prev_width >= 0.0 && !(rep.range_width > prev_width)) ++violations;
      prev_width = rep.range_width;
    }
  }
  std::ostringstream detail;
  detail << "10x10 (beta, delta) grid, width strictly below the no-bias width "
            "and strictly increasing in beta, "
         << violations << " violations in " << comparisons << " cells";
  report("present-bias narrowing", violations == 0, detail.str());
}

// The closed-form boundary, the library bisection, an independent bisection,
// and the simulated deviation value must all agree.
void check_boundary_cross_checks() {
  const double a_grid[] = {0.5, 1.375, 2.25, 3.125, 4.0};
  const double b_grid[] = {0.5, 0.875, 1.25, 1.625, 2.0};
  const double df_grid[] = {0.05, 0.35, 0.65, 0.95};
  double max_rel = 0.0;
  double max_oracle_rel = 0.0;
  int points = 0;
  for (double a : a_grid) {
    for (double b_bar : b_grid) {
      for (double df : df_grid) {
        GameParams params{a, b_bar};
        const pgl::EnforceableRule rule =
            pgl::best_enforceable_rule_detail(params, df);
        const double scale = std::max(1e-12, std::abs(rule.closed_form));
        max_rel = std::max(
            max_rel, std::abs(rule.closed_form - rule.bisection) / scale);
        const double oracle = oracles::enforceable_boundary(a, b_bar, df);
        max_oracle_rel = std::max(
            max_oracle_rel, std::abs(rule.closed_form - oracle) / scale);
        ++points;
      }
    }
  }

  pgl::Rng rng(103);
  double max_abs = 0.0;
  const int draws = 1000;
  for (int rep = 0; rep < draws; ++rep) {
    GameParams params{rng.uniform(0.5, 4.0), rng.uniform(0.5, 2.0)};
    const double df = rng.uniform(0.05, 0.95);
    const double target = rng.uniform01() * params.pi_discretion();
    const DiscountSpec spec = DiscountSpec::exponential_from_factor(df);
    const double direct = pgl::one_shot_deviation_value(params, spec, target);
    const double algebraic =
        pgl::temptation(target, params) - pgl::enforcement(target, params, df);
    max_abs = std::max(max_abs, std::abs(direct - algebraic));
  }

  std::ostringstream detail;
  detail << points << " grid points: closed form vs bisection rel gap "
         << sci(max_rel) << ", vs independent bisection " << sci(max_oracle_rel)
         << " (tolerance 1e-10); " << draws
         << " random deviation values vs temptation minus enforcement, max abs gap "
         << sci(max_abs) << " (tolerance 1e-12)";
  report("boundary cross-checks",
         max_rel <= 1e-10 && max_oracle_rel <= 1e-10 && max_abs <= 1e-12,
         detail.str());
}

// The cheating gain at a zero target must equal the brute-force best
// deviation found by scanning the action grid.
void check_temptation_brute_force() {
  GameParams params{2.0, 1.0};
  const double lib = pgl::temptation(0.0, params);
  const double oracle = oracles::best_deviation_gain(2.0, 1.0, 0.0, 0.0, 2.0, 1e-5);
  const double gap = std::abs(lib - oracle);
  std::ostringstream detail;
  detail << "temptation(0; a=2, bBar=1) = " << pgl::format_g12(lib)
         << " vs grid search over [0, 2] at step 1e-5, gap " << sci(gap)
         << " (tolerance 1e-8)";
  report("temptation brute force", lib == 0.25 && gap <= 1e-8, detail.str());
}

// Damped best-response iteration on expectations must land on bBar / a.
void check_expectation_fixed_point() {
  pgl::Rng rng(105);
  double max_gap = 0.0;
  const int cases = 20;
  for (int rep = 0; rep < cases; ++rep) {
    const double a = rng.uniform(0.5, 4.0);
    const double b_bar = rng.uniform(0.5, 2.0);
    GameParams params{a, b_bar};
    const double analytic = pgl::discretionary_equilibrium(params);
    const double iterated = oracles::fixed_point_expectation(a, b_bar);
    max_gap = std::max(max_gap, std::abs(analytic - iterated));
  }
  std::ostringstream detail;
  detail << cases << " random parameter sets, max gap between iteration and "
         << "bBar/a " << sci(max_gap) << " (tolerance 1e-12)";
  report("expectation fixed point", max_gap <= 1e-12, detail.str());
}

// Planned-comply-then-cheat must coincide exactly with the region where the
// temptation sits between the believed and actual enforcement thresholds.
void check_reversal_region() {
  GameParams params{1.0, 1.0};
  const double delta = 0.9;
  int disagreements = 0;
  int cells = 0;
  for (int bi = 0; bi < 20; ++bi) {
    const double beta = 0.05 + 0.95 * static_cast<double>(bi) / 19.0;
    for (int hi = 0; hi < 20; ++hi) {
      const double beta_hat = 0.05 + 0.95 * static_cast<double>(hi) / 19.0;
      if (beta_hat < beta - 1e-9) continue;  // would understate the bias
      for (int ti = 0; ti < 20; ++ti) {
        const double target = static_cast<double>(ti) / 19.0;
        PolicymakerProfile profile{beta, beta_hat, delta};
        const double differential =
            oracles::punishment_differential(1.0, 1.0, target);
        const double tempt = oracles::cheat_gain(1.0, 1.0, target);
        const bool region = beta * delta * differential < tempt &&
                            tempt <= beta_hat * delta * differential;
        if (pgl::detect_reversal(profile, params, target) != region) {
          ++disagreements;
        }
        ++cells;
      }
    }
  }
  std::ostringstream detail;
  detail << cells << " (beta, betaHat, target) cells vs the threshold "
         << "inequalities, " << disagreements << " disagreements";
  report("reversal region", disagreements == 0, detail.str());
}

// The five policymaker types must produce their signature trajectories.
void check_type_behaviors() {
  GameParams params{1.0, 1.0};
  const double inf = std::numeric_limits<double>::infinity();
  std::ostringstream detail;
  bool ok = true;

  const pgl::Trajectory committed =
      pgl::simulate(PolicymakerProfile{0.4, 0.4, 0.9, true, inf}, params,
                    DiscountSpec::quasi_hyperbolic(0.4, 0.9), 0.0, 20, 1);
  if (committed.summary.cheat_count != 0) {
    ok = false;
    detail << "committed resolute cheated; ";
  }

  const pgl::Trajectory consistent =
      pgl::simulate(PolicymakerProfile{1.0, 1.0, 0.9}, params,
                    DiscountSpec::quasi_hyperbolic(1.0, 0.9), 0.06, 50, 1);
  if (consistent.summary.cheat_count != 0) {
    ok = false;
    detail << "uncommitted resolute cheated at an enforceable target; ";
  }

  PolicymakerProfile myopic{1e-7, 1.0, 0.9};
  for (double target : {0.0, 0.3, 0.7}) {
    const pgl::Trajectory traj =
        pgl::simulate(myopic, params, DiscountSpec::quasi_hyperbolic(1e-7, 0.9),
                      target, 10, 1);
    for (const pgl::PeriodRecord& p : traj.periods) {
      if (p.action == Action::Comply) {
        ok = false;
        detail << "myopic complied at target " << target << "; ";
        break;
      }
    }
  }

  const pgl::Trajectory soph =
      pgl::simulate(PolicymakerProfile{0.4, 0.4, 0.9}, params,
                    DiscountSpec::quasi_hyperbolic(0.4, 0.9), 0.4, 10, 1);
  for (const pgl::PeriodRecord& p : soph.periods) {
    if (p.action != Action::Abstain) {
      ok = false;
      detail << "sophisticate did not abstain; ";
      break;
    }
  }

  const pgl::Trajectory naive =
      pgl::simulate(PolicymakerProfile{0.4, 1.0, 0.9}, params,
                    DiscountSpec::quasi_hyperbolic(0.4, 0.9), 0.4, 6, 1);
  const bool naive_ok = !naive.periods.empty() && naive.periods[0].reversal &&
                        naive.periods[0].planned_action == Action::Comply &&
                        naive.periods[0].action == Action::Cheat;
  if (!naive_ok) {
    ok = false;
    detail << "naif missed the period-0 reversal; ";
  }

  if (ok) {
    detail << "resolute profiles never cheat, the myopic profile never "
              "complies below discretion, the sophisticate abstains, and the "
              "naif reverses at period 0";
  }
  report("type behaviors", ok, detail.str());
}

// Repeat runs with the same inputs must reproduce identical bytes.
void check_deterministic_replay() {
  pgl::SweepSpec spec;
  spec.beta_grid = {0.25, 0.5, 0.75, 1.0};
  spec.delta_grid = {0.6, 0.75, 0.9};
  const std::string sweep_first = pgl::sweep_csv(pgl::run_sweep(spec));
  const std::string sweep_second = pgl::sweep_csv(pgl::run_sweep(spec));
  const bool sweep_ok = !sweep_first.empty() && sweep_first == sweep_second;

  GameParams shocked{1.0, 1.0, 1, pgl::ShockSpec::uniform(0.5, 1.5, 13)};
  PolicymakerProfile naive{0.4, 1.0, 0.9};
  const DiscountSpec spec_qh = DiscountSpec::quasi_hyperbolic(0.4, 0.9);
  const pgl::Trajectory first = pgl::simulate(naive, shocked, spec_qh, 0.4, 25, 13);
  const pgl::Trajectory second = pgl::simulate(naive, shocked, spec_qh, 0.4, 25, 13);
  bool fields_ok = first.periods.size() == second.periods.size();
  if (fields_ok) {
    for (std::size_t t = 0; t < first.periods.size(); ++t) {
      fields_ok = fields_ok &&
                  first.periods[t].period_loss == second.periods[t].period_loss &&
                  first.periods[t].realized_inflation ==
                      second.periods[t].realized_inflation &&
                  first.periods[t].action == second.periods[t].action;
    }
  }
  const bool csv_ok = pgl::trajectory_csv(first) == pgl::trajectory_csv(second);

  std::ostringstream detail;
  detail << "sweep CSV byte-identical across runs: " << (sweep_ok ? "yes" : "no")
         << "; shocked trajectory (fixed seed) bitwise and byte-identical: "
         << (fields_ok && csv_ok ? "yes" : "no");
  report("deterministic replay", sweep_ok && fields_ok && csv_ok, detail.str());
}

}  // namespace

int main() {
  check_beta_one_reduction();
  check_present_bias_narrowing();
  check_boundary_cross_checks();
  check_temptation_brute_force();
  check_expectation_fixed_point();
  check_reversal_region();
  check_type_behaviors();
  check_deterministic_replay();

  const int total = 8;
  std::printf("acceptance: %d passed, %d failed\n", total - g_failures, g_failures);
  return g_failures == 0 ? 0 : 1;
}
