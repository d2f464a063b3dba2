#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pgl/config.hpp"
#include "pgl/discounting.hpp"
#include "pgl/errors.hpp"
#include "pgl/log.hpp"
#include "pgl/policy_game.hpp"
#include "pgl/repeated_game.hpp"
#include "pgl/serialize.hpp"
#include "pgl/sweep.hpp"
#include "pgl/verify.hpp"

namespace {

using namespace pgl;

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open for writing: " + path);
  }
  out << payload;
  out.flush();
  if (!out) {
    throw IoError("write failed: " + path);
  }
  log(LogLevel::Info, "wrote " + path);
}

void echo_config_to_diagnostics(const RunConfig& config) {
  std::cerr << "config: " << to_json(config) << "\n";
}

std::string report_text(const EquilibriumReport& r) {
  std::ostringstream out;
  out << to_token(r.mode) << " (discount_factor=" << format_g12(r.discount_factor)
      << ")\n";
  out << "  pi_discretion=" << format_g12(r.pi_discretion)
      << "  pi_ideal=" << format_g12(r.pi_ideal)
      << "  pi_best_enforceable=" << format_g12(r.pi_best_enforceable) << "\n";
  out << "  enforceable range [" << format_g12(r.range_lo) << ", "
      << format_g12(r.range_hi) << "]  width=" << format_g12(r.range_width)
      << "\n";
  return out.str();
}

GameParams game_params(const RunConfig& config) {
  return GameParams{config.a, config.b_bar, config.punishment_periods, config.shock};
}

int cmd_analyze(RunConfig config) {
  config.format = config.effective_format("json");
  config.validate();
  GameParams params = game_params(config);
  EquilibriumReport baseline = equilibrium_report(
      params, DiscountSpec::exponential_from_factor(config.effective_q()));
  EquilibriumReport behavioral = equilibrium_report(
      params, DiscountSpec::quasi_hyperbolic(config.beta, config.delta));

  std::string payload;
  if (*config.format == "json") {
    payload = "{\"config\":" + to_json(config) + ",\"baseline\":" +
              to_json(baseline) + ",\"behavioral\":" + to_json(behavioral) + "}\n";
  } else if (*config.format == "csv") {
    payload = report_csv({baseline, behavioral});
    echo_config_to_diagnostics(config);
  } else {
    payload = report_text(baseline) + report_text(behavioral) +
              "config: " + to_json(config) + "\n";
  }
  write_output(config.output, payload);
  return 0;
}

int cmd_simulate(RunConfig config) {
  config.format = config.effective_format("csv");
  config.validate();
  GameParams params = game_params(config);
  PolicymakerProfile profile{config.beta, config.beta_hat, config.delta,
                             config.committed, config.effective_sanction()};
  DiscountSpec spec = DiscountSpec::quasi_hyperbolic(config.beta, config.delta);
  Trajectory traj = simulate(profile, params, spec, config.target, config.horizon,
                             config.effective_seed());

  std::string payload;
  if (*config.format == "json") {
    payload = "{\"config\":" + to_json(config) +
              ",\"type\":\"" + to_token(classify(profile)) + "\"" +
              ",\"trajectory\":" + trajectory_json(traj) + "}\n";
  } else if (*config.format == "csv") {
    payload = trajectory_csv(traj);
    echo_config_to_diagnostics(config);
  } else {
    std::ostringstream out;
    out << "type=" << to_token(classify(profile)) << "  horizon="
        << config.horizon << "  target=" << format_g12(config.target) << "\n";
    out << "cheats=" << traj.summary.cheat_count
        << "  reversals=" << traj.summary.reversal_count << "\n";
    out << "total_discounted_loss_actual_beta="
        << format_g12(traj.summary.total_discounted_loss_actual_beta) << "\n";
    out << "total_discounted_loss_spec="
        << format_g12(traj.summary.total_discounted_loss_spec) << "\n";
    out << "config: " << to_json(config) << "\n";
    payload = out.str();
  }
  write_output(config.output, payload);
  return 0;
}

int cmd_sweep(RunConfig config) {
  config.format = config.effective_format("csv");
  config.validate();
  SweepSpec spec;
  spec.a = config.a;
  spec.b_bar = config.b_bar;
  spec.beta_grid = config.beta_grid.empty()
                       ? std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5,
                                             0.6, 0.7, 0.8, 0.9, 1.0}
                       : config.beta_grid;
  spec.delta_grid = config.delta_grid.empty()
                        ? std::vector<double>{0.5, 0.6, 0.7, 0.8, 0.9, 0.95}
                        : config.delta_grid;
  spec.q_grid = config.q_grid;
  spec.output_path = config.output;

  NarrowingReport narrowing = narrowing_report(spec);
  std::string payload;
  if (*config.format == "json") {
    std::ostringstream out;
    out << "{\"config\":" << to_json(config);
    out << ",\"minRatio\":" << format_g12(narrowing.min_ratio);
    out << ",\"monotone\":" << (narrowing.monotone ? "true" : "false");
    out << ",\"rows\":[";
    for (std::size_t i = 0; i < narrowing.rows.size(); ++i) {
      const SweepRow& row = narrowing.rows[i];
      if (i > 0) out << ",";
      out << "{\"beta\":" << format_g12(row.beta)
          << ",\"delta\":" << format_g12(row.delta)
          << ",\"discountFactor\":" << format_g12(row.discount_factor)
          << ",\"piBestEnforceable\":" << format_g12(row.pi_best_enforceable)
          << ",\"rangeWidth\":" << format_g12(row.range_width)
          << ",\"widthRatioVsBeta1\":" << format_g12(row.width_ratio_vs_beta1)
          << "}";
    }
    out << "]}\n";
    payload = out.str();
  } else {
    payload = sweep_csv(narrowing.rows);
    echo_config_to_diagnostics(config);
  }
  write_output(config.output, payload);
  return 0;
}

int cmd_verify(RunConfig config) {
  config.format = config.effective_format("text");
  config.validate();
  VerifyReport report = run_verify(config.trials, config.effective_seed());

  std::string payload;
  if (*config.format == "json") {
    std::ostringstream out;
    out << "{\"config\":" << to_json(config) << ",\"checks\":[";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
      const CheckResult& c = report.checks[i];
      if (i > 0) out << ",";
      out << "{\"name\":\"" << c.name << "\",\"passed\":" << c.passed
          << ",\"failed\":" << c.failed << "}";
    }
    out << "],\"allPassed\":" << (report.all_passed() ? "true" : "false")
        << "}\n";
    payload = out.str();
  } else if (*config.format == "csv") {
    std::ostringstream out;
    out << "check,passed,failed\n";
    for (const CheckResult& c : report.checks) {
      out << c.name << "," << c.passed << "," << c.failed << "\n";
    }
    payload = out.str();
    echo_config_to_diagnostics(config);
  } else {
    std::ostringstream out;
    for (const CheckResult& c : report.checks) {
      out << c.name << ": " << c.passed << " passed, " << c.failed
          << " failed\n";
    }
    out << (report.all_passed() ? "verify: PASS" : "verify: FAIL") << " ("
        << report.total_passed() << " checks passed, " << report.total_failed()
        << " failed)\n";
    payload = out.str();
  }
  write_output(config.output, payload);
  if (!report.all_passed()) {
    log(LogLevel::Error, "verify found oracle disagreements");
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibrium and simulation toolkit for the reputational "
               "inflation-policy game under present-biased discounting"};
  app.name("policy-game-lab");

  std::optional<std::string> config_path;
  std::optional<std::string> output;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  std::optional<double> a, b_bar, beta, beta_hat, delta, q, target, sanction;
  std::optional<int> horizon, punishment_periods, trials;

  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--output", output, "Write the report here instead of stdout");
  app.add_option("--format", format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", seed, "Seed for stochastic draws");
  app.add_option("--a", a, "Inflation cost weight (> 0)");
  app.add_option("--b-bar", b_bar, "Mean surprise benefit slope (> 0)");
  app.add_option("--beta", beta, "Actual present-bias factor in (0, 1]");
  app.add_option("--beta-hat", beta_hat, "Believed present-bias factor in (0, 1]");
  app.add_option("--delta", delta, "Long-run per-period factor in (0, 1)");
  app.add_option("--q", q, "Baseline exponential factor (defaults to delta)");
  app.add_option("--target", target, "Announced inflation target (>= 0)");
  app.add_option("--horizon", horizon, "Simulation length in periods (>= 1)");
  app.add_option("--punishment-periods", punishment_periods,
                 "Reversion length after a cheat (>= 1)");
  app.add_flag("--committed", "Bind the policymaker to the announced rule");
  app.add_option("--sanction", sanction,
                 "Extra cheating cost when committed (default infinite)");

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Equilibrium report, baseline and behavioral side by side");
  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "Period-by-period trajectory for one profile");
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Grid table of enforceable-range narrowing across beta and delta");
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run the oracle-equivalence suite and report pass/fail counts");
  verify_cmd->add_option("--trials", trials, "Random tuples per check (default 1000)");
  for (CLI::App* sub : {analyze, simulate_cmd, sweep_cmd, verify_cmd}) {
    sub->fallthrough();
  }
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);

    RunConfig config;
    if (config_path.has_value()) {
      config = load_config(*config_path);
      log(LogLevel::Debug, "loaded config " + *config_path);
    }
    if (a) config.a = *a;
    if (b_bar) config.b_bar = *b_bar;
    if (beta) config.beta = *beta;
    if (beta_hat) config.beta_hat = *beta_hat;
    if (delta) config.delta = *delta;
    if (q) config.q = *q;
    if (target) config.target = *target;
    if (horizon) config.horizon = *horizon;
    if (punishment_periods) config.punishment_periods = *punishment_periods;
    if (app.count("--committed") > 0) config.committed = true;
    if (sanction) config.sanction = *sanction;
    if (seed) config.seed = *seed;
    if (format) config.format = *format;
    if (output) config.output = *output;
    if (trials) config.trials = *trials;

    if (analyze->parsed()) return cmd_analyze(std::move(config));
    if (simulate_cmd->parsed()) return cmd_simulate(std::move(config));
    if (sweep_cmd->parsed()) return cmd_sweep(std::move(config));
    if (verify_cmd->parsed()) return cmd_verify(std::move(config));
    throw ValidationError("no subcommand selected");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ValidationError& e) {
    log(LogLevel::Error, e.what());
    return 2;
  } catch (const NumericalError& e) {
    log(LogLevel::Error, e.what());
    return 3;
  } catch (const IoError& e) {
    log(LogLevel::Error, e.what());
    return 1;
  } catch (const std::exception& e) {
    log(LogLevel::Error, std::string("unexpected error: ") + e.what());
    return 1;
  }
}
