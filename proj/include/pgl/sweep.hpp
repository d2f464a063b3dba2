#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pgl/policy_game.hpp"

namespace pgl {

/// Grid experiment over present-bias and long-run discount parameters at
/// fixed game primitives. q_grid optionally adds pure-baseline rows
/// (emitted as beta = 1 rows at delta = q).
struct SweepSpec {
  double a = 1.0;
  double b_bar = 1.0;
  std::vector<double> beta_grid;
  std::vector<double> delta_grid;
  std::vector<double> q_grid;  // optional
  std::string output_path;     // optional; empty means no file output

  void validate() const;
};

struct SweepRow {
  double beta = 0.0;
  double delta = 0.0;
  double discount_factor = 0.0;
  double pi_best_enforceable = 0.0;
  double range_width = 0.0;
  double width_ratio_vs_beta1 = 0.0;
};

/// One row per (beta, delta) pair plus one per q_grid entry, sorted by
/// (delta, beta) ascending. width_ratio_vs_beta1 divides each row's range
/// width by the beta = 1 width at the same delta.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Fixed header `beta,delta,discount_factor,pi_best_enforceable,range_width,
/// width_ratio_vs_beta1`; 12 significant digits; byte-identical for
/// identical specs.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

std::string sweep_csv(const std::vector<SweepRow>& rows);

/// run_sweep plus writing the CSV to spec.output_path.
std::vector<SweepRow> run_sweep_to_file(const SweepSpec& spec);

struct NarrowingReport {
  double min_ratio = 1.0;
  bool monotone = true;  // range width non-decreasing in beta at every fixed delta
  std::vector<SweepRow> rows;
};

NarrowingReport narrowing_report(const SweepSpec& spec);

}  // namespace pgl
