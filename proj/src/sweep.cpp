#include "pgl/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pgl/discounting.hpp"
#include "pgl/errors.hpp"
#include "pgl/serialize.hpp"

namespace pgl {

namespace {

void require_grid(const std::vector<double>& grid, const char* name, double lo,
                  double hi, bool allow_hi) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = grid[i];
    if (!std::isfinite(v) || v <= lo || v > hi || (!allow_hi && v >= hi)) {
      std::ostringstream msg;
      msg << "SweepSpec: " << name << " entry " << v << " outside ("
          << lo << ", " << hi << (allow_hi ? "]" : ")");
      throw ValidationError(msg.str());
    }
    if (i > 0 && v <= grid[i - 1]) {
      std::ostringstream msg;
      msg << "SweepSpec: " << name << " must be strictly increasing";
      throw ValidationError(msg.str());
    }
  }
}

}  // namespace

void SweepSpec::validate() const {
  GameParams check{a, b_bar};  // reuses the primitive-parameter validation
  (void)check;
  if (beta_grid.empty()) {
    throw ValidationError("SweepSpec: beta_grid must be non-empty");
  }
  if (delta_grid.empty()) {
    throw ValidationError("SweepSpec: delta_grid must be non-empty");
  }
  require_grid(beta_grid, "beta_grid", 0.0, 1.0, true);
  require_grid(delta_grid, "delta_grid", 0.0, 1.0, false);
  require_grid(q_grid, "q_grid", 0.0, 1.0, false);
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  GameParams params{spec.a, spec.b_bar};

  std::vector<SweepRow> rows;
  rows.reserve(spec.beta_grid.size() * spec.delta_grid.size() +
               spec.q_grid.size());

  auto report_for = [&](double beta, double delta) {
    DiscountSpec d = beta == 1.0 ? DiscountSpec::exponential_from_factor(delta)
                                 : DiscountSpec::quasi_hyperbolic(beta, delta);
    return equilibrium_report(params, d);
  };

  for (double delta : spec.delta_grid) {
    const double base_width = report_for(1.0, delta).range_width;
    for (double beta : spec.beta_grid) {
      EquilibriumReport rep = report_for(beta, delta);
      SweepRow row;
      row.beta = beta;
      row.delta = delta;
      row.discount_factor = rep.discount_factor;
      row.pi_best_enforceable = rep.pi_best_enforceable;
      row.range_width = rep.range_width;
      row.width_ratio_vs_beta1 = rep.range_width / base_width;
      rows.push_back(row);
    }
  }
  for (double q : spec.q_grid) {
    EquilibriumReport rep = report_for(1.0, q);
    SweepRow row;
    row.beta = 1.0;
    row.delta = q;
    row.discount_factor = rep.discount_factor;
    row.pi_best_enforceable = rep.pi_best_enforceable;
    row.range_width = rep.range_width;
    row.width_ratio_vs_beta1 = 1.0;
    rows.push_back(row);
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const SweepRow& lhs, const SweepRow& rhs) {
                     if (lhs.delta != rhs.delta) return lhs.delta < rhs.delta;
                     return lhs.beta < rhs.beta;
                   });
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "beta,delta,discount_factor,pi_best_enforceable,range_width,"
         "width_ratio_vs_beta1\n";
  for (const SweepRow& row : rows) {
    out << format_g12(row.beta) << "," << format_g12(row.delta) << ","
        << format_g12(row.discount_factor) << ","
        << format_g12(row.pi_best_enforceable) << ","
        << format_g12(row.range_width) << ","
        << format_g12(row.width_ratio_vs_beta1) << "\n";
  }
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  write_sweep_csv(rows, out);
  return out.str();
}

std::vector<SweepRow> run_sweep_to_file(const SweepSpec& spec) {
  std::vector<SweepRow> rows = run_sweep(spec);
  if (spec.output_path.empty()) {
    throw ValidationError("SweepSpec: output_path must be set to write a file");
  }
  std::ofstream out(spec.output_path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open for writing: " + spec.output_path);
  }
  write_sweep_csv(rows, out);
  out.flush();
  if (!out) {
    throw IoError("write failed: " + spec.output_path);
  }
  return rows;
}

NarrowingReport narrowing_report(const SweepSpec& spec) {
  NarrowingReport report;
  report.rows = run_sweep(spec);
  for (const SweepRow& row : report.rows) {
    report.min_ratio = std::min(report.min_ratio, row.width_ratio_vs_beta1);
  }
  // Rows come back sorted by (delta, beta), so width monotonicity in beta is
  // a scan over consecutive rows sharing a delta.
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const SweepRow& prev = report.rows[i - 1];
    const SweepRow& cur = report.rows[i];
    if (cur.delta == prev.delta && cur.range_width < prev.range_width) {
      report.monotone = false;
    }
  }
  return report;
}

}  // namespace pgl
