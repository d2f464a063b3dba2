#include "pgl/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace pgl {

std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

const char* to_token(Action a) {
  switch (a) {
    case Action::Comply:
      return "COMPLY";
    case Action::Cheat:
      return "CHEAT";
    case Action::Punished:
      return "PUNISHED";
    case Action::Abstain:
      return "ABSTAIN";
  }
  return "UNKNOWN";
}

const char* to_token(ReportMode m) {
  return m == ReportMode::Baseline ? "baseline" : "behavioral";
}

const char* to_token(PolicymakerType t) {
  switch (t) {
    case PolicymakerType::Naive:
      return "NAIVE";
    case PolicymakerType::PartiallyNaive:
      return "PARTIALLY_NAIVE";
    case PolicymakerType::Sophisticated:
      return "SOPHISTICATED";
    case PolicymakerType::Resolute:
      return "RESOLUTE";
    case PolicymakerType::Myopic:
      return "MYOPIC";
  }
  return "UNKNOWN";
}

std::string to_json(const EquilibriumReport& report) {
  std::ostringstream out;
  out << "{";
  out << "\"mode\":\"" << to_token(report.mode) << "\"";
  out << ",\"a\":" << format_g12(report.a);
  out << ",\"b_bar\":" << format_g12(report.b_bar);
  out << ",\"discount_factor\":" << format_g12(report.discount_factor);
  out << ",\"pi_discretion\":" << format_g12(report.pi_discretion);
  out << ",\"pi_ideal\":" << format_g12(report.pi_ideal);
  out << ",\"pi_best_enforceable\":" << format_g12(report.pi_best_enforceable);
  out << ",\"range_lo\":" << format_g12(report.range_lo);
  out << ",\"range_hi\":" << format_g12(report.range_hi);
  out << ",\"range_width\":" << format_g12(report.range_width);
  out << "}";
  return out.str();
}

std::string report_csv(const std::vector<EquilibriumReport>& reports) {
  std::ostringstream out;
  out << "mode,a,b_bar,discount_factor,pi_discretion,pi_ideal,"
         "pi_best_enforceable,range_lo,range_hi,range_width\n";
  for (const EquilibriumReport& r : reports) {
    out << to_token(r.mode) << "," << format_g12(r.a) << ","
        << format_g12(r.b_bar) << "," << format_g12(r.discount_factor) << ","
        << format_g12(r.pi_discretion) << "," << format_g12(r.pi_ideal) << ","
        << format_g12(r.pi_best_enforceable) << "," << format_g12(r.range_lo)
        << "," << format_g12(r.range_hi) << "," << format_g12(r.range_width)
        << "\n";
  }
  return out.str();
}

std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream out;
  out << "t,announced_target,expected_inflation,realized_inflation,"
         "period_loss,action,planned_action,reversal\n";
  for (const PeriodRecord& p : traj.periods) {
    out << p.t << "," << format_g12(p.announced_target) << ","
        << format_g12(p.expected_inflation) << ","
        << format_g12(p.realized_inflation) << "," << format_g12(p.period_loss)
        << "," << to_token(p.action) << "," << to_token(p.planned_action)
        << "," << (p.reversal ? 1 : 0) << "\n";
  }
  return out.str();
}

std::string trajectory_json(const Trajectory& traj) {
  std::ostringstream out;
  out << "{\"periods\":[";
  bool first = true;
  for (const PeriodRecord& p : traj.periods) {
    if (!first) out << ",";
    first = false;
    out << "{\"t\":" << p.t;
    out << ",\"announced_target\":" << format_g12(p.announced_target);
    out << ",\"expected_inflation\":" << format_g12(p.expected_inflation);
    out << ",\"realized_inflation\":" << format_g12(p.realized_inflation);
    out << ",\"period_loss\":" << format_g12(p.period_loss);
    out << ",\"action\":\"" << to_token(p.action) << "\"";
    out << ",\"planned_action\":\"" << to_token(p.planned_action) << "\"";
    out << ",\"reversal\":" << (p.reversal ? "true" : "false");
    out << "}";
  }
  out << "],\"summary\":{";
  out << "\"total_discounted_loss_actual_beta\":"
      << format_g12(traj.summary.total_discounted_loss_actual_beta);
  out << ",\"total_discounted_loss_spec\":"
      << format_g12(traj.summary.total_discounted_loss_spec);
  out << ",\"cheat_count\":" << traj.summary.cheat_count;
  out << ",\"reversal_count\":" << traj.summary.reversal_count;
  out << "}}";
  return out.str();
}

}  // namespace pgl
