#pragma once

#include <string>
#include <vector>

#include "pgl/policy_game.hpp"
#include "pgl/repeated_game.hpp"

namespace pgl {

/// Shortest round-trippable rendering at 12 significant digits (printf %.12g).
/// Every numeric field in machine-readable output goes through this one
/// function so identical inputs serialize byte-identically.
std::string format_g12(double v);

const char* to_token(Action a);
const char* to_token(ReportMode m);
const char* to_token(PolicymakerType t);

/// Fixed field order: mode, a, b_bar, discount_factor, pi_discretion,
/// pi_ideal, pi_best_enforceable, range_lo, range_hi, range_width.
std::string to_json(const EquilibriumReport& report);

/// Same fields as columns; one row per report.
std::string report_csv(const std::vector<EquilibriumReport>& reports);

/// Header `t,announced_target,expected_inflation,realized_inflation,
/// period_loss,action,planned_action,reversal`; reversal as 0/1.
std::string trajectory_csv(const Trajectory& traj);

std::string trajectory_json(const Trajectory& traj);

}  // namespace pgl
