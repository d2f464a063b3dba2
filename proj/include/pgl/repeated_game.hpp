#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgl/discounting.hpp"
#include "pgl/policy_game.hpp"

namespace pgl {

/// A policymaker's time preferences and self-knowledge: actual present bias
/// beta, believed present bias beta_hat, long-run factor delta, and an
/// optional binding pre-commitment with a cheating sanction.
struct PolicymakerProfile {
  double beta = 1.0;
  double beta_hat = 1.0;
  double delta = 0.9;
  bool committed = false;
  double sanction = 0.0;  // extra cost added to cheating when committed; may be +inf

  PolicymakerProfile() = default;
  PolicymakerProfile(double beta, double beta_hat, double delta, bool committed = false,
                     double sanction = 0.0);

  void validate() const;
};

enum class PolicymakerType { Naive, PartiallyNaive, Sophisticated, Resolute, Myopic };

std::string to_string(PolicymakerType type);

/// Below this actual beta a profile counts as myopic (discount on the future
/// effectively zero).
inline constexpr double kMyopicBetaThreshold = 1e-6;

/// Tolerance for the equality comparisons in classify.
inline constexpr double kClassifyTolerance = 1e-9;

/// Total, mutually exclusive classification:
///   Myopic          beta <= 1e-6
///   Resolute        committed (effective beta restored to 1), or beta = beta_hat = 1
///   Naive           beta_hat = 1 > beta
///   Sophisticated   beta_hat = beta < 1
///   PartiallyNaive  beta < beta_hat < 1
/// Profiles with beta_hat < beta are invalid.
PolicymakerType classify(const PolicymakerProfile& profile);

enum class Action { Comply, Cheat, Punished, Abstain };

std::string to_string(Action action);

enum class DiscountBasis { ActualBeta, BelievedBeta };

/// Outcome of the per-period cheat-or-comply comparison. margin is the
/// enforcement side minus the net temptation side; Comply iff margin >= 0.
struct Decision {
  Action action = Action::Comply;
  double margin = 0.0;
};

/// Compares the one-period temptation T (net of any commitment sanction)
/// against the perceived discounted punishment beta_used * sum(delta^j) * E
/// over the punishment periods, where beta_used is beta or beta_hat per the
/// basis and E is the per-period enforcement differential. Myopic profiles
/// use beta_used = 0.
Decision decide(const PolicymakerProfile& profile, const GameParams& params, double target,
                DiscountBasis basis);

/// True iff the believed decision is Comply while the actual decision is
/// Cheat: planned compliance reversing at the moment of action.
bool detect_reversal(const PolicymakerProfile& profile, const GameParams& params,
                     double target);

struct PeriodRecord {
  int t = 0;
  double announced_target = 0.0;
  double expected_inflation = 0.0;
  double realized_inflation = 0.0;
  double period_loss = 0.0;
  Action action = Action::Comply;
  Action planned_action = Action::Comply;
  bool reversal = false;
};

struct TrajectorySummary {
  // Discounted under the profile's own quasi-hyperbolic (beta, delta).
  double total_discounted_loss_actual_beta = 0.0;
  // Discounted under the DiscountSpec passed to simulate; coincides with
  // the field above when that spec is the profile's own.
  double total_discounted_loss_spec = 0.0;
  int cheat_count = 0;
  int reversal_count = 0;
};

struct Trajectory {
  std::vector<PeriodRecord> periods;
  TrajectorySummary summary;
};

/// Period-by-period play against grim-trigger agents with finite Nash
/// reversion: agents expect the target while trust holds and expect the
/// discretionary rate for punishment_periods after a cheat. Sophisticates
/// that predict their own cheating abstain every period at the discretionary
/// outcome. Deterministic given the seed (the seed only matters when the
/// game carries a ShockSpec).
Trajectory simulate(const PolicymakerProfile& profile, const GameParams& params,
                    const DiscountSpec& spec, double target, int horizon,
                    std::uint64_t seed);

/// Brute-force oracle for the temptation/enforcement balance: discounted
/// loss of comply-forever minus discounted loss of cheat-once-then-punished,
/// both built period by period from the loss function. Positive means
/// cheating is profitable. Equals temptation - enforcement for
/// deterministic b.
double one_shot_deviation_value(const GameParams& params, const DiscountSpec& spec,
                                double target);

}  // namespace pgl
