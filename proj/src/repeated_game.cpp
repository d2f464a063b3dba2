#include "pgl/repeated_game.hpp"

#include <cmath>
#include <sstream>

#include "pgl/rng.hpp"

namespace pgl {

PolicymakerProfile::PolicymakerProfile(double beta_, double beta_hat_, double delta_,
                                       bool committed_, double sanction_)
    : beta(beta_), beta_hat(beta_hat_), delta(delta_), committed(committed_),
      sanction(sanction_) {
  validate();
}

void PolicymakerProfile::validate() const {
  if (!std::isfinite(beta) || beta <= 0.0 || beta > 1.0) {
    throw ValidationError("PolicymakerProfile: beta must be in (0, 1]");
  }
  if (!std::isfinite(beta_hat) || beta_hat <= 0.0 || beta_hat > 1.0) {
    throw ValidationError("PolicymakerProfile: beta_hat must be in (0, 1]");
  }
  if (!std::isfinite(delta) || delta <= 0.0 || delta >= 1.0) {
    throw ValidationError("PolicymakerProfile: delta must be in (0, 1)");
  }
  if (beta_hat < beta - kClassifyTolerance) {
    throw ValidationError(
        "PolicymakerProfile: beta_hat < beta is not a recognized type (beliefs cannot "
        "understate present bias)");
  }
  if (std::isnan(sanction) || sanction < 0.0) {
    throw ValidationError("PolicymakerProfile: sanction must be >= 0");
  }
}

std::string to_string(PolicymakerType type) {
  switch (type) {
    case PolicymakerType::Naive: return "naive";
    case PolicymakerType::PartiallyNaive: return "partiallyNaive";
    case PolicymakerType::Sophisticated: return "sophisticated";
    case PolicymakerType::Resolute: return "resolute";
    case PolicymakerType::Myopic: return "myopic";
  }
  return "unknown";
}

std::string to_string(Action action) {
  switch (action) {
    case Action::Comply: return "COMPLY";
    case Action::Cheat: return "CHEAT";
    case Action::Punished: return "PUNISHED";
    case Action::Abstain: return "ABSTAIN";
  }
  return "UNKNOWN";
}

PolicymakerType classify(const PolicymakerProfile& profile) {
  profile.validate();
  if (profile.beta <= kMyopicBetaThreshold) {
    return PolicymakerType::Myopic;
  }
  if (profile.committed) {
    // A binding pre-commitment restores effective beta to 1.
    return PolicymakerType::Resolute;
  }
  const bool beta_one = std::abs(profile.beta - 1.0) <= kClassifyTolerance;
  const bool hat_one = std::abs(profile.beta_hat - 1.0) <= kClassifyTolerance;
  if (beta_one && hat_one) {
    return PolicymakerType::Resolute;  // time-consistent without needing the device
  }
  if (hat_one) {
    return PolicymakerType::Naive;
  }
  if (std::abs(profile.beta_hat - profile.beta) <= kClassifyTolerance) {
    return PolicymakerType::Sophisticated;
  }
  return PolicymakerType::PartiallyNaive;
}

namespace {

void require_target_in_range(double target, const GameParams& params, const char* op) {
  const double pi_d = params.b_bar / params.a;
  if (!std::isfinite(target) || target < 0.0 || target > pi_d) {
    std::ostringstream os;
    os << op << ": target must be in [0, " << pi_d << "]";
    throw ValidationError(os.str());
  }
}

// Sum of delta^j over the punishment periods j = 1..P.
double delta_weight(double delta, int periods) {
  double weight = 0.0;
  double term = 1.0;
  for (int j = 1; j <= periods; ++j) {
    term *= delta;
    weight += term;
  }
  return weight;
}

}  // namespace

Decision decide(const PolicymakerProfile& profile, const GameParams& params, double target,
                DiscountBasis basis) {
  profile.validate();
  params.validate();
  require_target_in_range(target, params, "decide");

  double beta_used;
  if (classify(profile) == PolicymakerType::Myopic) {
    beta_used = 0.0;  // no weight on the future, regardless of basis
  } else {
    beta_used = basis == DiscountBasis::ActualBeta ? profile.beta : profile.beta_hat;
  }

  const double t_gain = temptation(target, params);
  const double differential = enforcement_differential(target, params);
  const double enforcement_side =
      beta_used * delta_weight(profile.delta, params.punishment_periods) * differential;
  const double cheat_side = t_gain - (profile.committed ? profile.sanction : 0.0);

  Decision d;
  d.margin = enforcement_side - cheat_side;
  d.action = d.margin >= 0.0 ? Action::Comply : Action::Cheat;
  return d;
}

bool detect_reversal(const PolicymakerProfile& profile, const GameParams& params,
                     double target) {
  const Decision planned = decide(profile, params, target, DiscountBasis::BelievedBeta);
  const Decision actual = decide(profile, params, target, DiscountBasis::ActualBeta);
  return planned.action == Action::Comply && actual.action == Action::Cheat;
}

Trajectory simulate(const PolicymakerProfile& profile, const GameParams& params,
                    const DiscountSpec& spec, double target, int horizon,
                    std::uint64_t seed) {
  profile.validate();
  params.validate();
  if (horizon < 1) {
    throw ValidationError("simulate: horizon must be >= 1");
  }
  require_target_in_range(target, params, "simulate");

  const double pi_d = params.b_bar / params.a;
  const ShockSpec shock = params.shock.value_or(ShockSpec::none());
  Rng rng(seed);

  const PolicymakerType type = classify(profile);
  const bool abstains =
      type == PolicymakerType::Sophisticated &&
      decide(profile, params, target, DiscountBasis::BelievedBeta).action == Action::Cheat;

  Trajectory traj;
  traj.periods.reserve(static_cast<std::size_t>(horizon));
  std::vector<double> losses;
  losses.reserve(static_cast<std::size_t>(horizon));

  int punish_left = 0;
  for (int t = 0; t < horizon; ++t) {
    const double b_t = shock.draw(rng, params.b_bar);
    PeriodRecord rec;
    rec.t = t;

    if (abstains) {
      rec.announced_target = pi_d;
      rec.expected_inflation = pi_d;
      rec.realized_inflation = pi_d;
      rec.action = Action::Abstain;
      rec.planned_action = Action::Abstain;
    } else if (punish_left > 0) {
      // Agents expect discretion until trust is restored.
      rec.announced_target = target;
      rec.expected_inflation = pi_d;
      rec.realized_inflation = pi_d;
      rec.action = Action::Punished;
      rec.planned_action = Action::Punished;
      --punish_left;
    } else {
      rec.announced_target = target;
      rec.expected_inflation = target;
      // The believed decision is recomputed every period: naifs mispredict
      // afresh each time.
      rec.planned_action =
          decide(profile, params, target, DiscountBasis::BelievedBeta).action;
      rec.action = decide(profile, params, target, DiscountBasis::ActualBeta).action;
      rec.reversal = rec.planned_action == Action::Comply && rec.action == Action::Cheat;
      if (rec.action == Action::Cheat) {
        rec.realized_inflation = pi_d;
        punish_left = params.punishment_periods;
      } else {
        rec.realized_inflation = target;
      }
    }

    rec.period_loss = loss(rec.realized_inflation, rec.expected_inflation, params, b_t);
    losses.push_back(rec.period_loss);
    if (rec.action == Action::Cheat) ++traj.summary.cheat_count;
    if (rec.reversal) ++traj.summary.reversal_count;
    traj.periods.push_back(rec);
  }

  const PayoffStream stream(losses);
  traj.summary.total_discounted_loss_actual_beta =
      present_value(stream, DiscountSpec::quasi_hyperbolic(profile.beta, profile.delta));
  traj.summary.total_discounted_loss_spec = present_value(stream, spec);
  return traj;
}

double one_shot_deviation_value(const GameParams& params, const DiscountSpec& spec,
                                double target) {
  params.validate();
  require_target_in_range(target, params, "one_shot_deviation_value");

  const double pi_d = params.b_bar / params.a;
  const double b = params.b_bar;
  const int punishment = params.punishment_periods;
  const int horizon = punishment + 2;

  std::vector<double> comply_losses;
  std::vector<double> cheat_losses;
  comply_losses.reserve(static_cast<std::size_t>(horizon));
  cheat_losses.reserve(static_cast<std::size_t>(horizon));

  for (int t = 0; t < horizon; ++t) {
    comply_losses.push_back(loss(target, target, params, b));
    if (t == 0) {
      cheat_losses.push_back(loss(pi_d, target, params, b));
    } else if (t <= punishment) {
      cheat_losses.push_back(loss(pi_d, pi_d, params, b));
    } else {
      cheat_losses.push_back(loss(target, target, params, b));
    }
  }

  const double pv_comply = present_value(PayoffStream(comply_losses), spec);
  const double pv_cheat = present_value(PayoffStream(cheat_losses), spec);
  return pv_comply - pv_cheat;
}

}  // namespace pgl
