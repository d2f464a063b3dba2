#pragma once

#include <cmath>
#include <functional>
#include <vector>

// Test-side oracles. Everything here evaluates the model with its own
// arithmetic, so library results can be checked against an independent
// route: multiply loops instead of pow, direct summation instead of
// present_value, grid search instead of closed forms, and a separate
// bisection for the enforceable boundary.
namespace oracles {

inline double period_loss(double a, double b_t, double pi, double pi_e) {
  return 0.5 * a * pi * pi - b_t * (pi - pi_e);
}

inline double pow_loop(double base, long long t) {
  double out = 1.0;
  for (long long i = 0; i < t; ++i) out *= base;
  return out;
}

inline double qh_weight(double beta, double delta, long long t) {
  return t == 0 ? 1.0 : beta * pow_loop(delta, t);
}

inline double sum_weighted(const std::vector<double>& values,
                           const std::function<double(long long)>& weight) {
  double total = 0.0;
  for (std::size_t t = 0; t < values.size(); ++t) {
    total += values[t] * weight(static_cast<long long>(t));
  }
  return total;
}

// Largest one-period gain from deviating when agents expect `target`,
// found by scanning deviations on a regular grid.
inline double best_deviation_gain(double a, double b_bar, double target,
                                  double lo, double hi, double step) {
  const double stay = period_loss(a, b_bar, target, target);
  const long long n = static_cast<long long>((hi - lo) / step);
  double best = 0.0;
  for (long long i = 0; i <= n; ++i) {
    const double pi = lo + static_cast<double>(i) * step;
    const double gain = stay - period_loss(a, b_bar, pi, target);
    if (gain > best) best = gain;
  }
  return best;
}

// Grid-search argmin of the per-period loss at fixed expectations.
inline double best_deviation_point(double a, double b_bar, double target,
                                   double lo, double hi, double step) {
  const long long n = static_cast<long long>((hi - lo) / step);
  double best_pi = lo;
  double best = period_loss(a, b_bar, lo, target);
  for (long long i = 1; i <= n; ++i) {
    const double pi = lo + static_cast<double>(i) * step;
    const double value = period_loss(a, b_bar, pi, target);
    if (value < best) {
      best = value;
      best_pi = pi;
    }
  }
  return best_pi;
}

// Loss at discretion minus loss under the rule, one punishment period.
inline double punishment_differential(double a, double b_bar, double target) {
  const double pi_d = b_bar / a;
  return period_loss(a, b_bar, pi_d, pi_d) - period_loss(a, b_bar, target, target);
}

inline double cheat_gain(double a, double b_bar, double target) {
  const double gap = a * target - b_bar;
  return gap * gap / (2.0 * a);
}

// Smallest enforceable target: bisection on
// g(pi) = cheat gain - weight * punishment differential, which is positive
// below the boundary and <= 0 at and above it.
inline double enforceable_boundary(double a, double b_bar, double weight) {
  auto g = [&](double pi) {
    const double gap = a * pi - b_bar;
    const double differential =
        b_bar * b_bar / (2.0 * a) - 0.5 * a * pi * pi;
    return gap * gap / (2.0 * a) - weight * differential;
  };
  double lo = 0.0;
  double hi = b_bar / a;
  if (g(lo) <= 0.0) return 0.0;
  for (int i = 0; i < 400; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (g(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

// Two explicit loss streams over punishment + 2 periods: comply forever vs
// cheat once, sit through the punishment, then comply again. Positive
// difference means cheating pays.
inline double deviation_value_sim(double a, double b_bar,
                                  const std::function<double(long long)>& weight,
                                  double target, int punishment_periods) {
  const double pi_d = b_bar / a;
  const int horizon = punishment_periods + 2;
  std::vector<double> comply;
  std::vector<double> cheat;
  for (int t = 0; t < horizon; ++t) {
    comply.push_back(period_loss(a, b_bar, target, target));
  }
  cheat.push_back(period_loss(a, b_bar, pi_d, target));
  for (int t = 0; t < punishment_periods; ++t) {
    cheat.push_back(period_loss(a, b_bar, pi_d, pi_d));
  }
  cheat.push_back(period_loss(a, b_bar, target, target));
  return sum_weighted(comply, weight) - sum_weighted(cheat, weight);
}

// Damped expectation updating run until the iterate stops moving. The best
// response to any expectation is b_bar/a, so this is the discretionary rate.
inline double fixed_point_expectation(double a, double b_bar) {
  const double br = b_bar / a;
  double x = 0.0;
  for (int i = 0; i < 500; ++i) {
    const double next = x + 0.5 * (br - x);
    if (next == x) break;
    x = next;
  }
  return x;
}

}  // namespace oracles
