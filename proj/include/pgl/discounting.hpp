#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pgl/errors.hpp"

namespace pgl {

enum class DiscountKind { Exponential, QuasiHyperbolic, GeneralizedHyperbolic };

std::string to_string(DiscountKind kind);

/// A discount function and its parameters.
///
/// Exponential:           D(t) = (1/(1+r))^t                with r > -1
/// QuasiHyperbolic:       D(0) = 1, D(t) = beta * delta^t   with 0 < beta <= 1, 0 < delta < 1
/// GeneralizedHyperbolic: D(t) = 1/(1 + k*t)                with k > 0
///
/// Construct through the factories; they validate and throw ValidationError
/// naming the offending field.
class DiscountSpec {
 public:
  static DiscountSpec exponential(double r);
  // Same curve, parameterized by the per-period factor q = 1/(1+r).
  // The factor is stored exactly, so exponential_from_factor(d) and a
  // quasi-hyperbolic spec with beta = 1 and delta = d discount identically.
  static DiscountSpec exponential_from_factor(double q);
  static DiscountSpec quasi_hyperbolic(double beta, double delta);
  static DiscountSpec generalized_hyperbolic(double k);

  DiscountKind kind() const { return kind_; }
  double rate() const;        // Exponential only
  double factor() const;      // Exponential only: q = 1/(1+r)
  double beta() const;        // QuasiHyperbolic only
  double delta() const;       // QuasiHyperbolic only
  double curvature() const;   // GeneralizedHyperbolic only: k

  std::string describe() const;

 private:
  DiscountSpec() = default;
  DiscountKind kind_ = DiscountKind::Exponential;
  double r_ = 0.0;
  double q_ = 1.0;
  double beta_ = 1.0;
  double delta_ = 1.0;
  double k_ = 0.0;
};

/// Finite stream of per-period payoffs indexed t = 0, 1, ..., T-1.
/// Length >= 1, all entries finite.
class PayoffStream {
 public:
  explicit PayoffStream(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t t) const { return values_[t]; }

 private:
  std::vector<double> values_;
};

/// D(t) for t = 0, 1, 2, ...  Always 1 at t = 0.
double eval_discount(const DiscountSpec& spec, long long t);

/// Sum_t stream[t] * D(t).
double present_value(const PayoffStream& stream, const DiscountSpec& spec);

}  // namespace pgl
