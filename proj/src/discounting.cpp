#include "pgl/discounting.hpp"

#include <cmath>
#include <sstream>

namespace pgl {

std::string to_string(DiscountKind kind) {
  switch (kind) {
    case DiscountKind::Exponential: return "exponential";
    case DiscountKind::QuasiHyperbolic: return "quasiHyperbolic";
    case DiscountKind::GeneralizedHyperbolic: return "generalizedHyperbolic";
  }
  return "unknown";
}

namespace {
void require_finite(double x, const char* field) {
  if (!std::isfinite(x)) {
    throw ValidationError(std::string("DiscountSpec: ") + field + " must be finite");
  }
}
}  // namespace

DiscountSpec DiscountSpec::exponential(double r) {
  require_finite(r, "r");
  if (r <= -1.0) {
    throw ValidationError("DiscountSpec: r must be > -1");
  }
  DiscountSpec s;
  s.kind_ = DiscountKind::Exponential;
  s.r_ = r;
  s.q_ = 1.0 / (1.0 + r);
  return s;
}

DiscountSpec DiscountSpec::exponential_from_factor(double q) {
  require_finite(q, "q");
  if (q <= 0.0) {
    throw ValidationError("DiscountSpec: q must be > 0");
  }
  DiscountSpec s;
  s.kind_ = DiscountKind::Exponential;
  s.r_ = 1.0 / q - 1.0;
  s.q_ = q;
  return s;
}

DiscountSpec DiscountSpec::quasi_hyperbolic(double beta, double delta) {
  require_finite(beta, "beta");
  require_finite(delta, "delta");
  if (beta <= 0.0 || beta > 1.0) {
    throw ValidationError("DiscountSpec: beta must be in (0, 1]");
  }
  if (delta <= 0.0 || delta >= 1.0) {
    throw ValidationError("DiscountSpec: delta must be in (0, 1)");
  }
  DiscountSpec s;
  s.kind_ = DiscountKind::QuasiHyperbolic;
  s.beta_ = beta;
  s.delta_ = delta;
  return s;
}

DiscountSpec DiscountSpec::generalized_hyperbolic(double k) {
  require_finite(k, "k");
  if (k <= 0.0) {
    throw ValidationError("DiscountSpec: k must be > 0");
  }
  DiscountSpec s;
  s.kind_ = DiscountKind::GeneralizedHyperbolic;
  s.k_ = k;
  return s;
}

namespace {
[[noreturn]] void wrong_kind(const char* accessor, DiscountKind kind) {
  throw ValidationError(std::string("DiscountSpec::") + accessor +
                        " not defined for kind " + to_string(kind));
}
}  // namespace

double DiscountSpec::rate() const {
  if (kind_ != DiscountKind::Exponential) wrong_kind("rate", kind_);
  return r_;
}

double DiscountSpec::factor() const {
  if (kind_ != DiscountKind::Exponential) wrong_kind("factor", kind_);
  return q_;
}

double DiscountSpec::beta() const {
  if (kind_ != DiscountKind::QuasiHyperbolic) wrong_kind("beta", kind_);
  return beta_;
}

double DiscountSpec::delta() const {
  if (kind_ != DiscountKind::QuasiHyperbolic) wrong_kind("delta", kind_);
  return delta_;
}

double DiscountSpec::curvature() const {
  if (kind_ != DiscountKind::GeneralizedHyperbolic) wrong_kind("curvature", kind_);
  return k_;
}

std::string DiscountSpec::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case DiscountKind::Exponential:
      os << "exponential(r=" << r_ << ", q=" << q_ << ")";
      break;
    case DiscountKind::QuasiHyperbolic:
      os << "quasiHyperbolic(beta=" << beta_ << ", delta=" << delta_ << ")";
      break;
    case DiscountKind::GeneralizedHyperbolic:
      os << "generalizedHyperbolic(k=" << k_ << ")";
      break;
  }
  return os.str();
}

PayoffStream::PayoffStream(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw ValidationError("PayoffStream: values must have length >= 1");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw ValidationError("PayoffStream: values must all be finite");
    }
  }
}

double eval_discount(const DiscountSpec& spec, long long t) {
  if (t < 0) {
    throw ValidationError("eval_discount: t must be >= 0");
  }
  if (t == 0) {
    return 1.0;
  }
  switch (spec.kind()) {
    case DiscountKind::Exponential:
      return std::pow(spec.factor(), static_cast<double>(t));
    case DiscountKind::QuasiHyperbolic:
      return spec.beta() * std::pow(spec.delta(), static_cast<double>(t));
    case DiscountKind::GeneralizedHyperbolic:
      return 1.0 / (1.0 + spec.curvature() * static_cast<double>(t));
  }
  throw ValidationError("eval_discount: unknown discount kind");
}

double present_value(const PayoffStream& stream, const DiscountSpec& spec) {
  double sum = 0.0;
  for (std::size_t t = 0; t < stream.size(); ++t) {
    sum += stream[t] * eval_discount(spec, static_cast<long long>(t));
  }
  return sum;
}

}  // namespace pgl
