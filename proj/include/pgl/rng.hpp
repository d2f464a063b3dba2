#pragma once

#include <cstdint>
#include <random>

namespace pgl {

/// Seeded generator for reproducible draws.
///
/// Built on mt19937_64, whose output sequence is pinned by the standard, with
/// hand-rolled value transforms so that a given seed yields the same doubles
/// on every platform. Batch runs derive per-run streams as seed + run index.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng for_run(std::uint64_t master_seed, std::uint64_t run_index) {
    return Rng(master_seed + run_index);
  }

  /// Uniform on (0, 1), strictly open at both ends.
  double uniform01() {
    const std::uint64_t bits = engine_() >> 11;  // top 53 bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  /// Logistic via inverse CDF.
  double logistic(double mean, double scale);

 private:
  std::mt19937_64 engine_;
};

}  // namespace pgl
