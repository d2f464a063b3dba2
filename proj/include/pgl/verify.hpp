#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pgl {

struct CheckResult {
  std::string name;
  int passed = 0;
  int failed = 0;

  bool ok() const { return failed == 0 && passed > 0; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  int total_passed() const;
  int total_failed() const;
};

/// Cross-checks the closed-form results against independent oracles built
/// from first principles: deterministic grids plus `trials` random parameter
/// tuples per randomized check, drawn from the seeded stream.
VerifyReport run_verify(int trials, std::uint64_t seed);

}  // namespace pgl
