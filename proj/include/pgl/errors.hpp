#pragma once

#include <stdexcept>
#include <string>

namespace pgl {

// Parameter/domain violations. The CLI maps these to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Convergence failures, broken brackets, analytic/iterative disagreement.
// The CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable config, unwritable output. The CLI maps these to exit code 1.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pgl
