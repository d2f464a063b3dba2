#include "pgl/rng.hpp"

#include <cmath>

namespace pgl {

double Rng::logistic(double mean, double scale) {
  const double u = uniform01();
  return mean + scale * std::log(u / (1.0 - u));
}

}  // namespace pgl
