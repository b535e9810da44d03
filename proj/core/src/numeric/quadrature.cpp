#include "kerrsim/numeric/quadrature.hpp"

#include <cstdio>

namespace kerrsim::numeric {

std::string describe(const QuadratureResult& result) {
  char buf[192];
  std::snprintf(buf, sizeof buf, "value=%.12g error_estimate=%.3g evaluations=%zu deepest_level=%d converged=%s",
                result.value, result.error_estimate, result.evaluations, result.deepest_level,
                result.converged ? "yes" : "no");
  return buf;
}

}  // namespace kerrsim::numeric
