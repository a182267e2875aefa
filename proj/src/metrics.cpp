#include "cnf/metrics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cnf {

LoopMetrics loop_metrics(double lambda, const PhysicalScale& scale) {
  if (!(scale.v0 > 0.0) || !(scale.g > 0.0)) {
    throw std::invalid_argument("physical scale requires v0 > 0 and g > 0");
  }
  if (!std::isfinite(lambda) || !(lambda > 1.0)) {
    throw std::domain_error("loop metrics need lambda > 1: otherwise the "
                            "track is unbounded and has no period");
  }
  constexpr double pi = std::numbers::pi;
  const double root = std::sqrt(lambda * lambda - 1.0);
  const double lp1 = lambda + 1.0;
  const double time_unit = scale.v0 / scale.g;
  const double length_unit = scale.v0 * scale.v0 / scale.g;
  LoopMetrics m;
  m.period = time_unit * 2.0 * lambda * pi / (root * lp1);
  m.track_length = length_unit * (2.0 * lambda * lambda + 1.0) * pi / (root * lp1 * lp1);
  m.width = length_unit * 3.0 * lambda * pi / (root * lp1 * lp1);
  m.height = length_unit * 2.0 * lambda / (lp1 * lp1);
  m.top_speed = scale.v0 * (lambda - 1.0) / lp1;
  return m;
}

} // namespace cnf
