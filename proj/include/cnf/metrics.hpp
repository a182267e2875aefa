#pragma once

#include "cnf/core.hpp"

namespace cnf {

/// Ride metrics of one period of the bottom-anchored loop (lambda > 1),
/// in SI units.
struct LoopMetrics {
  double period = 0.0;       ///< seconds
  double track_length = 0.0; ///< meters of track per period
  double width = 0.0;        ///< meters, horizontal advance per period
  double height = 0.0;       ///< meters, bottom-to-top rise
  double top_speed = 0.0;    ///< m/s at the loop top; always below v0
};

/// Closed-form loop metrics:
///   period       = (v0/g)   2 lambda pi / (sqrt(lambda^2-1) (lambda+1))
///   track_length = (v0^2/g) (2 lambda^2+1) pi / (sqrt(lambda^2-1) (lambda+1)^2)
///   width        = (v0^2/g) 3 lambda pi / (sqrt(lambda^2-1) (lambda+1)^2)
///   height       = (v0^2/g) 2 lambda / (lambda+1)^2
///   top_speed    = v0 (lambda-1)/(lambda+1)
/// Throws std::domain_error for lambda <= 1 (no closed loop: the track
/// is unbounded and the period diverges) and std::invalid_argument for a
/// bad scale.
LoopMetrics loop_metrics(double lambda, const PhysicalScale& scale);

} // namespace cnf
