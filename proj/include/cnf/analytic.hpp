#pragma once

#include <vector>

#include "cnf/core.hpp"

namespace cnf {

/// Sampling request in a case's natural parameter: the anomaly variable
/// psi/omega/chi/eta, theta itself for Case2, or time for the line.
struct AnomalyRange {
  double lo = 0.0;
  double hi = 0.0;
  int n = 2; ///< sample count, at least 2
};

/// Closed-form trajectory point: time, arc length, position.
struct PathPoint {
  double t = 0.0;
  double s = 0.0;
  double x = 0.0;
  double y = 0.0;
};

/// Straight-line point at a given time.
struct LinePoint {
  double s = 0.0;
  double x = 0.0;
  double y = 0.0;
};

/// Maps the velocity angle to the case's anomaly variable. Strictly
/// increasing in theta for every regime (including Case5, whose leading
/// minus sign makes eta grow as theta does). Case2's natural parameter
/// is theta itself, so the map is the identity there.
/// Throws std::domain_error outside the case's theta range and
/// std::invalid_argument for the straight line, which has no anomaly.
double anomaly_of_theta(CaseKind kind, double theta, const TrackParams& params);

/// Inverse of anomaly_of_theta. For Case1 the anomaly may lie beyond
/// (-pi, pi]; it unwraps branch-consistently, theta and psi sharing the
/// same 2pi period.
double theta_of_anomaly(CaseKind kind, double anomaly, const TrackParams& params);

/// Eccentric-anomaly closed forms for the looping regime lambda > 1.
/// t and s increase strictly with psi; psi may be any real.
PathPoint eval_case1(double psi, double lambda);

/// Polynomial closed forms for lambda = 1 in the parameter
/// omega = -cot(theta/2); omega may be any real.
PathPoint eval_case3(double omega);

/// Hyperbolic-anomaly closed forms for 0 <= lambda < 1, bottom anchor.
/// Note the traversal direction: t and s DECREASE as chi increases, the
/// parametrization runs backwards in time relative to chi.
PathPoint eval_case4(double chi, double lambda);

/// Hyperbolic-anomaly closed forms for 0 <= lambda < 1, top anchor.
/// t and s increase with eta.
PathPoint eval_case5(double eta, double lambda);

/// Straight line through (0, -1/2) with direction theta0: decelerating
/// (or accelerating) uniform-slope coasting with speed r = 1 - sin(theta0) t.
/// Throws std::domain_error when r <= 0 (the particle has stopped) and
/// std::invalid_argument when params are not a straight-line pair.
LinePoint eval_line(double t, const TrackParams& params);

/// One full sample at parameter value p (see AnomalyRange for meaning).
TrackSample sample_at(const CaseClass& cls, const TrackParams& params, double p);

/// range.n samples uniform in the parameter over [lo, hi], ordered by
/// increasing parameter; the last grid point is exactly range.hi.
/// t and s are strictly monotone along the result (increasing for every
/// regime except Case4, where they decrease; see eval_case4).
/// Throws std::invalid_argument for case/params mismatch, n < 2 or
/// lo >= hi, and std::domain_error for parameter values the regime does
/// not admit (Case2 theta outside [0, 2pi], stopped line).
std::vector<TrackSample> trace(const CaseClass& cls, const TrackParams& params,
                               const AnomalyRange& range);

/// Canonical sampling window: one full period [0, 2pi] for the looping
/// regimes (Case1, Case2), [-3, 3] for the unbounded ones, and for the
/// line a time span keeping the speed safely positive.
AnomalyRange default_range(const CaseClass& cls, const TrackParams& params, int n);

} // namespace cnf
