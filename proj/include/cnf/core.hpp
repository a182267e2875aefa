#pragma once

#include <string>

namespace cnf {

// Below this margin on |lambda - cos(theta0)| the conserved sectorial
// constant is treated as zero and the motion degenerates to a straight
// line; the conic parametrizations would divide by (almost) zero there.
inline constexpr double kLineTolerance = 1e-12;

/// Qualitative regime of a constant-normal-force track.
enum class CaseKind {
  Case1,        ///< lambda > 1, bottom-anchored periodic loops, theta in (-pi, pi)
  Case2,        ///< lambda > 1, top-anchored periodic loops, theta in (0, 2pi)
  Case3,        ///< lambda = 1, single unbounded loop, theta in (0, 2pi)
  Case4,        ///< 0 <= lambda < 1, bottom-anchored valley, |theta| < acos(lambda)
  Case5,        ///< 0 <= lambda < 1, top-anchored arc, theta in (acos, 2pi - acos)
  StraightLine, ///< lambda = cos(theta0): zero sectorial constant
};

/// Load factor lambda = N/(m g) and launch direction theta0 (radians).
struct TrackParams {
  double lambda = 0.0;
  double theta0 = 0.0; // normalized to [0, 2pi)
};

/// A regime together with the open angular interval the velocity
/// direction sweeps. For the straight line the direction never changes,
/// so theta_min == theta_max == theta0.
struct CaseClass {
  CaseKind kind = CaseKind::StraightLine;
  double theta_min = 0.0;
  double theta_max = 0.0;
};

/// Conserved quantities of the dimensionless motion.
struct ConservedPair {
  double l_ang = 0.0;  ///< sectorial constant r^2 theta' = r (lambda - cos theta)
  double energy = 0.0; ///< r^2/2 + y; zero for every canonical trace
};

/// One trajectory point, everything dimensionless. `param` is the case's
/// anomaly variable (psi, theta, omega, chi, eta) or time for the line.
struct TrackSample {
  double param = 0.0;
  double t = 0.0;
  double s = 0.0;
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double r = 0.0; ///< speed; also the hodograph polar radius
  double vx = 0.0;
  double vy = 0.0;
};

/// Conversion factors between dimensionless and SI quantities.
struct PhysicalScale {
  double v0 = 20.0; ///< m/s, speed at the reference point where r = 1
  double g = 9.81;  ///< m/s^2
};

/// Validates lambda >= 0, normalizes theta0 into [0, 2pi).
/// Throws std::invalid_argument for negative or non-finite input.
TrackParams make_params(double lambda, double theta0);

/// Maps parameters onto their unique regime. The straight-line condition
/// |lambda - cos theta0| < kLineTolerance takes precedence; otherwise
/// theta0 must be exactly 0 or pi (the anchored regimes), anything else
/// throws std::invalid_argument.
CaseClass classify(const TrackParams& params);

/// Sectorial constant lambda - cos(theta0) (evaluated at r = 1) and the
/// total energy, which is zero by the choice of reference state.
ConservedPair conserved(const TrackParams& params);

/// Dimensionless speed r(theta) = (lambda - cos theta0)/(lambda - cos theta).
/// Throws std::domain_error when the denominator vanishes or the quotient
/// is not positive (theta outside the reachable range), and
/// std::invalid_argument for straight-line parameters, whose hodograph is
/// a ray through the origin rather than a graph over theta.
double hodograph_radius(double theta, const TrackParams& params);

/// Scales a dimensionless sample to SI: positions and arc length by
/// v0^2/g, time by v0/g, speeds by v0. Angles and `param` are unchanged.
TrackSample to_physical(const TrackSample& sample, const PhysicalScale& scale);

/// Inverse of to_physical.
TrackSample to_dimensionless(const TrackSample& sample, const PhysicalScale& scale);

/// True when the regime's lambda predicate admits this value
/// (e.g. Case1 needs lambda > 1, Case4 needs lambda < 1).
bool kind_admits(CaseKind kind, double lambda);

/// Launch angle the regime is anchored at: 0 for the bottom-anchored
/// cases, pi for the top-anchored ones, acos(lambda) for the line.
double canonical_theta0(CaseKind kind, double lambda);

/// Stable display name: "Case1" .. "Case5", "StraightLine".
std::string case_name(CaseKind kind);

/// Inverse of case_name; also accepts "1".."5" and "line".
/// Throws std::invalid_argument for anything else.
CaseKind parse_case(const std::string& text);

} // namespace cnf
