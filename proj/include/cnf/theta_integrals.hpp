#pragma once

#include <span>
#include <vector>

#include "cnf/core.hpp"

namespace cnf {

// Closed-form antiderivatives, per regime, of the three kernels that
// build time, arc length and abscissa out of the velocity angle:
//
//   t_raw : integral of           1/(lambda - cos u)^2  du
//   s_raw : integral of           1/(lambda - cos u)^3  du
//   x_raw : integral of     cos u / (lambda - cos u)^3  du
//
// all taken from the regime's launch angle (0 or pi) to theta, WITHOUT
// the sectorial prefactors (lambda - cos theta0)^k. assemble_theta_trace
// applies those prefactors and packages full samples.
//
// Valid theta ranges: case 1 is [-pi, pi] and case 2 is [0, 2pi] (their
// endpoint singularities are removable and evaluated by continuity);
// case 3 is the open (0, 2pi); cases 4 and 5 are the open intervals
// bounded by acos(lambda), where the integrals genuinely diverge.

/// Definite integral of 1/(lambda - cos u)^2 from the case anchor to theta.
/// Throws std::invalid_argument when (case_index, lambda) violate the
/// regime predicate and std::domain_error when theta is out of range.
double t_raw(int case_index, double theta, double lambda);

/// Definite integral of 1/(lambda - cos u)^3, same conventions as t_raw.
double s_raw(int case_index, double theta, double lambda);

/// Definite integral of cos u/(lambda - cos u)^3, same conventions as t_raw.
double x_raw(int case_index, double theta, double lambda);

/// Height y(theta) = -r(theta)^2/2 with r from hodograph_radius; shares
/// its error behavior.
double y_of_theta(double theta, const TrackParams& params);

/// Full samples on a strictly increasing theta grid: applies the
/// (lambda - cos theta0) prefactor to t_raw and its square to s_raw and
/// x_raw, and fills position, speed and velocity. `param` is theta.
/// The grid must lie inside the regime's theta range.
std::vector<TrackSample> assemble_theta_trace(const CaseClass& cls,
                                              const TrackParams& params,
                                              std::span<const double> thetas);

} // namespace cnf
