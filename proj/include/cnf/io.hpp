#pragma once

#include <span>
#include <string>
#include <vector>

#include "cnf/analytic.hpp"
#include "cnf/core.hpp"
#include "cnf/metrics.hpp"
#include "cnf/oracle.hpp"

namespace cnf {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

/// Parses a radian value: either a plain decimal number or a pi-literal
/// of the form [sign][N]pi[/D] ("pi", "-pi/2", "3pi/2", "2pi"), evaluated
/// as N*pi/D in double precision so the usual anchors are exact.
/// Throws std::invalid_argument on anything else.
double parse_angle(const std::string& text);

/// CSV with the exact header `param,t,s,x,y,theta,r,vx,vy`, one row per
/// sample, shortest round-trip numbers, LF line endings.
std::string trace_csv(std::span<const TrackSample> samples);

/// JSON document: a `params` echo (case, lambda, theta0, lo, hi, samples)
/// plus a `samples` array of 9-field records in CSV column order.
std::string trace_json(std::span<const TrackSample> samples,
                       const TrackParams& params, const CaseClass& cls,
                       const AnomalyRange& range);

/// JSON object with keys exactly `lambda, v0, g, T, L, W, H, v_top`
/// (L is the track length per period).
std::string metrics_json(double lambda, const PhysicalScale& scale,
                         const LoopMetrics& metrics);

/// JSON object `{lambda, theta0, case, theta_range}`.
std::string classify_json(const TrackParams& params, const CaseClass& cls);

/// The verification report as JSON, field names as in VerificationReport.
std::string report_json(const VerificationReport& report);

/// One plotted curve: track coordinates in meters, y pointing up.
struct Polyline {
  double lambda = 0.0; ///< legend label
  std::vector<double> xs;
  std::vector<double> ys;
};

/// Standalone SVG 1.1 document: one polyline per curve at equal aspect
/// ratio (1 user unit = 1 meter, y flipped into screen orientation), a
/// color legend naming each lambda, deterministic byte output.
std::string plot_svg(std::span<const Polyline> curves);

} // namespace cnf
