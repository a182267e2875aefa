#include "cnf/core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cnf {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

TrackParams make_params(double lambda, double theta0) {
  if (!std::isfinite(lambda) || !std::isfinite(theta0)) {
    throw std::invalid_argument("track parameters must be finite");
  }
  if (lambda < 0.0) {
    throw std::invalid_argument("load factor lambda must be non-negative");
  }
  double th = std::fmod(theta0, kTwoPi);
  if (th < 0.0) th += kTwoPi;
  return TrackParams{lambda, th};
}

CaseClass classify(const TrackParams& params) {
  const double lambda = params.lambda;
  const double theta0 = params.theta0;
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw std::invalid_argument("load factor lambda must be non-negative");
  }
  if (std::abs(lambda - std::cos(theta0)) < kLineTolerance) {
    return CaseClass{CaseKind::StraightLine, theta0, theta0};
  }
  if (theta0 == 0.0) {
    if (lambda > 1.0) return CaseClass{CaseKind::Case1, -kPi, kPi};
    // lambda == 1 with theta0 == 0 already matched the line above.
    const double a = std::acos(lambda);
    return CaseClass{CaseKind::Case4, -a, a};
  }
  if (theta0 == kPi) {
    if (lambda > 1.0) return CaseClass{CaseKind::Case2, 0.0, kTwoPi};
    if (lambda == 1.0) return CaseClass{CaseKind::Case3, 0.0, kTwoPi};
    const double a = std::acos(lambda);
    return CaseClass{CaseKind::Case5, a, kTwoPi - a};
  }
  throw std::invalid_argument(
      "launch angle must be 0 or pi unless lambda = cos(theta0)");
}

ConservedPair conserved(const TrackParams& params) {
  return ConservedPair{params.lambda - std::cos(params.theta0), 0.0};
}

double hodograph_radius(double theta, const TrackParams& params) {
  const double num = params.lambda - std::cos(params.theta0);
  if (std::abs(num) < kLineTolerance) {
    throw std::invalid_argument(
        "hodograph radius is undefined for straight-line parameters");
  }
  const double den = params.lambda - std::cos(theta);
  if (den == 0.0) {
    throw std::domain_error("speed diverges where lambda = cos(theta)");
  }
  const double r = num / den;
  if (!(r > 0.0)) {
    throw std::domain_error("theta outside the reachable angular range");
  }
  return r;
}

namespace {

void check_scale(const PhysicalScale& scale) {
  if (!(scale.v0 > 0.0) || !(scale.g > 0.0)) {
    throw std::invalid_argument("physical scale requires v0 > 0 and g > 0");
  }
}

} // namespace

TrackSample to_physical(const TrackSample& sample, const PhysicalScale& scale) {
  check_scale(scale);
  const double len = scale.v0 * scale.v0 / scale.g;
  const double tim = scale.v0 / scale.g;
  TrackSample out = sample;
  out.t = sample.t * tim;
  out.s = sample.s * len;
  out.x = sample.x * len;
  out.y = sample.y * len;
  out.r = sample.r * scale.v0;
  out.vx = sample.vx * scale.v0;
  out.vy = sample.vy * scale.v0;
  return out;
}

TrackSample to_dimensionless(const TrackSample& sample, const PhysicalScale& scale) {
  check_scale(scale);
  const double len = scale.v0 * scale.v0 / scale.g;
  const double tim = scale.v0 / scale.g;
  TrackSample out = sample;
  out.t = sample.t / tim;
  out.s = sample.s / len;
  out.x = sample.x / len;
  out.y = sample.y / len;
  out.r = sample.r / scale.v0;
  out.vx = sample.vx / scale.v0;
  out.vy = sample.vy / scale.v0;
  return out;
}

bool kind_admits(CaseKind kind, double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0) return false;
  switch (kind) {
    case CaseKind::Case1:
    case CaseKind::Case2:
      return lambda > 1.0;
    case CaseKind::Case3:
      return lambda == 1.0;
    case CaseKind::Case4:
    case CaseKind::Case5:
      return lambda < 1.0;
    case CaseKind::StraightLine:
      return lambda <= 1.0; // needs cos(theta0) = lambda for some theta0
  }
  return false;
}

double canonical_theta0(CaseKind kind, double lambda) {
  switch (kind) {
    case CaseKind::Case1:
    case CaseKind::Case4:
      return 0.0;
    case CaseKind::Case2:
    case CaseKind::Case3:
    case CaseKind::Case5:
      return kPi;
    case CaseKind::StraightLine:
      if (lambda < 0.0 || lambda > 1.0) {
        throw std::invalid_argument("a straight line needs lambda in [0, 1]");
      }
      return std::acos(lambda);
  }
  throw std::invalid_argument("unknown case kind");
}

std::string case_name(CaseKind kind) {
  switch (kind) {
    case CaseKind::Case1: return "Case1";
    case CaseKind::Case2: return "Case2";
    case CaseKind::Case3: return "Case3";
    case CaseKind::Case4: return "Case4";
    case CaseKind::Case5: return "Case5";
    case CaseKind::StraightLine: return "StraightLine";
  }
  throw std::invalid_argument("unknown case kind");
}

CaseKind parse_case(const std::string& text) {
  if (text == "1" || text == "Case1" || text == "case1") return CaseKind::Case1;
  if (text == "2" || text == "Case2" || text == "case2") return CaseKind::Case2;
  if (text == "3" || text == "Case3" || text == "case3") return CaseKind::Case3;
  if (text == "4" || text == "Case4" || text == "case4") return CaseKind::Case4;
  if (text == "5" || text == "Case5" || text == "case5") return CaseKind::Case5;
  if (text == "line" || text == "Line" || text == "StraightLine") {
    return CaseKind::StraightLine;
  }
  throw std::invalid_argument("unknown case: " + text);
}

} // namespace cnf
