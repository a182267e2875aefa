#include "cnf/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cnf/theta_integrals.hpp"

namespace cnf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double square(double v) { return v * v; }

void require_elliptic(double lambda) {
  if (!std::isfinite(lambda) || !(lambda > 1.0)) {
    throw std::invalid_argument("this regime requires lambda > 1");
  }
}

void require_hyperbolic(double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0 || !(lambda < 1.0)) {
    throw std::invalid_argument("this regime requires 0 <= lambda < 1");
  }
}

} // namespace

double anomaly_of_theta(CaseKind kind, double theta, const TrackParams& params) {
  const double lambda = params.lambda;
  if (!std::isfinite(theta)) {
    throw std::domain_error("theta must be finite");
  }
  const double h = 0.5 * theta;
  switch (kind) {
    case CaseKind::Case1: {
      require_elliptic(lambda);
      if (theta < -kPi || theta > kPi) {
        throw std::domain_error("case 1 needs theta in [-pi, pi]");
      }
      const double k = std::sqrt((lambda + 1.0) / (lambda - 1.0));
      return 2.0 * std::atan2(k * std::sin(h), std::cos(h));
    }
    case CaseKind::Case2:
      require_elliptic(lambda);
      if (theta < 0.0 || theta > kTwoPi) {
        throw std::domain_error("case 2 needs theta in [0, 2pi]");
      }
      return theta;
    case CaseKind::Case3: {
      if (lambda != 1.0) throw std::invalid_argument("case 3 requires lambda = 1");
      if (theta <= 0.0 || theta >= kTwoPi) {
        throw std::domain_error("case 3 needs theta in (0, 2pi)");
      }
      return -std::cos(h) / std::sin(h);
    }
    case CaseKind::Case4: {
      require_hyperbolic(lambda);
      const double k = std::sqrt((1.0 + lambda) / (1.0 - lambda));
      const double arg = k * std::tan(h);
      if (std::abs(theta) >= std::acos(lambda) || !(std::abs(arg) < 1.0)) {
        throw std::domain_error("case 4 needs |theta| < acos(lambda)");
      }
      return 2.0 * std::atanh(arg);
    }
    case CaseKind::Case5: {
      require_hyperbolic(lambda);
      const double a = std::acos(lambda);
      const double k = std::sqrt((1.0 - lambda) / (1.0 + lambda));
      const double arg = k * (std::cos(h) / std::sin(h));
      if (theta <= a || theta >= kTwoPi - a || !(std::abs(arg) < 1.0)) {
        throw std::domain_error("case 5 needs theta in (acos, 2pi - acos)");
      }
      return -2.0 * std::atanh(arg);
    }
    case CaseKind::StraightLine:
      throw std::invalid_argument("the straight line has no anomaly variable");
  }
  throw std::invalid_argument("unknown case kind");
}

double theta_of_anomaly(CaseKind kind, double anomaly, const TrackParams& params) {
  const double lambda = params.lambda;
  if (!std::isfinite(anomaly)) {
    throw std::domain_error("anomaly must be finite");
  }
  switch (kind) {
    case CaseKind::Case1: {
      require_elliptic(lambda);
      // psi and theta share the 2pi period: unwrap to the principal
      // branch, invert there, then restore the branch index.
      const double k = std::floor((anomaly + kPi) / kTwoPi);
      const double wrapped = anomaly - kTwoPi * k;
      const double inv = std::sqrt((lambda - 1.0) / (lambda + 1.0));
      const double h = 0.5 * wrapped;
      return 2.0 * std::atan2(inv * std::sin(h), std::cos(h)) + kTwoPi * k;
    }
    case CaseKind::Case2:
      require_elliptic(lambda);
      if (anomaly < 0.0 || anomaly > kTwoPi) {
        throw std::domain_error("case 2 needs theta in [0, 2pi]");
      }
      return anomaly;
    case CaseKind::Case3:
      if (lambda != 1.0) throw std::invalid_argument("case 3 requires lambda = 1");
      return 2.0 * std::atan2(1.0, -anomaly);
    case CaseKind::Case4: {
      require_hyperbolic(lambda);
      const double k = std::sqrt((1.0 - lambda) / (1.0 + lambda));
      return 2.0 * std::atan(k * std::tanh(0.5 * anomaly));
    }
    case CaseKind::Case5: {
      require_hyperbolic(lambda);
      const double k = std::sqrt((1.0 - lambda) / (1.0 + lambda));
      return 2.0 * std::atan2(k, -std::tanh(0.5 * anomaly));
    }
    case CaseKind::StraightLine:
      throw std::invalid_argument("the straight line has no anomaly variable");
  }
  throw std::invalid_argument("unknown case kind");
}

PathPoint eval_case1(double psi, double lambda) {
  require_elliptic(lambda);
  const double q = lambda * lambda - 1.0;
  const double sq = std::sqrt(q);
  const double p1 = (lambda - 1.0) / (q * sq);
  const double p2 = square(lambda - 1.0) / (2.0 * q * q * sq);
  const double sn = std::sin(psi);
  const double cs = std::cos(psi);
  PathPoint out;
  out.t = p1 * (lambda * psi + sn);
  out.s = p2 * ((2.0 * lambda * lambda + 1.0) * psi + (4.0 * lambda + cs) * sn);
  out.x = p2 * (3.0 * lambda * psi + (2.0 * (lambda * lambda + 1.0) + lambda * cs) * sn);
  out.y = -0.5 * square((lambda + cs) / (lambda + 1.0));
  return out;
}

PathPoint eval_case3(double omega) {
  if (!std::isfinite(omega)) {
    throw std::domain_error("omega must be finite");
  }
  const double w2 = omega * omega;
  PathPoint out;
  out.t = (w2 + 3.0) * omega / 3.0;
  out.s = (3.0 * w2 * w2 + 10.0 * w2 + 15.0) * omega / 15.0;
  out.x = (w2 * w2 - 5.0) * omega / 5.0;
  out.y = -0.5 * square(w2 + 1.0);
  return out;
}

PathPoint eval_case4(double chi, double lambda) {
  require_hyperbolic(lambda);
  const double p = 1.0 - lambda * lambda;
  const double sp = std::sqrt(p);
  const double p1 = (lambda - 1.0) / (p * sp); // negative: chi runs against time
  const double p2 = square(lambda - 1.0) / (2.0 * p * p * sp);
  const double sh = std::sinh(chi);
  const double ch = std::cosh(chi);
  PathPoint out;
  out.t = p1 * (lambda * chi + sh);
  out.s = -p2 * ((2.0 * lambda * lambda + 1.0) * chi + (4.0 * lambda + ch) * sh);
  out.x = -p2 * (3.0 * lambda * chi + (2.0 * (lambda * lambda + 1.0) + lambda * ch) * sh);
  out.y = -0.5 * square((lambda + ch) / (1.0 + lambda));
  return out;
}

PathPoint eval_case5(double eta, double lambda) {
  require_hyperbolic(lambda);
  const double p = 1.0 - lambda * lambda;
  const double sp = std::sqrt(p);
  const double p1 = (lambda + 1.0) / (p * sp);
  const double p2 = square(lambda + 1.0) / (2.0 * p * p * sp);
  const double sh = std::sinh(eta);
  const double ch = std::cosh(eta);
  PathPoint out;
  out.t = p1 * (-lambda * eta + sh);
  out.s = p2 * ((2.0 * lambda * lambda + 1.0) * eta - (4.0 * lambda - ch) * sh);
  out.x = p2 * (3.0 * lambda * eta - (2.0 * (lambda * lambda + 1.0) - lambda * ch) * sh);
  out.y = -0.5 * square((ch - lambda) / (1.0 - lambda));
  return out;
}

LinePoint eval_line(double t, const TrackParams& params) {
  if (std::abs(params.lambda - std::cos(params.theta0)) >= kLineTolerance) {
    throw std::invalid_argument("eval_line needs straight-line parameters");
  }
  const double sn = std::sin(params.theta0);
  const double cs = std::cos(params.theta0);
  const double r = 1.0 - sn * t;
  if (!(r > 0.0)) {
    throw std::domain_error("the line parametrization stops where the speed hits zero");
  }
  LinePoint out;
  out.s = t - 0.5 * sn * t * t;
  out.x = cs * out.s;
  out.y = sn * out.s - 0.5;
  return out;
}

TrackSample sample_at(const CaseClass& cls, const TrackParams& params, double p) {
  const double lambda = params.lambda;
  TrackSample smp;
  smp.param = p;
  switch (cls.kind) {
    case CaseKind::Case1: {
      const PathPoint pp = eval_case1(p, lambda);
      smp.t = pp.t; smp.s = pp.s; smp.x = pp.x; smp.y = pp.y;
      smp.theta = theta_of_anomaly(CaseKind::Case1, p, params);
      break;
    }
    case CaseKind::Case2: {
      // theta is the natural parameter; the closed forms live in the
      // theta-form antiderivatives with sectorial prefactors.
      const double l_ang = lambda - std::cos(params.theta0);
      smp.t = l_ang * t_raw(2, p, lambda);
      smp.s = l_ang * l_ang * s_raw(2, p, lambda);
      smp.x = l_ang * l_ang * x_raw(2, p, lambda);
      smp.theta = p;
      const double r = hodograph_radius(p, params);
      smp.y = -0.5 * r * r;
      break;
    }
    case CaseKind::Case3: {
      const PathPoint pp = eval_case3(p);
      smp.t = pp.t; smp.s = pp.s; smp.x = pp.x; smp.y = pp.y;
      smp.theta = theta_of_anomaly(CaseKind::Case3, p, params);
      break;
    }
    case CaseKind::Case4: {
      const PathPoint pp = eval_case4(p, lambda);
      smp.t = pp.t; smp.s = pp.s; smp.x = pp.x; smp.y = pp.y;
      smp.theta = theta_of_anomaly(CaseKind::Case4, p, params);
      break;
    }
    case CaseKind::Case5: {
      const PathPoint pp = eval_case5(p, lambda);
      smp.t = pp.t; smp.s = pp.s; smp.x = pp.x; smp.y = pp.y;
      smp.theta = theta_of_anomaly(CaseKind::Case5, p, params);
      break;
    }
    case CaseKind::StraightLine: {
      const LinePoint lp = eval_line(p, params);
      smp.t = p; smp.s = lp.s; smp.x = lp.x; smp.y = lp.y;
      smp.theta = params.theta0;
      smp.r = 1.0 - std::sin(params.theta0) * p;
      smp.vx = smp.r * std::cos(params.theta0);
      smp.vy = smp.r * std::sin(params.theta0);
      return smp;
    }
  }
  smp.r = hodograph_radius(smp.theta, params);
  smp.vx = smp.r * std::cos(smp.theta);
  smp.vy = smp.r * std::sin(smp.theta);
  return smp;
}

std::vector<TrackSample> trace(const CaseClass& cls, const TrackParams& params,
                               const AnomalyRange& range) {
  if (classify(params).kind != cls.kind) {
    throw std::invalid_argument("case/parameter mismatch");
  }
  if (range.n < 2) {
    throw std::invalid_argument("a trace needs at least 2 samples");
  }
  if (!std::isfinite(range.lo) || !std::isfinite(range.hi) ||
      !(range.lo < range.hi)) {
    throw std::invalid_argument("trace range needs lo < hi");
  }
  if (cls.kind == CaseKind::Case2 &&
      (range.lo < 0.0 || range.hi > kTwoPi)) {
    throw std::domain_error("case 2 needs theta in [0, 2pi]");
  }
  std::vector<TrackSample> out;
  out.reserve(static_cast<std::size_t>(range.n));
  const double span = range.hi - range.lo;
  for (int k = 0; k < range.n; ++k) {
    const double p = (k == range.n - 1)
                         ? range.hi
                         : range.lo + span * static_cast<double>(k) /
                                          static_cast<double>(range.n - 1);
    out.push_back(sample_at(cls, params, p));
  }
  return out;
}

AnomalyRange default_range(const CaseClass& cls, const TrackParams& params, int n) {
  if (n < 2) {
    throw std::invalid_argument("a trace needs at least 2 samples");
  }
  switch (cls.kind) {
    case CaseKind::Case1:
    case CaseKind::Case2:
      return AnomalyRange{0.0, kTwoPi, n}; // one full period
    case CaseKind::Case3:
    case CaseKind::Case4:
    case CaseKind::Case5:
      return AnomalyRange{-3.0, 3.0, n};
    case CaseKind::StraightLine: {
      const double sn = std::sin(params.theta0);
      // Keep the speed r = 1 - sin(theta0) t at or above 0.1 on the span.
      if (sn > kLineTolerance) return AnomalyRange{0.0, 0.9 / sn, n};
      return AnomalyRange{0.0, 3.0, n};
    }
  }
  throw std::invalid_argument("unknown case kind");
}

} // namespace cnf
