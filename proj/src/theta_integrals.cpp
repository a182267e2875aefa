#include "cnf/theta_integrals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cnf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_pair(int case_index, double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw std::invalid_argument("load factor lambda must be non-negative");
  }
  switch (case_index) {
    case 1:
    case 2:
      if (!(lambda > 1.0)) {
        throw std::invalid_argument("cases 1 and 2 require lambda > 1");
      }
      return;
    case 3:
      if (lambda != 1.0) {
        throw std::invalid_argument("case 3 requires lambda = 1");
      }
      return;
    case 4:
    case 5:
      if (!(lambda < 1.0)) {
        throw std::invalid_argument("cases 4 and 5 require lambda < 1");
      }
      return;
    default:
      throw std::invalid_argument("case index must be 1..5");
  }
}

void check_theta(int case_index, double theta, double lambda) {
  if (!std::isfinite(theta)) {
    throw std::domain_error("theta must be finite");
  }
  switch (case_index) {
    case 1:
      if (theta < -kPi || theta > kPi) {
        throw std::domain_error("case 1 needs theta in [-pi, pi]");
      }
      return;
    case 2:
      if (theta < 0.0 || theta > kTwoPi) {
        throw std::domain_error("case 2 needs theta in [0, 2pi]");
      }
      return;
    case 3:
      if (theta <= 0.0 || theta >= kTwoPi) {
        throw std::domain_error("case 3 needs theta in (0, 2pi)");
      }
      return;
    case 4: {
      const double a = std::acos(lambda);
      if (!(theta > -a && theta < a)) {
        throw std::domain_error("case 4 needs |theta| < acos(lambda)");
      }
      return;
    }
    case 5: {
      const double a = std::acos(lambda);
      if (!(theta > a && theta < kTwoPi - a)) {
        throw std::domain_error("case 5 needs theta in (acos, 2pi - acos)");
      }
      return;
    }
  }
}

// The inverse-trig/hyperbolic part of each antiderivative, written with
// half-angle arguments so the removable endpoint indeterminacies of the
// quotient forms sin(theta)/(1 +- cos(theta)) never arise. Returns the
// structural term A and, via `sign`, how it enters the bracket.
double structural_term(int case_index, double theta, double lambda, double* sign) {
  const double h = 0.5 * theta;
  switch (case_index) {
    case 1: {
      *sign = 1.0;
      const double k = std::sqrt((lambda + 1.0) / (lambda - 1.0));
      return std::atan2(k * std::sin(h), std::cos(h));
    }
    case 2: {
      *sign = -1.0;
      const double k = std::sqrt((lambda - 1.0) / (lambda + 1.0));
      return std::atan2(k * std::cos(h), std::sin(h));
    }
    case 4: {
      *sign = -1.0;
      const double k = std::sqrt((1.0 + lambda) / (1.0 - lambda));
      const double arg = k * std::tan(h);
      if (!(std::abs(arg) < 1.0)) {
        throw std::domain_error("case 4 antiderivative diverges at the range edge");
      }
      return std::atanh(arg);
    }
    case 5: {
      *sign = -1.0;
      const double k = std::sqrt((1.0 - lambda) / (1.0 + lambda));
      const double arg = k * (std::cos(h) / std::sin(h));
      if (!(std::abs(arg) < 1.0)) {
        throw std::domain_error("case 5 antiderivative diverges at the range edge");
      }
      return std::atanh(arg);
    }
  }
  throw std::invalid_argument("case index must be 1..5");
}

} // namespace

double t_raw(int case_index, double theta, double lambda) {
  check_pair(case_index, lambda);
  check_theta(case_index, theta, lambda);
  const double c = std::cos(theta);
  const double si = std::sin(theta);
  if (case_index == 3) {
    const double d = 1.0 - c;
    return -(2.0 - c) * si / (3.0 * d * d);
  }
  double sign = 0.0;
  const double a = structural_term(case_index, theta, lambda, &sign);
  const double dd = lambda * lambda - 1.0;
  const double w = std::sqrt(std::abs(dd));
  return (sign * (2.0 * lambda / w) * a + si / (lambda - c)) / dd;
}

double s_raw(int case_index, double theta, double lambda) {
  check_pair(case_index, lambda);
  check_theta(case_index, theta, lambda);
  const double c = std::cos(theta);
  const double si = std::sin(theta);
  if (case_index == 3) {
    const double d = 1.0 - c;
    return -(2.0 * c * c - 6.0 * c + 7.0) * si / (15.0 * d * d * d);
  }
  double sign = 0.0;
  const double a = structural_term(case_index, theta, lambda, &sign);
  const double dd = lambda * lambda - 1.0;
  const double w = std::sqrt(std::abs(dd));
  const double den = lambda - c;
  const double rational =
      (4.0 * lambda * lambda - 3.0 * lambda * c - 1.0) * si / (2.0 * den * den);
  return (sign * ((2.0 * lambda * lambda + 1.0) / w) * a + rational) / (dd * dd);
}

double x_raw(int case_index, double theta, double lambda) {
  check_pair(case_index, lambda);
  check_theta(case_index, theta, lambda);
  const double c = std::cos(theta);
  const double si = std::sin(theta);
  if (case_index == 3) {
    const double d = 1.0 - c;
    return (c * c - 3.0 * c + 1.0) * si / (5.0 * d * d * d);
  }
  double sign = 0.0;
  const double a = structural_term(case_index, theta, lambda, &sign);
  const double dd = lambda * lambda - 1.0;
  const double w = std::sqrt(std::abs(dd));
  const double den = lambda - c;
  const double rational =
      ((2.0 * lambda * lambda + 1.0) * lambda - (lambda * lambda + 2.0) * c) * si /
      (2.0 * den * den);
  return (sign * (3.0 * lambda / w) * a + rational) / (dd * dd);
}

double y_of_theta(double theta, const TrackParams& params) {
  const double r = hodograph_radius(theta, params);
  return -0.5 * r * r;
}

std::vector<TrackSample> assemble_theta_trace(const CaseClass& cls,
                                              const TrackParams& params,
                                              std::span<const double> thetas) {
  if (classify(params).kind != cls.kind) {
    throw std::invalid_argument("case/parameter mismatch");
  }
  int index = 0;
  switch (cls.kind) {
    case CaseKind::Case1: index = 1; break;
    case CaseKind::Case2: index = 2; break;
    case CaseKind::Case3: index = 3; break;
    case CaseKind::Case4: index = 4; break;
    case CaseKind::Case5: index = 5; break;
    case CaseKind::StraightLine:
      throw std::invalid_argument(
          "the theta-form integrals do not cover the straight line");
  }
  for (std::size_t k = 1; k < thetas.size(); ++k) {
    if (!(thetas[k] > thetas[k - 1])) {
      throw std::invalid_argument("theta grid must be strictly increasing");
    }
  }
  const double l_ang = params.lambda - std::cos(params.theta0);
  std::vector<TrackSample> out;
  out.reserve(thetas.size());
  for (double theta : thetas) {
    TrackSample smp;
    smp.param = theta;
    smp.theta = theta;
    smp.t = l_ang * t_raw(index, theta, params.lambda);
    smp.s = l_ang * l_ang * s_raw(index, theta, params.lambda);
    smp.x = l_ang * l_ang * x_raw(index, theta, params.lambda);
    smp.r = hodograph_radius(theta, params);
    smp.y = -0.5 * smp.r * smp.r;
    smp.vx = smp.r * std::cos(theta);
    smp.vy = smp.r * std::sin(theta);
    out.push_back(smp);
  }
  return out;
}

} // namespace cnf
