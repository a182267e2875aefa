#include "cnf/oracle.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace cnf {

namespace {

OdeState axpy(const OdeState& a, double h, const OdeState& d) {
  return OdeState{a.vx + h * d.vx, a.vy + h * d.vy, a.x + h * d.x, a.y + h * d.y};
}

bool finite_state(const OdeState& s) {
  return std::isfinite(s.vx) && std::isfinite(s.vy) && std::isfinite(s.x) &&
         std::isfinite(s.y);
}

OdeState rk4_step(const OdeState& s, double lambda, double h) {
  const OdeState k1 = ode_rhs(s, lambda);
  const OdeState k2 = ode_rhs(axpy(s, 0.5 * h, k1), lambda);
  const OdeState k3 = ode_rhs(axpy(s, 0.5 * h, k2), lambda);
  const OdeState k4 = ode_rhs(axpy(s, h, k3), lambda);
  return OdeState{
      s.vx + h / 6.0 * (k1.vx + 2.0 * k2.vx + 2.0 * k3.vx + k4.vx),
      s.vy + h / 6.0 * (k1.vy + 2.0 * k2.vy + 2.0 * k3.vy + k4.vy),
      s.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
      s.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
  };
}

} // namespace

OdeState ode_rhs(const OdeState& state, double lambda) {
  const double speed = std::hypot(state.vx, state.vy);
  if (!(speed > 1e-12)) {
    throw std::domain_error("normal direction undefined at zero speed");
  }
  return OdeState{
      -lambda * state.vy / speed,
      -1.0 + lambda * state.vx / speed,
      state.vx,
      state.vy,
  };
}

std::vector<OdePoint> integrate(const OdeState& start, double lambda,
                                double t_end, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("integration step must be positive");
  }
  if (!std::isfinite(t_end) || t_end < 0.0) {
    throw std::invalid_argument("t_end must be finite and non-negative");
  }
  std::vector<OdePoint> path;
  path.reserve(static_cast<std::size_t>(t_end / step) + 2);
  path.push_back(OdePoint{0.0, start});
  OdeState s = start;
  const long nfull = static_cast<long>(std::floor(t_end / step));
  for (long i = 1; i <= nfull; ++i) {
    s = rk4_step(s, lambda, step);
    if (!finite_state(s)) {
      throw std::domain_error("integration diverged to a non-finite state");
    }
    if (std::hypot(s.vx, s.vy) < 1e-9) {
      throw std::domain_error("integration stopped: speed fell below 1e-9");
    }
    path.push_back(OdePoint{step * static_cast<double>(i), s});
  }
  const double rem = t_end - step * static_cast<double>(nfull);
  if (rem > 1e-12 * step) {
    s = rk4_step(s, lambda, rem);
    if (!finite_state(s)) {
      throw std::domain_error("integration diverged to a non-finite state");
    }
    path.push_back(OdePoint{t_end, s});
  }
  return path;
}

OdeState interpolate(const std::vector<OdePoint>& path, double t, double lambda) {
  if (path.empty()) {
    throw std::invalid_argument("cannot interpolate an empty path");
  }
  if (t < path.front().t || t > path.back().t) {
    throw std::invalid_argument("interpolation time outside the integrated span");
  }
  if (t == path.front().t) return path.front().state;
  const auto it = std::lower_bound(
      path.begin(), path.end(), t,
      [](const OdePoint& p, double value) { return p.t < value; });
  // it points at the first node with node.t >= t; it > begin here.
  if (it->t == t) return it->state;
  const OdePoint& right = *it;
  const OdePoint& left = *(it - 1);
  const double h = right.t - left.t;
  const double u = (t - left.t) / h;
  const OdeState f0 = ode_rhs(left.state, lambda);
  const OdeState f1 = ode_rhs(right.state, lambda);
  const double u2 = u * u;
  const double u3 = u2 * u;
  const double h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
  const double h10 = u3 - 2.0 * u2 + u;
  const double h01 = -2.0 * u3 + 3.0 * u2;
  const double h11 = u3 - u2;
  auto mix = [&](double y0, double d0, double y1, double d1) {
    return h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1;
  };
  return OdeState{
      mix(left.state.vx, f0.vx, right.state.vx, f1.vx),
      mix(left.state.vy, f0.vy, right.state.vy, f1.vy),
      mix(left.state.x, f0.x, right.state.x, f1.x),
      mix(left.state.y, f0.y, right.state.y, f1.y),
  };
}

double recover_lambda(const TrackSample& a, const TrackSample& b,
                      const TrackSample& c) {
  std::array<const TrackSample*, 3> w{&a, &b, &c};
  std::sort(w.begin(), w.end(),
            [](const TrackSample* l, const TrackSample* r) { return l->t < r->t; });
  const double ux = w[1]->x - w[0]->x;
  const double uy = w[1]->y - w[0]->y;
  const double wx = w[2]->x - w[1]->x;
  const double wy = w[2]->y - w[1]->y;
  const double dx = w[2]->x - w[0]->x;
  const double dy = w[2]->y - w[0]->y;
  const double nu = std::hypot(ux, uy);
  const double nw = std::hypot(wx, wy);
  const double nd = std::hypot(dx, dy);
  if (nu == 0.0 || nw == 0.0 || nd == 0.0) {
    throw std::invalid_argument("degenerate curvature window");
  }
  const double cross = ux * wy - uy * wx;
  // Collinear within roundoff: a straight stretch, curvature zero.
  double kappa = 0.0;
  if (std::abs(cross) >= 1e-14 * nu * nw) {
    kappa = 2.0 * cross / (nu * nw * nd);
  }
  const double cos_theta = dx / nd;
  const double v2 = -2.0 * w[1]->y; // energy relation
  return v2 * kappa + cos_theta;
}

std::vector<double> recover_lambda_track(std::span<const TrackSample> samples) {
  if (samples.size() < 3) {
    throw std::invalid_argument("need at least 3 samples to recover lambda");
  }
  std::vector<double> out;
  out.reserve(samples.size() - 2);
  for (std::size_t k = 1; k + 1 < samples.size(); ++k) {
    out.push_back(recover_lambda(samples[k - 1], samples[k], samples[k + 1]));
  }
  return out;
}

namespace {

struct Widened {
  double energy;
  double momentum;
  double position;
  double lambda_rec;
};

// Near the parabolic boundary (lambda -> 1) double precision genuinely
// degrades and the base tolerances become unattainable:
//  - energy: r is computed through lambda - cos(theta), and both terms agree
//    to within |lambda - 1| on the reachable arc, so the residual floor is
//    a few tens of machine epsilons divided by the gap;
//  - lambda recovery: the loop top becomes a hairpin whose chord is the
//    difference of coordinates ~1/sqrt(gap) in magnitude, so the curvature
//    estimate keeps only about gap^(3/2) relative digits; measured recovery
//    error stays below a few times the gap itself;
//  - position: the fixed-step integrator under-resolves the hairpin
//    (turning radius shrinks like gap^2 while the speed shrinks like gap).
// The factors below are measured ceilings times a 3-12x safety margin; the
// window edge 1e-2 is where the base tolerances hold again on both sides.
Widened widen(const ToleranceConfig& config, CaseKind kind, double lambda) {
  Widened w{config.energy, config.momentum, config.position, config.lambda_rec};
  const double gap = std::abs(lambda - 1.0);
  if ((kind == CaseKind::Case1 || kind == CaseKind::Case4) && gap > 0.0 &&
      gap < 1e-2) {
    w.energy = std::max(w.energy, 1e-13 / gap);
    w.position = std::max(w.position, std::min(5e-8 / gap, 1e-4));
    w.lambda_rec = std::max(w.lambda_rec, std::min(10.0 * gap, 1e-3));
  }
  return w;
}

} // namespace

VerificationReport verify(const CaseClass& cls, const TrackParams& params,
                          const ToleranceConfig& config) {
  if (classify(params).kind != cls.kind) {
    throw std::invalid_argument("case/parameter mismatch");
  }
  const double lambda = params.lambda;
  const double l_ang = lambda - std::cos(params.theta0);
  const AnomalyRange range = default_range(cls, params, config.samples);
  const std::vector<TrackSample> samples = trace(cls, params, range);

  VerificationReport report;
  report.samples_checked = static_cast<long>(samples.size());
  double t_max = 0.0;
  for (const TrackSample& smp : samples) {
    report.max_energy_residual = std::max(
        report.max_energy_residual, std::abs(0.5 * smp.r * smp.r + smp.y));
    report.max_momentum_residual = std::max(
        report.max_momentum_residual,
        std::abs(smp.r * (lambda - std::cos(smp.theta)) - l_ang));
    t_max = std::max(t_max, smp.t);
  }

  // Independent check: integrate the equations of motion from the anchor
  // state and compare positions on the forward-time part of the trace.
  const double t_end = std::min(t_max, config.ode_t_max);
  if (t_end > config.ode_step) {
    const OdeState start{std::cos(params.theta0), std::sin(params.theta0),
                         0.0, -0.5};
    const std::vector<OdePoint> path =
        integrate(start, lambda, t_end, config.ode_step);
    const double t_reach = path.back().t;
    for (const TrackSample& smp : samples) {
      if (smp.t < 0.0 || smp.t > t_reach) continue;
      const OdeState probe = interpolate(path, smp.t, lambda);
      report.max_position_error_vs_oracle =
          std::max(report.max_position_error_vs_oracle,
                   std::hypot(smp.x - probe.x, smp.y - probe.y));
      ++report.samples_checked;
    }
  }

  // Geometric recovery of the load factor at interior parameter windows.
  const int n_windows = 100;
  const double delta = 1e-3;
  const double span = range.hi - range.lo;
  const double lo = range.lo + 0.01 * span;
  const double hi = range.hi - 0.01 * span;
  for (int j = 0; j < n_windows; ++j) {
    const double center =
        lo + (hi - lo) * (static_cast<double>(j) + 0.5) / n_windows;
    const TrackSample sa = sample_at(cls, params, center - delta);
    const TrackSample sb = sample_at(cls, params, center);
    const TrackSample sc = sample_at(cls, params, center + delta);
    const double recovered = recover_lambda(sa, sb, sc);
    report.max_lambda_recovery_error = std::max(
        report.max_lambda_recovery_error, std::abs(recovered - lambda));
    report.samples_checked += 3;
  }

  const Widened tol = widen(config, cls.kind, lambda);
  report.passed = report.max_energy_residual <= tol.energy &&
                  report.max_momentum_residual <= tol.momentum &&
                  report.max_position_error_vs_oracle <= tol.position &&
                  report.max_lambda_recovery_error <= tol.lambda_rec;
  return report;
}

VerificationReport verify_samples(std::span<const TrackSample> samples,
                                  const TrackParams& params,
                                  const ToleranceConfig& config) {
  const double lambda = params.lambda;
  const double l_ang = lambda - std::cos(params.theta0);
  VerificationReport report;
  report.samples_checked = static_cast<long>(samples.size());
  for (const TrackSample& smp : samples) {
    report.max_energy_residual = std::max(
        report.max_energy_residual, std::abs(0.5 * smp.r * smp.r + smp.y));
    report.max_momentum_residual = std::max(
        report.max_momentum_residual,
        std::abs(smp.r * (lambda - std::cos(smp.theta)) - l_ang));
  }
  const Widened tol = widen(config, classify(params).kind, lambda);
  report.passed = report.max_energy_residual <= tol.energy &&
                  report.max_momentum_residual <= tol.momentum;
  return report;
}

} // namespace cnf
