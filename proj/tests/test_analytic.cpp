#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cnf/analytic.hpp"
#include "cnf/core.hpp"
#include "cnf/oracle.hpp"

using namespace cnf;

namespace {

struct Regime {
  CaseKind kind;
  double lambda;
};

const std::vector<Regime> kAnomalyRegimes = {
    {CaseKind::Case1, 1.5}, {CaseKind::Case1, 2.0}, {CaseKind::Case1, 4.0},
    {CaseKind::Case3, 1.0}, {CaseKind::Case4, 0.0}, {CaseKind::Case4, 0.5},
    {CaseKind::Case4, 0.75}, {CaseKind::Case5, 0.0}, {CaseKind::Case5, 0.5},
    {CaseKind::Case5, 0.75},
};

TrackParams params_for(const Regime& r) {
  return make_params(r.lambda, canonical_theta0(r.kind, r.lambda));
}

double interior_theta(const CaseClass& cls, double f) {
  // f in (0, 1) mapped strictly inside (theta_min, theta_max).
  return cls.theta_min + (cls.theta_max - cls.theta_min) * (0.02 + 0.96 * f);
}

} // namespace

TEST_CASE("anomaly transforms round-trip and increase with theta") {
  for (const Regime& r : kAnomalyRegimes) {
    const TrackParams params = params_for(r);
    const CaseClass cls = classify(params);
    double prev_anomaly = -HUGE_VAL;
    for (int i = 0; i <= 60; ++i) {
      const double theta = interior_theta(cls, i / 60.0);
      const double p = anomaly_of_theta(r.kind, theta, params);
      INFO(case_name(r.kind), " lambda ", r.lambda, " theta ", theta);
      CHECK(p > prev_anomaly); // strictly increasing, every regime
      prev_anomaly = p;
      const double back = theta_of_anomaly(r.kind, p, params);
      CHECK(back == doctest::Approx(theta).epsilon(1e-12));
    }
  }
}

TEST_CASE("case 2 uses theta itself as the parameter") {
  const TrackParams params = make_params(2.0, M_PI);
  for (double theta : {0.3, 1.0, M_PI, 4.0, 6.0}) {
    CHECK(anomaly_of_theta(CaseKind::Case2, theta, params) == theta);
    CHECK(theta_of_anomaly(CaseKind::Case2, theta, params) == theta);
  }
}

TEST_CASE("loop anomaly unwraps across branches") {
  const TrackParams params = make_params(2.0, 0.0);
  // theta and psi share the 2 pi period; the inverse must follow the branch.
  for (double psi : {0.7, 2.0, -1.3}) {
    const double theta = theta_of_anomaly(CaseKind::Case1, psi, params);
    for (int k = -2; k <= 2; ++k) {
      const double shifted =
          theta_of_anomaly(CaseKind::Case1, psi + 2.0 * M_PI * k, params);
      CHECK(shifted == doctest::Approx(theta + 2.0 * M_PI * k).epsilon(1e-12));
    }
  }
  CHECK(theta_of_anomaly(CaseKind::Case1, M_PI, params) == doctest::Approx(M_PI));
}

TEST_CASE("anomaly transforms reject out-of-range angles and lines") {
  const TrackParams loop = make_params(2.0, 0.0);
  CHECK_THROWS_AS(anomaly_of_theta(CaseKind::Case1, M_PI + 0.2, loop),
                  std::domain_error);
  const TrackParams valley = make_params(0.5, 0.0);
  CHECK_THROWS_AS(anomaly_of_theta(CaseKind::Case4, std::acos(0.5), valley),
                  std::domain_error);
  const TrackParams line = make_params(0.5, M_PI / 3);
  CHECK_THROWS_AS(anomaly_of_theta(CaseKind::StraightLine, M_PI / 3, line),
                  std::invalid_argument);
  CHECK_THROWS_AS(theta_of_anomaly(CaseKind::StraightLine, 0.0, line),
                  std::invalid_argument);
}

TEST_CASE("frozen closed-form values") {
  // Loop regime at the top of the loop (lambda = 2).
  const PathPoint top = eval_case1(M_PI, 2.0);
  CHECK(top.t == doctest::Approx(1.2091995761561452).epsilon(1e-15));
  CHECK(top.s == doctest::Approx(0.906899682117109).epsilon(1e-15));
  CHECK(top.x == doctest::Approx(0.6045997880780727).epsilon(1e-15));
  CHECK(top.y == doctest::Approx(-1.0 / 18).epsilon(1e-15));

  // Boundary regime.
  const PathPoint b = eval_case3(1.0);
  CHECK(b.t == doctest::Approx(4.0 / 3).epsilon(1e-15));
  CHECK(b.s == doctest::Approx(28.0 / 15).epsilon(1e-15));
  CHECK(b.x == doctest::Approx(-0.8).epsilon(1e-15));
  CHECK(b.y == doctest::Approx(-2.0).epsilon(1e-15));

  // Valley regime: time runs backwards along increasing chi.
  const PathPoint v = eval_case4(1.0, 0.5);
  CHECK(v.t == doctest::Approx(-1.2895704801293748).epsilon(1e-14));
  CHECK(v.s == doctest::Approx(-1.4533401205247607).epsilon(1e-14));
  CHECK(v.x == doctest::Approx(-1.3714553003270678).epsilon(1e-14));
  CHECK(v.y == doctest::Approx(-0.92759521785712429).epsilon(1e-14));

  // Top-anchored unbounded regime.
  const PathPoint a = eval_case5(1.0, 0.5);
  CHECK(a.t == doctest::Approx(1.5593103636296213).epsilon(1e-14));
  CHECK(a.s == doctest::Approx(2.2240174766873526).epsilon(1e-14));
  CHECK(a.x == doctest::Approx(-1.2269568071007562).epsilon(1e-14));
  CHECK(a.y == doctest::Approx(-2.1760344214531435).epsilon(1e-14));
}

TEST_CASE("anchors are exact") {
  CHECK(eval_case1(0.0, 2.0).t == 0.0);
  CHECK(eval_case1(0.0, 2.0).x == 0.0);
  CHECK(eval_case1(0.0, 2.0).y == -0.5);
  CHECK(eval_case3(0.0).y == -0.5);
  CHECK(eval_case4(0.0, 0.5).y == -0.5);
  CHECK(eval_case5(0.0, 0.5).y == -0.5);
}

TEST_CASE("loop period advances time and abscissa, closes the rest") {
  for (double lam : {1.5, 2.0, 4.0}) {
    const PathPoint once = eval_case1(2.0 * M_PI, lam);
    for (double psi : {0.4, 1.9, 4.4}) {
      const PathPoint p = eval_case1(psi, lam);
      const PathPoint q = eval_case1(psi + 2.0 * M_PI, lam);
      CHECK(q.t - p.t == doctest::Approx(once.t).epsilon(1e-12));
      CHECK(q.s - p.s == doctest::Approx(once.s).epsilon(1e-12));
      CHECK(q.x - p.x == doctest::Approx(once.x).epsilon(1e-12));
      CHECK(q.y == doctest::Approx(p.y).epsilon(1e-12));
    }
  }
}

TEST_CASE("closed forms have the mirror symmetry of the track") {
  for (double p : {0.35, 1.2, 2.6}) {
    const PathPoint plus1 = eval_case1(p, 2.0);
    const PathPoint minus1 = eval_case1(-p, 2.0);
    CHECK(minus1.t == doctest::Approx(-plus1.t).epsilon(1e-13));
    CHECK(minus1.s == doctest::Approx(-plus1.s).epsilon(1e-13));
    CHECK(minus1.x == doctest::Approx(-plus1.x).epsilon(1e-13));
    CHECK(minus1.y == doctest::Approx(plus1.y).epsilon(1e-13));

    const PathPoint plus4 = eval_case4(p, 0.5);
    const PathPoint minus4 = eval_case4(-p, 0.5);
    CHECK(minus4.t == doctest::Approx(-plus4.t).epsilon(1e-13));
    CHECK(minus4.x == doctest::Approx(-plus4.x).epsilon(1e-13));
    CHECK(minus4.y == doctest::Approx(plus4.y).epsilon(1e-13));

    const PathPoint plus5 = eval_case5(p, 0.5);
    const PathPoint minus5 = eval_case5(-p, 0.5);
    CHECK(minus5.t == doctest::Approx(-plus5.t).epsilon(1e-13));
    CHECK(minus5.x == doctest::Approx(-plus5.x).epsilon(1e-13));
    CHECK(minus5.y == doctest::Approx(plus5.y).epsilon(1e-13));
  }
}

TEST_CASE("time and arc length are monotone in the anomaly") {
  for (const Regime& r : kAnomalyRegimes) {
    double prev_t = HUGE_VAL * (r.kind == CaseKind::Case4 ? 1.0 : -1.0);
    double prev_s = prev_t;
    for (int i = 0; i <= 100; ++i) {
      const double p = -3.0 + 6.0 * i / 100;
      PathPoint pt;
      switch (r.kind) {
        case CaseKind::Case1: pt = eval_case1(p, r.lambda); break;
        case CaseKind::Case3: pt = eval_case3(p); break;
        case CaseKind::Case4: pt = eval_case4(p, r.lambda); break;
        default: pt = eval_case5(p, r.lambda); break;
      }
      INFO(case_name(r.kind), " lambda ", r.lambda, " p ", p);
      if (r.kind == CaseKind::Case4) {
        CHECK(pt.t < prev_t); // runs backwards in time
        CHECK(pt.s < prev_s);
      } else {
        CHECK(pt.t > prev_t);
        CHECK(pt.s > prev_s);
      }
      prev_t = pt.t;
      prev_s = pt.s;
    }
  }
}

TEST_CASE("zero load factor degenerates to free flight") {
  // With no normal force the track is the ballistic parabola through
  // (0, -1/2) with unit horizontal speed: y = -(1 + x^2)/2.
  for (int i = 0; i <= 200; ++i) {
    const double p = -3.0 + 6.0 * i / 200;
    const PathPoint v = eval_case4(p, 0.0);
    CHECK(std::fabs(v.y + 0.5 * (1.0 + v.x * v.x)) <= 1e-13);
    const PathPoint a = eval_case5(p, 0.0);
    CHECK(std::fabs(a.y + 0.5 * (1.0 + a.x * a.x)) <= 1e-13);
  }
}

TEST_CASE("near the straight-line limit x approaches s honestly") {
  // Just above lambda = 1 the loop is gigantic and locally straight: the
  // abscissa and the arc length may only differ by a sliver.
  double worst1 = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double psi = -3.0 + 6.0 * i / 2000;
    const PathPoint p = eval_case1(psi, 1.0 + 1e-4);
    worst1 = std::max(worst1, std::fabs(p.x - p.s));
  }
  CHECK(worst1 < 3e-3);
  CHECK(worst1 > 2e-3); // the gap is real, not zero

  // Just below lambda = 1 the same window covers a longer stretch of the
  // valley and the deviation from straightness is an order larger.
  double worst4 = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double chi = -3.0 + 6.0 * i / 2000;
    const PathPoint p = eval_case4(chi, 1.0 - 1e-4);
    worst4 = std::max(worst4, std::fabs(p.x - p.s));
  }
  CHECK(worst4 < 0.1);
  CHECK(worst4 > 0.05);
}

TEST_CASE("top-anchored arc agrees with an independent integration") {
  const PathPoint ref = eval_case5(1.0, 0.5);
  const OdeState start{-1.0, 0.0, 0.0, -0.5}; // launch along theta0 = pi
  const std::vector<OdePoint> path = integrate(start, 0.5, ref.t, 1e-5);
  const OdeState end = path.back().state;
  CHECK(std::fabs(end.x - ref.x) <= 1e-6);
  CHECK(std::fabs(end.y - ref.y) <= 1e-6);
}

TEST_CASE("straight-line coasting") {
  const TrackParams line = make_params(0.5, M_PI / 3);
  const LinePoint p = eval_line(1.0, line);
  CHECK(p.s == doctest::Approx(0.56698729810778059).epsilon(1e-14));
  CHECK(p.x == doctest::Approx(0.28349364905389024).epsilon(1e-14));
  CHECK(p.y == doctest::Approx(-0.0089745962155614034).epsilon(1e-12));

  // The path is straight with slope tan(theta0) = sqrt(1-lambda^2)/lambda.
  const LinePoint q = eval_line(0.25, line);
  CHECK((p.y - q.y) / (p.x - q.x) ==
        doctest::Approx(std::sqrt(1.0 - 0.25) / 0.5).epsilon(1e-12));

  // Energy along the line: r = 1 - sin(theta0) t and r^2/2 + y stays zero.
  for (double t : {0.0, 0.3, 0.8, 1.1}) {
    const LinePoint lp = eval_line(t, line);
    const double r = 1.0 - std::sin(M_PI / 3) * t;
    CHECK(std::fabs(0.5 * r * r + lp.y) <= 1e-15);
  }

  // Uphill coasting stops where the speed hits zero.
  CHECK_THROWS_AS(eval_line(2.0 / std::sin(M_PI / 3), line), std::domain_error);
  CHECK_THROWS_AS(eval_line(0.5, make_params(2.0, 0.0)), std::invalid_argument);

  // Vertical launch: lambda = 0 with theta0 = pi/2 stays on the y axis.
  const TrackParams vertical = make_params(0.0, M_PI / 2);
  REQUIRE(classify(vertical).kind == CaseKind::StraightLine);
  const LinePoint vp = eval_line(0.5, vertical);
  CHECK(std::fabs(vp.x) < 1e-12);
  CHECK(vp.y == doctest::Approx(0.5 - 0.125 - 0.5));

  // Downhill coasting accelerates instead and never stops.
  const TrackParams downhill = make_params(std::cos(5.0), 5.0); // sin < 0
  REQUIRE(classify(downhill).kind == CaseKind::StraightLine);
  const LinePoint dp = eval_line(10.0, downhill);
  CHECK(dp.y < -5.0);
}

TEST_CASE("trace composes ordered, anchored, conservative samples") {
  for (const Regime& r : kAnomalyRegimes) {
    const TrackParams params = params_for(r);
    const CaseClass cls = classify(params);
    const AnomalyRange range = default_range(cls, params, 501);
    const std::vector<TrackSample> samples = trace(cls, params, range);
    REQUIRE(samples.size() == 501);
    CHECK(samples.front().param == range.lo);
    CHECK(samples.back().param == range.hi);

    const double l_ang = r.lambda - std::cos(params.theta0);
    const bool reversed = r.kind == CaseKind::Case4;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const TrackSample& smp = samples[i];
      INFO(case_name(r.kind), " lambda ", r.lambda, " i ", i);
      CHECK(smp.r > 0.0);
      CHECK(std::fabs(0.5 * smp.r * smp.r + smp.y) <= 1e-10);
      CHECK(std::fabs(smp.r * (r.lambda - std::cos(smp.theta)) - l_ang) <= 1e-10);
      CHECK(smp.vx == doctest::Approx(smp.r * std::cos(smp.theta)).epsilon(1e-13));
      CHECK(smp.vy == doctest::Approx(smp.r * std::sin(smp.theta)).epsilon(1e-13));
      if (i > 0) {
        CHECK(smp.param > samples[i - 1].param);
        if (reversed) {
          CHECK(smp.t < samples[i - 1].t);
          CHECK(smp.s < samples[i - 1].s);
        } else {
          CHECK(smp.t > samples[i - 1].t);
          CHECK(smp.s > samples[i - 1].s);
        }
      }
    }
  }
}

TEST_CASE("trace hits the anchor exactly when the grid contains it") {
  // 501 samples over [-3, 3] put a grid point exactly at 0.
  const TrackParams params = make_params(0.5, 0.0);
  const CaseClass cls = classify(params);
  const std::vector<TrackSample> samples =
      trace(cls, params, AnomalyRange{-3.0, 3.0, 501});
  const TrackSample& mid = samples[250];
  CHECK(mid.param == 0.0);
  CHECK(mid.t == 0.0);
  CHECK(mid.x == 0.0);
  CHECK(mid.y == -0.5);
  CHECK(mid.r == 1.0);
}

TEST_CASE("trace validates its request") {
  const TrackParams params = make_params(2.0, 0.0);
  const CaseClass cls = classify(params);
  CHECK_THROWS_AS(trace(cls, params, AnomalyRange{0.0, 1.0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(trace(cls, params, AnomalyRange{1.0, 1.0, 10}),
                  std::invalid_argument);
  CHECK_THROWS_AS(trace(cls, params, AnomalyRange{2.0, 1.0, 10}),
                  std::invalid_argument);
  const CaseClass wrong = classify(make_params(0.5, 0.0));
  CHECK_THROWS_AS(trace(wrong, params, AnomalyRange{0.0, 1.0, 10}),
                  std::invalid_argument);

  // Case2 samples theta directly, so the window must stay inside [0, 2pi].
  const TrackParams top = make_params(2.0, M_PI);
  CHECK_THROWS_AS(trace(classify(top), top, AnomalyRange{-0.5, 1.0, 10}),
                  std::domain_error);
  CHECK_THROWS_AS(trace(classify(top), top, AnomalyRange{1.0, 7.0, 10}),
                  std::domain_error);

  // A stopped line cannot be sampled beyond the stopping time.
  const TrackParams line = make_params(0.5, M_PI / 3);
  CHECK_THROWS_AS(trace(classify(line), line, AnomalyRange{0.0, 5.0, 10}),
                  std::domain_error);
}

TEST_CASE("velocities are the time derivative of position along a trace") {
  for (const Regime& r : {Regime{CaseKind::Case1, 2.0}, Regime{CaseKind::Case3, 1.0},
                          Regime{CaseKind::Case4, 0.5}, Regime{CaseKind::Case5, 0.5}}) {
    const TrackParams params = params_for(r);
    const CaseClass cls = classify(params);
    const std::vector<TrackSample> samples =
        trace(cls, params, default_range(cls, params, 8001));
    for (std::size_t i = 1; i + 1 < samples.size(); i += 40) {
      const TrackSample& a = samples[i - 1];
      const TrackSample& b = samples[i];
      const TrackSample& c = samples[i + 1];
      const double dt = c.t - a.t;
      // The finite-difference truncation grows with the local speed (the
      // jerk scales like lambda * r), so the budget follows r^2.
      const double tol = 1e-5 * (1.0 + b.r * b.r);
      INFO(case_name(r.kind), " i ", i);
      CHECK(std::fabs((c.x - a.x) / dt - b.vx) <= tol);
      CHECK(std::fabs((c.y - a.y) / dt - b.vy) <= tol);
      CHECK(std::fabs(std::fabs((c.s - a.s) / dt) - b.r) <= tol);
    }
  }
}

TEST_CASE("default ranges") {
  const TrackParams loop = make_params(2.0, 0.0);
  const AnomalyRange r1 = default_range(classify(loop), loop, 7);
  CHECK(r1.lo == 0.0);
  CHECK(r1.hi == doctest::Approx(2.0 * M_PI));
  CHECK(r1.n == 7);

  const TrackParams top = make_params(2.0, M_PI);
  const AnomalyRange r2 = default_range(classify(top), top, 10);
  CHECK(r2.lo == 0.0);
  CHECK(r2.hi == doctest::Approx(2.0 * M_PI));

  for (const TrackParams p :
       {make_params(1.0, M_PI), make_params(0.5, 0.0), make_params(0.5, M_PI)}) {
    const AnomalyRange r = default_range(classify(p), p, 10);
    CHECK(r.lo == -3.0);
    CHECK(r.hi == 3.0);
  }

  // Uphill line: the window stops before the speed reaches zero...
  const TrackParams line = make_params(0.5, M_PI / 3);
  const AnomalyRange rl = default_range(classify(line), line, 10);
  CHECK(rl.lo == 0.0);
  CHECK(rl.hi == doctest::Approx(0.9 / std::sin(M_PI / 3)));
  // ...and sampling it throughout stays valid.
  CHECK_NOTHROW(trace(classify(line), line, rl));

  // Horizontal line: no stopping time, a plain finite window.
  const TrackParams flat = make_params(1.0, 0.0);
  const AnomalyRange rf = default_range(classify(flat), flat, 10);
  CHECK(rf.lo == 0.0);
  CHECK(rf.hi == 3.0);
}
