#pragma once

#include <cmath>
#include <functional>

namespace testsupport {

// Adaptive Simpson quadrature with Richardson extrapolation. Used as an
// independent oracle for closed-form antiderivatives: it never sees the
// candidate formula, only the integrand.
inline double simpson_rec(const std::function<double(double)>& f, double a,
                          double b, double fa, double fm, double fb,
                          double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  // Second condition: once the Simpson difference is down at the rounding
  // noise of the panel sums themselves, splitting further cannot help, no
  // matter how small the requested tolerance is.
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol ||
      std::fabs(delta) <=
          1e-14 * (std::fabs(left) + std::fabs(right) + std::fabs(whole))) {
    return left + right + delta / 15.0;
  }
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-12) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 42);
}

} // namespace testsupport
