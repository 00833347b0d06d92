#pragma once

#include <cmath>
#include <stdexcept>

namespace football {

namespace detail {

template <class F>
double adaptive_simpson(const F& f, double a, double m, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson integration of f over [a, b] to absolute tolerance
// abs_tol.  Panels are bisected until the local Richardson error estimate
// falls under the (halved) tolerance budget; the final value carries the
// Richardson correction, so smooth integrands converge one order beyond
// plain Simpson.
template <class F>
double integrate(const F& f, double a, double b, double abs_tol = 1e-13) {
  if (!(std::isfinite(a) && std::isfinite(b)))
    throw std::domain_error("integrate: non-finite interval");
  if (!(abs_tol > 0.0)) throw std::domain_error("integrate: tolerance must be positive");
  if (a == b) return 0.0;
  const double sign = (a < b) ? 1.0 : -1.0;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  const double m = 0.5 * (lo + hi);
  const double fa = f(lo);
  const double fm = f(m);
  const double fb = f(hi);
  const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
  return sign * detail::adaptive_simpson(f, lo, m, hi, fa, fm, fb, whole, abs_tol, 48);
}

}  // namespace football
