#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "football/branched.hpp"
#include "football/geometry.hpp"
#include "football/kernels.hpp"

// Independent numerical oracles: everything here measures the immersions
// through finite differences and quadrature only, never through the closed
// forms it is checking.

namespace football {

// ---------------------------------------------------------------------------
// Report types
// ---------------------------------------------------------------------------

struct GridSpec {
  int nu = 64;       // samples along u (or r)
  int ntheta = 64;   // samples along theta
  double h = 1e-5;   // finite-difference step; steps above 1e-2 fail the
                     // precision check in the report instead of erroring
};

struct CheckResult {
  std::string name;
  double measured;
  double expected;
  double tolerance;
  bool pass;  // always |measured - expected| <= tolerance
};

CheckResult make_check(std::string name, double measured, double expected, double tolerance);

struct VerifyReport {
  std::variant<FootballParams, BranchParams> params;
  std::vector<CheckResult> checks;
  bool all_pass;
};

// JSON document {"params": {...}, "checks": [{"name", "measured", "expected",
// "tolerance", "pass"}...], "all_pass": bool}.
std::string report_to_json(const VerifyReport& report);

// ---------------------------------------------------------------------------
// Finite-difference pullback
// ---------------------------------------------------------------------------

struct MetricCoeffs {
  double E;
  double F;
  double G;
};

// Central-difference first fundamental form of an arbitrary surface map at
// (u, theta); O(h^2) accurate. Both offset points must stay in the domain.
template <class Surface>
MetricCoeffs numeric_first_form(const Surface& s, double u, double theta, double h) {
  if (!(h > 0.0) || !std::isfinite(h))
    throw std::domain_error("numeric_first_form: step must be positive and finite");
  const double inv = 0.5 / h;
  const Point3 du = (s(u + h, theta) - s(u - h, theta)) * inv;
  const Point3 dt = (s(u, theta + h) - s(u, theta - h)) * inv;
  return {dot(du, du), dot(du, dt), dot(dt, dt)};
}

// Intrinsic curvature of a metric du^2 + G(u) dtheta^2 from G alone:
// K = -(sqrt(G))'' / sqrt(G), by second central difference.
template <class GFun>
double numeric_gauss_curvature(const GFun& g_of_u, double u, double h) {
  if (!(h > 0.0) || !std::isfinite(h))
    throw std::domain_error("numeric_gauss_curvature: step must be positive and finite");
  const double gm = g_of_u(u - h);
  const double g0 = g_of_u(u);
  const double gp = g_of_u(u + h);
  if (!(gm > 0.0 && g0 > 0.0 && gp > 0.0))
    throw std::domain_error("numeric_gauss_curvature: metric coefficient must be positive");
  const double sm = std::sqrt(gm);
  const double s0 = std::sqrt(g0);
  const double sp = std::sqrt(gp);
  return -(sp - 2.0 * s0 + sm) / (h * h * s0);
}

// ---------------------------------------------------------------------------
// Cone angles, area, pole distance
// ---------------------------------------------------------------------------

enum class Pole { origin, infinity };

// Ratio (circumference of the metric circle of radius eps about the cone
// point) / eps; tends to the cone angle 2*pi*alpha as eps -> 0.  Footballs
// evaluate the closed form 2*pi*alpha*sin(eps)/eps; branched parameters
// integrate the analytic density along |z| = eps and along a radial ray.
double cone_angle_estimate(const FootballParams& p, Pole pole, double eps);
double cone_angle_estimate(const BranchParams& bp, Pole pole, double eps);

// Two-stage Richardson extrapolation of the estimate over {eps, eps/2,
// eps/4}, removing the eps^2 and eps^4 error terms.
double cone_angle_richardson(const FootballParams& p, Pole pole, double eps = 1e-2);
double cone_angle_richardson(const BranchParams& bp, Pole pole, double eps = 1e-2);

// Midpoint-rule integral of sqrt(E G - F^2) over (0, pi) x (0, 2 pi); the
// parametric area, counted with multiplicity lambda, converges to
// 4 * pi * alpha.
double total_parametric_area(const FootballParams& p, const GridSpec& grid,
                             Exec exec = Exec::parallel);

// Max over the grid of |F(r, theta + 2 pi / lambda) - F(r, theta)|; the
// image is traversed lambda times, so the deviation must vanish to rounding.
double covering_multiplicity_check(const FootballParams& p, const GridSpec& grid,
                                   Exec exec = Exec::parallel);

// Intrinsic length of a meridian theta = const: integral of sqrt(E) = 1 over
// [0, pi], i.e. exactly pi for every parameter choice.
double meridian_length(const FootballParams& p);

// Euclidean length of the polyline through `segments`+1 meridian image
// points; converges to pi from below.
double meridian_polyline_length(const FootballParams& p, int segments, double theta = 0.0,
                                Exec exec = Exec::parallel);

// Euclidean distance between the two pole images; strictly below the
// intrinsic pole distance pi.
double euclidean_pole_gap(const FootballParams& p);

// ---------------------------------------------------------------------------
// Full suites
// ---------------------------------------------------------------------------

// Runs every check for the given parameters with a deterministic ordering.
// A check that throws is recorded as failed (measured = NaN); the suite
// itself never aborts.  cone_eps is the base step of the cone-angle
// extrapolation; values above 1e-2 fail the precision-range check.
VerifyReport verify_all(const FootballParams& p, const GridSpec& grid = {}, double cone_eps = 1e-2);
VerifyReport verify_all(const BranchParams& bp, const GridSpec& grid = {}, double cone_eps = 1e-2);

}  // namespace football
