#include "football/geometry.hpp"

#include <cmath>

#include "football/quadrature.hpp"

namespace football {

namespace {

bool near_integer(double x, double tol) { return std::fabs(x - std::round(x)) < tol; }

}  // namespace

double profile_slope(double amplitude, double u) {
  const double bc = amplitude * std::cos(u);
  return std::sqrt(std::fma(-bc, bc, 1.0));
}

// ---------------------------------------------------------------------------
// Parameters and coordinates
// ---------------------------------------------------------------------------

FootballParams::FootballParams(double amplitude, int winding)
    : amplitude_(amplitude), winding_(winding) {
  if (!(amplitude > 0.0 && amplitude < 1.0) || !std::isfinite(amplitude))
    throw std::domain_error("FootballParams: amplitude must lie in (0, 1)");
  if (winding < 1) throw std::domain_error("FootballParams: winding must be a positive integer");
}

FootballParams FootballParams::from_alpha(double alpha, double amplitude) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::domain_error("FootballParams: alpha must be positive");
  if (!(amplitude > 0.0 && amplitude < 1.0) || !std::isfinite(amplitude))
    throw std::domain_error("FootballParams: amplitude must lie in (0, 1)");
  const double ratio = alpha / amplitude;
  if (!near_integer(ratio, 1e-9))
    throw std::domain_error("FootballParams: alpha / amplitude must be a positive integer");
  return FootballParams(amplitude, static_cast<int>(std::llround(ratio)));
}

GeodesicCoord::GeodesicCoord(double u_, double theta_) : u(u_), theta(wrap_angle(theta_)) {
  if (!std::isfinite(u_) || u_ < 0.0 || u_ > kPi)
    throw std::domain_error("GeodesicCoord: u must lie in [0, pi]");
}

ConformalCoord::ConformalCoord(double r_, double theta_) : r(r_), theta(wrap_angle(theta_)) {
  if (!std::isfinite(r_) || r_ < 0.0)
    throw std::domain_error("ConformalCoord: r must be finite and nonnegative");
}

// ---------------------------------------------------------------------------
// Coordinate changes
// ---------------------------------------------------------------------------

double geodesic_from_conformal(double r) {
  if (!std::isfinite(r) || r < 0.0)
    throw std::domain_error("geodesic_from_conformal: r must be finite and nonnegative");
  return 2.0 * std::atan(r);
}

double conformal_from_geodesic(double u) {
  if (!std::isfinite(u) || u < 0.0 || u >= kPi)
    throw std::domain_error("conformal_from_geodesic: u must lie in [0, pi)");
  return std::tan(0.5 * u);
}

// ---------------------------------------------------------------------------
// Immersion
// ---------------------------------------------------------------------------

double profile_height(double u, double amplitude) {
  if (!std::isfinite(u) || u < 0.0 || u > kPi)
    throw std::domain_error("profile_height: u must lie in [0, pi]");
  if (!std::isfinite(amplitude) || amplitude < 0.0 || amplitude >= 1.0)
    throw std::domain_error("profile_height: amplitude must lie in [0, 1)");
  return integrate([amplitude](double t) { return profile_slope(amplitude, t); }, 0.0, u, 1e-14);
}

Point3 immerse_geodesic(const FootballParams& p, const GeodesicCoord& c) {
  // Exact pole images: sin(pi) is not exactly zero in floating point.
  if (c.u == 0.0) return {0.0, 0.0, 0.0};
  if (c.u == kPi) return {0.0, 0.0, profile_height(kPi, p.amplitude())};
  const double radial = p.amplitude() * std::sin(c.u);
  const double phi = p.winding() * c.theta;
  return {radial * std::cos(phi), radial * std::sin(phi), profile_height(c.u, p.amplitude())};
}

Point3 immerse(const FootballParams& p, const ConformalCoord& c) {
  return immerse_geodesic(p, GeodesicCoord(geodesic_from_conformal(c.r), c.theta));
}

TangentFrame tangent_frame(const FootballParams& p, double u, double theta) {
  if (!(u > 0.0 && u < kPi))
    throw DegenerateFrameError("tangent_frame: theta-circle collapses at the poles");
  const double B = p.amplitude();
  const double lambda = p.winding();
  const double phi = lambda * wrap_angle(theta);
  const double cp = std::cos(phi);
  const double sp = std::sin(phi);
  const double su = std::sin(u);
  const double cu = std::cos(u);
  const double slope = profile_slope(B, u);
  return {
      {B * cu * cp, B * cu * sp, slope},
      {-B * lambda * su * sp, B * lambda * su * cp, 0.0},
      {-slope * cp, -slope * sp, B * cu},
  };
}

FundamentalForms fundamental_forms(const FootballParams& p, double u) {
  if (!(u > 0.0 && u < kPi))
    throw DegenerateFrameError("fundamental_forms: undefined at the poles");
  const double B = p.amplitude();
  const double lambda = p.winding();
  const double su = std::sin(u);
  const double slope = profile_slope(B, u);
  const double g = B * lambda * su;
  return {
      .E = 1.0,
      .F = 0.0,  // r_u . r_theta vanishes identically
      .G = g * g,
      .L = B * su / slope,
      .M = 0.0,  // so does n . r_{u theta}
      .N = lambda * lambda * B * su * slope,
  };
}

double gauss_curvature(const FundamentalForms& ff) {
  const double det = ff.E * ff.G - ff.F * ff.F;
  if (!(det > 0.0)) throw std::domain_error("gauss_curvature: degenerate first form");
  return (ff.L * ff.N - ff.M * ff.M) / det;
}

double mean_curvature(const FootballParams& p, double u) {
  if (!(u > 0.0 && u < kPi))
    throw DegenerateFrameError("mean_curvature: diverges at the poles");
  // Principal curvatures L/E and N/G reduce to k and 1/k with
  // k = B sin u / sqrt(1 - B^2 cos^2 u).
  const double k = p.amplitude() * std::sin(u) / profile_slope(p.amplitude(), u);
  return 0.5 * (k + 1.0 / k);
}

double football_metric_G(double alpha, double s) {
  const double c = alpha * std::sin(s);
  return c * c;
}

// ---------------------------------------------------------------------------
// Conformal densities
// ---------------------------------------------------------------------------

MetricDensity conformal_density(double alpha, const ConformalCoord& z) {
  if (!(alpha > 0.0)) throw std::domain_error("conformal_density: alpha must be positive");
  if (near_integer(alpha, 1e-12))
    throw std::domain_error("conformal_density: integer alpha takes the branched form");
  if (z.r == 0.0 && alpha < 1.0)
    throw std::domain_error("conformal_density: density diverges at r = 0 for alpha < 1");
  const double ra = std::pow(z.r, alpha);
  const double denom = 1.0 + ra * ra;
  const double rad = std::pow(z.r, alpha - 1.0);
  return {4.0 * alpha * alpha * rad * rad / (denom * denom)};
}

MetricDensity conformal_density_integer(int alpha, double b, const ConformalCoord& z) {
  if (alpha < 1) throw std::domain_error("conformal_density_integer: alpha must be >= 1");
  const double a = alpha;
  const double ra = std::pow(z.r, a);
  const double phi = wrap_angle(a * z.theta);
  const double re = ra * std::cos(phi) + b;
  const double im = ra * std::sin(phi);
  const double denom = 1.0 + re * re + im * im;
  const double rad = std::pow(z.r, a - 1.0);
  return {4.0 * a * a * rad * rad / (denom * denom)};
}

// ---------------------------------------------------------------------------
// Twisted-profile construction
// ---------------------------------------------------------------------------

FundamentalForms twisted_profile_forms(const ProfilePair& pp, int lambda, double u) {
  if (lambda < 1) throw std::domain_error("twisted_profile_forms: lambda must be >= 1");
  if (!(u > 0.0 && u < kPi))
    throw DegenerateFrameError("twisted_profile_forms: undefined at the poles");
  const double f = pp.f(u);
  const double fp = pp.f_prime(u);
  const double fpp = pp.f_double_prime(u);
  const double gp = pp.g_prime(u);
  if (!(f > 0.0)) throw std::domain_error("twisted_profile_forms: profile requires f > 0");
  if (!(gp > 0.0)) throw std::domain_error("twisted_profile_forms: profile requires g' > 0");
  if (std::fabs(fp * fp + gp * gp - 1.0) > 1e-12)
    throw std::domain_error("twisted_profile_forms: profile is not unit speed");
  const double lf = lambda * f;
  return {
      .E = 1.0,
      .F = 0.0,
      .G = lf * lf,
      .L = -fpp / gp,
      .M = 0.0,
      .N = lambda * lambda * f * gp,
  };
}

ProfilePair solve_profile(double amplitude) {
  if (!(amplitude > 0.0 && amplitude < 1.0) || !std::isfinite(amplitude))
    throw std::domain_error("solve_profile: amplitude must lie in (0, 1)");
  return {
      .f = [amplitude](double u) { return amplitude * std::sin(u); },
      .f_prime = [amplitude](double u) { return amplitude * std::cos(u); },
      .f_double_prime = [amplitude](double u) { return -amplitude * std::sin(u); },
      .g_prime = [amplitude](double u) { return profile_slope(amplitude, u); },
  };
}

}  // namespace football
