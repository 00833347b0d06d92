#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

// Closed-form evaluation of a family of constant-curvature-one surfaces of
// twisted-profile type: each surface is the image of
//
//   (u, theta) |-> (f(u) cos(lambda*theta), f(u) sin(lambda*theta), g(u)),
//
// with f(u) = B sin u and g'(u) = sqrt(1 - B^2 cos^2 u), inducing the metric
// du^2 + (lambda*B)^2 sin^2(u) dtheta^2 on (0, pi) x [0, 2pi).  The intrinsic
// metric is a sphere with two antipodal cone points of angle 2*pi*lambda*B.

namespace football {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Thrown where the theta-circle collapses (sin u = 0): the coordinate frame
// degenerates and frames, forms and curvatures are undefined.
class DegenerateFrameError : public std::domain_error {
  using std::domain_error::domain_error;
};

// Reduce an angle to [0, 2*pi).
inline double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

// ---------------------------------------------------------------------------
// Point3
// ---------------------------------------------------------------------------

struct Point3 {
  double x{0.0};
  double y{0.0};
  double z{0.0};
};

inline Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point3 operator*(const Point3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }
inline Point3 operator*(double s, const Point3& a) { return a * s; }

inline double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3 cross(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm_squared(const Point3& a) { return dot(a, a); }
inline double norm(const Point3& a) { return std::sqrt(norm_squared(a)); }
inline bool finite(const Point3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

// ---------------------------------------------------------------------------
// Parameters and coordinates
// ---------------------------------------------------------------------------

// The (amplitude, winding) pair that fixes one surface of the family.
//   amplitude  B in (0, 1): radius of the profile curve f(u) = B sin u.
//   winding    lambda >= 1: how many times the profile sweeps around the axis.
// The cone-angle factor alpha = lambda * B is always derived, never stored,
// so the integrality constraint lambda = alpha / B cannot drift.
class FootballParams {
 public:
  FootballParams(double amplitude, int winding);

  // Builds from (alpha, amplitude); requires alpha / amplitude to be a
  // positive integer within 1e-9, the winding number.
  static FootballParams from_alpha(double alpha, double amplitude);

  [[nodiscard]] double amplitude() const noexcept { return amplitude_; }
  [[nodiscard]] int winding() const noexcept { return winding_; }

  // Cone angle divided by 2*pi at each of the two singular points.
  [[nodiscard]] double alpha() const noexcept { return winding_ * amplitude_; }

 private:
  double amplitude_;
  int winding_;
};

// Geodesic polar coordinates: u is the intrinsic distance from the cone point
// at the origin, theta the angular coordinate.  u = 0 and u = pi are the two
// cone points; most operations require the open interior.
struct GeodesicCoord {
  double u;
  double theta;

  GeodesicCoord(double u_, double theta_);
};

// Polar form of the conformal coordinate z = r * exp(i*theta) on the
// punctured plane; r = 0 is the singular point at the origin.
struct ConformalCoord {
  double r;
  double theta;

  ConformalCoord(double r_, double theta_);
};

struct TangentFrame {
  Point3 d_u;      // dF/du, unit length for this family
  Point3 d_theta;  // dF/dtheta
  Point3 normal;   // unit normal, orthogonal to both
};

// Coefficients of the first (E, F, G) and second (L, M, N) fundamental forms.
// For every surface of this family E = 1, F = 0 and M = 0 identically.
struct FundamentalForms {
  double E;
  double F;
  double G;
  double L;
  double M;
  double N;
};

// A profile curve (f, g) given through the four functions a twisted-profile
// surface needs: f, f', f'' and g'.  Valid profiles have f > 0, g' > 0 and
// f'^2 + g'^2 = 1 on the open interval (0, pi).
struct ProfilePair {
  std::function<double(double)> f;
  std::function<double(double)> f_prime;
  std::function<double(double)> f_double_prime;
  std::function<double(double)> g_prime;
};

// Conformal factor e^{2*phi} of a metric written as e^{2*phi} |dz|^2.
struct MetricDensity {
  double value;
};

// ---------------------------------------------------------------------------
// Coordinate changes
// ---------------------------------------------------------------------------

// u = 2 * arctan(r), mapping [0, inf) onto [0, pi).  Strictly increasing.
double geodesic_from_conformal(double r);

// r = tan(u / 2), the inverse of geodesic_from_conformal on [0, pi).
double conformal_from_geodesic(double u);

// ---------------------------------------------------------------------------
// The immersion and its differential geometry
// ---------------------------------------------------------------------------

// Slope g'(u) = sqrt(1 - B^2 cos^2 u) of the profile curve; positive on all
// of [0, pi] whenever B < 1.
double profile_slope(double amplitude, double u);

// Height of the profile curve: integral of sqrt(1 - B^2 cos^2 t) over [0, u],
// by adaptive quadrature with absolute error below 1e-12.  Monotone in u and
// bounded by u * sqrt(1 - B^2) <= height <= u.  Accepts B = 0 (plain arc
// length) for limiting checks; requires u in [0, pi] and B in [0, 1).
double profile_height(double u, double amplitude);

// Image of a geodesic-coordinate point.  Accepts the boundary values
// u = 0 and u = pi and returns the exact pole images there.
Point3 immerse_geodesic(const FootballParams& p, const GeodesicCoord& c);

// Image of a conformal-coordinate point: composition with u = 2 * arctan(r).
// immerse(p, {r=0}) is the origin; the r -> inf limit is the opposite pole.
Point3 immerse(const FootballParams& p, const ConformalCoord& c);

// First-order data at an interior point: coordinate tangents and the unit
// normal.  Throws DegenerateFrameError on the boundary u in {0, pi}.
TangentFrame tangent_frame(const FootballParams& p, double u, double theta);

// All six form coefficients at interior u (they do not depend on theta):
//   E = 1, F = 0, G = (B*lambda)^2 sin^2 u,
//   L = B sin u / sqrt(1 - B^2 cos^2 u), M = 0,
//   N = lambda^2 B sin u sqrt(1 - B^2 cos^2 u).
FundamentalForms fundamental_forms(const FootballParams& p, double u);

// K = (L*N - M^2) / (E*G - F^2); requires a nondegenerate first form.
double gauss_curvature(const FundamentalForms& ff);

// H = (L/E + N/G) / 2 at interior u.  Bounded below by (B + 1/B)/2 > 1,
// with equality exactly at the equator u = pi/2; diverges at the poles.
double mean_curvature(const FootballParams& p, double u);

// The dtheta^2 coefficient (alpha * sin s)^2 of the intrinsic cone metric
// ds^2 = du^2 + (alpha sin u)^2 dtheta^2.
double football_metric_G(double alpha, double s);

// ---------------------------------------------------------------------------
// Conformal densities of the two-cone metrics
// ---------------------------------------------------------------------------

// Non-integer alpha: density 4 alpha^2 r^{2(alpha-1)} / (1 + r^{2 alpha})^2.
// Throws for integer alpha and for r = 0 when alpha < 1 (density diverges).
MetricDensity conformal_density(double alpha, const ConformalCoord& z);

// Integer alpha with translation constant b:
//   4 alpha^2 r^{2(alpha-1)} / (1 + |z^alpha + b|^2)^2,
// where |z^alpha + b|^2 = (r^alpha cos(alpha theta) + b)^2
//                       + (r^alpha sin(alpha theta))^2.
MetricDensity conformal_density_integer(int alpha, double b, const ConformalCoord& z);

// ---------------------------------------------------------------------------
// Generic twisted-profile construction
// ---------------------------------------------------------------------------

// Form coefficients of the lambda-twisted surface built on an arbitrary
// admissible profile:
//   E = 1, F = 0, G = (lambda f)^2,
//   L = -f'' / g', M = 0, N = lambda^2 f g'.
// Validates the profile invariants at u before evaluating.
FundamentalForms twisted_profile_forms(const ProfilePair& pp, int lambda, double u);

// The admissible profile with curvature one: f'' + f = 0 with f(0) = f(pi) = 0
// gives f(u) = B sin u and g'(u) = sqrt(1 - B^2 cos^2 u).
ProfilePair solve_profile(double amplitude);

}  // namespace football
