#include "football/branched.hpp"

#include <cmath>

namespace football {

namespace {

// z^n in modulus-argument form, argument reduced mod 2*pi.
Complex polar_power(Complex z, int n) {
  const double r = std::abs(z);
  if (r == 0.0) return {0.0, 0.0};
  const double rho = std::pow(r, static_cast<double>(n));
  const double phi = wrap_angle(n * std::arg(z));
  return {rho * std::cos(phi), rho * std::sin(phi)};
}

}  // namespace

BranchParams::BranchParams(int alpha_, double b_) : alpha(alpha_), b(b_) {
  if (alpha_ < 1) throw std::domain_error("BranchParams: alpha must be a positive integer");
  if (!std::isfinite(b_)) throw std::domain_error("BranchParams: b must be finite");
}

Complex tau(Complex z, const BranchParams& bp) {
  if (!(std::isfinite(z.real()) && std::isfinite(z.imag())))
    throw std::domain_error("tau: z must be finite");
  return polar_power(z, bp.alpha) + Complex{bp.b, 0.0};
}

Point3 inverse_stereographic(Complex w) {
  if (!(std::isfinite(w.real()) && std::isfinite(w.imag())))
    throw std::domain_error("inverse_stereographic: w must be finite");
  const double s = std::norm(w);
  if (!std::isfinite(s)) return {0.0, 0.0, 1.0};  // |w|^2 overflowed: north-pole limit
  const double inv = 1.0 / (1.0 + s);
  return {2.0 * w.real() * inv, 2.0 * w.imag() * inv, (s - 1.0) * inv};
}

Point3 branched_immersion(Complex z, const BranchParams& bp) {
  return inverse_stereographic(tau(z, bp));
}

Point3 branched_immersion_at_infinity() { return {0.0, 0.0, 1.0}; }

MetricDensity branched_density(Complex z, const BranchParams& bp) {
  const double a = bp.alpha;
  const double r = std::abs(z);
  const double denom = 1.0 + std::norm(tau(z, bp));
  const double rad = std::pow(r, a - 1.0);  // pow(0, 0) = 1 covers alpha = 1
  return {4.0 * a * a * rad * rad / (denom * denom)};
}

MetricDensity branched_density_infinity_chart(Complex zeta, const BranchParams& bp) {
  const double a = bp.alpha;
  const double r = std::abs(zeta);
  const double ra = std::pow(r, a);
  const Complex one_plus = 1.0 + bp.b * polar_power(zeta, bp.alpha);
  const double denom = ra * ra + std::norm(one_plus);
  const double rad = std::pow(r, a - 1.0);
  return {4.0 * a * a * rad * rad / (denom * denom)};
}

}  // namespace football
