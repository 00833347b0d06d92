#pragma once

#include <complex>

#include "football/geometry.hpp"

// The integer-angle metrics that are not footballs: compose the power map
// tau(z) = z^alpha + b with the inverse stereographic embedding of the round
// sphere.  The composition is an isometric immersion for the metric whose
// density branched_density returns.

namespace football {

using Complex = std::complex<double>;

struct BranchParams {
  int alpha;  // branching order; alpha >= 2 for a genuine cone, 1 for smoke tests
  double b;   // real translation constant

  BranchParams(int alpha_, double b_);
};

// z^alpha + b evaluated in modulus-argument form (|z|^alpha, alpha*arg z),
// with the argument reduced mod 2*pi before the trig calls; avoids the
// cancellation of repeated complex squaring for large alpha.
Complex tau(Complex z, const BranchParams& bp);

// (2 Re w, 2 Im w, |w|^2 - 1) / (1 + |w|^2): the unit-sphere point whose
// stereographic image from the north pole is w.  Finite w only; when |w|^2
// overflows the north-pole limit (0, 0, 1) is returned.
Point3 inverse_stereographic(Complex w);

// The immersion: inverse_stereographic(tau(z, bp)).
Point3 branched_immersion(Complex z, const BranchParams& bp);

// Image of the point z = infinity (which no finite coordinate reaches): the
// north pole (0, 0, 1).
Point3 branched_immersion_at_infinity();

// Pullback of the round metric under tau:
//   4 alpha^2 |z|^{2(alpha-1)} / (1 + |z^alpha + b|^2)^2.
// At z = 0 with alpha >= 2 the density vanishes (the cone point), which is
// returned as 0 rather than treated as an error.
MetricDensity branched_density(Complex z, const BranchParams& bp);

// The same metric written in the chart zeta = 1/z around infinity:
//   4 alpha^2 |zeta|^{2(alpha-1)} / (|zeta|^{2 alpha} + |1 + b zeta^alpha|^2)^2,
// conical of angle 2*pi*alpha at zeta = 0.
MetricDensity branched_density_infinity_chart(Complex zeta, const BranchParams& bp);

}  // namespace football
