#include "football/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <type_traits>
#include <utility>

#include "json.hpp"

#include "football/quadrature.hpp"

namespace football {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_grid(const GridSpec& grid, const char* where) {
  if (grid.nu < 2 || grid.ntheta < 2)
    throw std::domain_error(std::string(where) + ": grid dimensions must be at least 2");
}

// Top 53 bits as a uniform double in [0, 1); standard-library distributions
// are not portable across implementations, this is.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1p-53;
}

// |got - want| normalized by max(1, |want|), so small targets are compared
// absolutely and large ones relatively.
double mixed_err(double got, double want) {
  return std::fabs(got - want) / std::max(1.0, std::fabs(want));
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

template <class Est>
double richardson2(const Est& estimate, double eps) {
  const double a0 = estimate(eps);
  const double a1 = estimate(eps / 2.0);
  const double a2 = estimate(eps / 4.0);
  const double b0 = (4.0 * a1 - a0) / 3.0;
  const double b1 = (4.0 * a2 - a1) / 3.0;
  return (16.0 * b1 - b0) / 15.0;
}

constexpr std::uint64_t kSweepSeed = 0x666f6f7462616c6cULL;

}  // namespace

CheckResult make_check(std::string name, double measured, double expected, double tolerance) {
  const bool pass = std::fabs(measured - expected) <= tolerance;  // false for NaN
  return {std::move(name), measured, expected, tolerance, pass};
}

std::string report_to_json(const VerifyReport& report) {
  nlohmann::ordered_json doc;
  std::visit(
      [&doc](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        nlohmann::ordered_json params;
        if constexpr (std::is_same_v<T, FootballParams>) {
          params["family"] = "football";
          params["B"] = p.amplitude();
          params["lambda"] = p.winding();
          params["alpha"] = p.alpha();
        } else {
          params["family"] = "branched";
          params["alpha"] = p.alpha;
          params["b"] = p.b;
        }
        doc["params"] = std::move(params);
      },
      report.params);
  auto& checks = doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"measured", c.measured},
                      {"expected", c.expected},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  doc["all_pass"] = report.all_pass;
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Cone angles
// ---------------------------------------------------------------------------

double cone_angle_estimate(const FootballParams& p, Pole pole, double eps) {
  if (!(eps > 0.0 && eps < kPi) || !std::isfinite(eps))
    throw std::domain_error("cone_angle_estimate: epsilon must lie in (0, pi)");
  // Circumference of u = eps (resp. u = pi - eps) over radius eps; the two
  // poles give the same value because sin(pi - eps) = sin(eps).
  (void)pole;
  return kTwoPi * p.alpha() * std::sin(eps) / eps;
}

double cone_angle_estimate(const BranchParams& bp, Pole pole, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw std::domain_error("cone_angle_estimate: epsilon must be positive");
  // In the chart around the chosen singularity, circumference of |z| = eps
  // divided by the metric length of the radial segment [0, eps].
  const auto density = [&bp, pole](Complex z) {
    return pole == Pole::origin ? branched_density(z, bp).value
                                : branched_density_infinity_chart(z, bp).value;
  };
  const double circumference =
      eps * integrate([&](double t) { return std::sqrt(density(std::polar(eps, t))); }, 0.0,
                      kTwoPi, 1e-14);
  const double radius =
      integrate([&](double t) { return std::sqrt(density(Complex{t, 0.0})); }, 0.0, eps, 1e-15);
  if (!(radius > 0.0)) throw std::domain_error("cone_angle_estimate: degenerate radial distance");
  return circumference / radius;
}

double cone_angle_richardson(const FootballParams& p, Pole pole, double eps) {
  return richardson2([&](double e) { return cone_angle_estimate(p, pole, e); }, eps);
}

double cone_angle_richardson(const BranchParams& bp, Pole pole, double eps) {
  return richardson2([&](double e) { return cone_angle_estimate(bp, pole, e); }, eps);
}

// ---------------------------------------------------------------------------
// Area, covering, meridian
// ---------------------------------------------------------------------------

double total_parametric_area(const FootballParams& p, const GridSpec& grid, Exec exec) {
  require_grid(grid, "total_parametric_area");
  const double du = kPi / grid.nu;
  const double dtheta = kTwoPi / grid.ntheta;
  const double cell = du * dtheta;
  return kernels::grid_sum(exec, grid.nu, grid.ntheta, [&](std::int64_t i, std::int64_t) {
    const double u = (static_cast<double>(i) + 0.5) * du;
    const FundamentalForms ff = fundamental_forms(p, u);
    return std::sqrt(ff.E * ff.G - ff.F * ff.F) * cell;
  });
}

double covering_multiplicity_check(const FootballParams& p, const GridSpec& grid, Exec exec) {
  require_grid(grid, "covering_multiplicity_check");
  const double shift = kTwoPi / p.winding();
  return kernels::grid_max(exec, grid.nu, grid.ntheta, [&](std::int64_t i, std::int64_t j) {
    const double u = kPi * (static_cast<double>(i) + 0.5) / grid.nu;
    const double r = conformal_from_geodesic(u);
    const double theta = kTwoPi * static_cast<double>(j) / grid.ntheta;
    const Point3 a = immerse(p, ConformalCoord(r, theta));
    const Point3 b = immerse(p, ConformalCoord(r, theta + shift));
    return norm(b - a);
  });
}

double meridian_length(const FootballParams&) {
  // Meridians are unit speed: integral of sqrt(E) = 1 over [0, pi].
  return kPi;
}

double meridian_polyline_length(const FootballParams& p, int segments, double theta, Exec exec) {
  if (segments < 1) throw std::domain_error("meridian_polyline_length: need at least one segment");
  const std::int64_t n = segments;
  std::vector<Point3> pts(static_cast<std::size_t>(n) + 1);
  kernels::index_for(exec, n + 1, [&](std::int64_t i) {
    const double u = (i == n) ? kPi : kPi * static_cast<double>(i) / static_cast<double>(n);
    pts[static_cast<std::size_t>(i)] = immerse_geodesic(p, GeodesicCoord(u, theta));
  });
  std::vector<double> len(static_cast<std::size_t>(n));
  kernels::index_for(exec, n, [&](std::int64_t i) {
    len[static_cast<std::size_t>(i)] =
        norm(pts[static_cast<std::size_t>(i) + 1] - pts[static_cast<std::size_t>(i)]);
  });
  return std::accumulate(len.begin(), len.end(), 0.0);
}

double euclidean_pole_gap(const FootballParams& p) {
  return norm(immerse_geodesic(p, GeodesicCoord(kPi, 0.0)) -
              immerse_geodesic(p, GeodesicCoord(0.0, 0.0)));
}

// ---------------------------------------------------------------------------
// Full suites
// ---------------------------------------------------------------------------

namespace {

// Appends one check; a body that throws is recorded as a failure with NaN
// measurement so the suite keeps going.
template <class Body>
void run_check(std::vector<CheckResult>& checks, const char* name, double expected,
               double tolerance, const Body& body) {
  double measured = kNaN;
  try {
    measured = body();
  } catch (const std::exception&) {
  }
  checks.push_back(make_check(name, measured, expected, tolerance));
}

bool aggregate(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

}  // namespace

VerifyReport verify_all(const FootballParams& p, const GridSpec& grid, double cone_eps) {
  require_grid(grid, "verify_all");
  const double B = p.amplitude();
  const double alpha = p.alpha();
  const std::int64_t nu = grid.nu;
  const std::int64_t ntheta = grid.ntheta;
  std::vector<CheckResult> checks;

  // Guard band keeps every finite-difference stencil inside (0, pi).
  const double guard = std::max(1e-3, 2.0 * grid.h);
  const bool fd_ok = std::isfinite(grid.h) && grid.h > 0.0 && guard < kPi / 2.0;
  const auto u_interior = [&](std::int64_t i, std::int64_t count, double band) {
    return band + (kPi - 2.0 * band) * (static_cast<double>(i) + 0.5) / static_cast<double>(count);
  };
  const auto theta_at = [&](std::int64_t j) {
    return kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(ntheta);
  };
  const auto surface = [&p](double u, double theta) {
    return immerse_geodesic(p, GeodesicCoord(u, theta));
  };

  run_check(checks, "fd_step_within_precision_range", 0.0, 1e-2, [&] {
    if (!(grid.h > 0.0) || !std::isfinite(grid.h))
      throw std::domain_error("verify_all: step must be positive");
    return grid.h;
  });
  run_check(checks, "cone_eps_within_precision_range", 0.0, 1e-2, [&] {
    if (!(cone_eps > 0.0) || !std::isfinite(cone_eps))
      throw std::domain_error("verify_all: epsilon must be positive");
    return cone_eps;
  });

  run_check(checks, "coordinate_roundtrip_max_error", 0.0, 1e-14, [&] {
    const std::int64_t n = nu * ntheta;
    std::vector<double> err(static_cast<std::size_t>(n));
    kernels::index_for(Exec::parallel, n, [&](std::int64_t k) {
      const double u = kPi * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
      const double eu = std::fabs(geodesic_from_conformal(conformal_from_geodesic(u)) - u);
      // r-direction deviation, scaled back by dr/du = (1 + r^2) / 2.
      const double r = std::exp(-9.0 + 23.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(n));
      const double rt = conformal_from_geodesic(geodesic_from_conformal(r));
      const double er = std::fabs(rt - r) * 2.0 / (1.0 + r * r);
      err[static_cast<std::size_t>(k)] = std::max(eu, er);
    });
    return max_of(err);
  });

  run_check(checks, "profile_height_bounds_violation", 0.0, 1e-12, [&] {
    const std::int64_t n = std::min<std::int64_t>(nu * ntheta, 4096);
    const double floor_slope = std::sqrt(1.0 - B * B);
    std::vector<double> height(static_cast<std::size_t>(n) + 1);
    std::vector<double> viol(static_cast<std::size_t>(n) + 1);
    kernels::index_for(Exec::parallel, n + 1, [&](std::int64_t k) {
      const double u = (k == n) ? kPi : kPi * static_cast<double>(k) / static_cast<double>(n);
      const double v = profile_height(u, B);
      height[static_cast<std::size_t>(k)] = v;
      viol[static_cast<std::size_t>(k)] = std::max(u * floor_slope - v, v - u);
    });
    double worst = max_of(viol);
    for (std::int64_t k = 0; k < n; ++k)
      worst = std::max(worst, height[static_cast<std::size_t>(k)] -
                                  height[static_cast<std::size_t>(k) + 1]);
    return std::max(worst, 0.0);
  });

  // One sweep serves the three first-form checks.
  double ff_e = kNaN, ff_f = kNaN, ff_g = kNaN;
  if (fd_ok) {
    std::vector<double> pe(static_cast<std::size_t>(nu));
    std::vector<double> pf(static_cast<std::size_t>(nu));
    std::vector<double> pg(static_cast<std::size_t>(nu));
    kernels::index_for(Exec::parallel, nu, [&](std::int64_t i) {
      const double u = u_interior(i, nu, guard);
      const double want_g = football_metric_G(alpha, u);
      const double scale_f = std::max(1.0, std::sqrt(want_g));
      const double scale_g = std::max(1.0, want_g);
      double me = 0.0, mf = 0.0, mg = 0.0;
      for (std::int64_t j = 0; j < ntheta; ++j) {
        const MetricCoeffs mc = numeric_first_form(surface, u, theta_at(j), grid.h);
        me = std::max(me, std::fabs(mc.E - 1.0));
        mf = std::max(mf, std::fabs(mc.F) / scale_f);
        mg = std::max(mg, std::fabs(mc.G - want_g) / scale_g);
      }
      pe[static_cast<std::size_t>(i)] = me;
      pf[static_cast<std::size_t>(i)] = mf;
      pg[static_cast<std::size_t>(i)] = mg;
    });
    ff_e = max_of(pe);
    ff_f = max_of(pf);
    ff_g = max_of(pg);
  }
  run_check(checks, "first_form_E_max_error", 0.0, 1e-6, [&] { return ff_e; });
  run_check(checks, "first_form_F_max_error", 0.0, 1e-6, [&] { return ff_f; });
  run_check(checks, "first_form_G_max_error", 0.0, 1e-6, [&] { return ff_g; });

  run_check(checks, "second_form_weingarten_max_error", 0.0, 1e-6, [&] {
    // Rotation rates of the closed-form normal against the closed-form
    // tangents; the theta step shrinks with lambda to resolve cos(lambda t).
    const double hu = 1e-4;
    const double ht = hu / p.winding();
    const double band = 1e-3;
    return kernels::grid_max(Exec::parallel, nu, ntheta, [&](std::int64_t i, std::int64_t j) {
      const double u = u_interior(i, nu, band);
      const double t = theta_at(j);
      const FundamentalForms want = fundamental_forms(p, u);
      const TangentFrame fr = tangent_frame(p, u, t);
      const Point3 dn_u =
          (tangent_frame(p, u + hu, t).normal - tangent_frame(p, u - hu, t).normal) * (0.5 / hu);
      const Point3 dn_t =
          (tangent_frame(p, u, t + ht).normal - tangent_frame(p, u, t - ht).normal) * (0.5 / ht);
      double e = mixed_err(-dot(dn_u, fr.d_u), want.L);
      e = std::max(e, mixed_err(-dot(dn_u, fr.d_theta), want.M));
      e = std::max(e, mixed_err(-dot(dn_t, fr.d_u), want.M));
      e = std::max(e, mixed_err(-dot(dn_t, fr.d_theta), want.N));
      return e;
    });
  });

  run_check(checks, "frame_invariants_max_error", 0.0, 1e-12, [&] {
    std::mt19937_64 rng(kSweepSeed);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const double u = 1e-3 + (kPi - 2e-3) * uniform01(rng);
      const double t = kTwoPi * uniform01(rng);
      const TangentFrame fr = tangent_frame(p, u, t);
      const double g = football_metric_G(alpha, u);
      double e = std::fabs(norm(fr.d_u) - 1.0);
      e = std::max(e, std::fabs(dot(fr.d_u, fr.d_theta)));
      e = std::max(e, mixed_err(norm_squared(fr.d_theta), g));
      e = std::max(e, std::fabs(norm(fr.normal) - 1.0));
      e = std::max(e, std::fabs(dot(fr.normal, fr.d_u)));
      e = std::max(e, std::fabs(dot(fr.normal, fr.d_theta)));
      // Orientation: <r_u x r_theta, n> = sqrt(EG - F^2) = sqrt(G) > 0.
      e = std::max(e, mixed_err(dot(cross(fr.d_u, fr.d_theta), fr.normal), std::sqrt(g)));
      worst = std::max(worst, e);
    }
    return worst;
  });

  run_check(checks, "metric_match_G_max_error", 0.0, 1e-14, [&] {
    std::vector<double> err(static_cast<std::size_t>(nu));
    kernels::index_for(Exec::parallel, nu, [&](std::int64_t i) {
      const double u = u_interior(i, nu, 1e-3);
      err[static_cast<std::size_t>(i)] =
          mixed_err(fundamental_forms(p, u).G, football_metric_G(alpha, u));
    });
    return max_of(err);
  });

  run_check(checks, "twisted_profile_consistency_max_error", 0.0, 1e-12, [&] {
    const ProfilePair pp = solve_profile(B);
    std::vector<double> err(static_cast<std::size_t>(nu));
    kernels::index_for(Exec::parallel, nu, [&](std::int64_t i) {
      const double u = u_interior(i, nu, 1e-3);
      const FundamentalForms got = twisted_profile_forms(pp, p.winding(), u);
      const FundamentalForms want = fundamental_forms(p, u);
      double e = mixed_err(got.E, want.E);
      e = std::max(e, mixed_err(got.F, want.F));
      e = std::max(e, mixed_err(got.G, want.G));
      e = std::max(e, mixed_err(got.L, want.L));
      e = std::max(e, mixed_err(got.M, want.M));
      e = std::max(e, mixed_err(got.N, want.N));
      err[static_cast<std::size_t>(i)] = e;
    });
    return max_of(err);
  });

  run_check(checks, "gauss_curvature_analytic_max_error", 0.0, 1e-12, [&] {
    std::mt19937_64 rng(kSweepSeed + 1);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const double u = 1e-3 + (kPi - 2e-3) * uniform01(rng);
      worst = std::max(worst, std::fabs(gauss_curvature(fundamental_forms(p, u)) - 1.0));
    }
    return worst;
  });

  run_check(checks, "gauss_curvature_numeric_max_error", 0.0, 1e-4, [&] {
    const double h = 1e-4;
    std::vector<double> err(static_cast<std::size_t>(nu));
    kernels::index_for(Exec::parallel, nu, [&](std::int64_t i) {
      const double u = u_interior(i, nu, 1e-3);
      const double k = numeric_gauss_curvature(
          [&](double v) { return football_metric_G(alpha, v); }, u, h);
      err[static_cast<std::size_t>(i)] = std::fabs(k - 1.0);
    });
    return max_of(err);
  });

  const double h_bound = 0.5 * (B + 1.0 / B);
  run_check(checks, "mean_curvature_bound_violation", 0.0, 1e-12, [&] {
    std::vector<double> deficit(static_cast<std::size_t>(nu * ntheta));
    kernels::index_for(Exec::parallel, nu * ntheta, [&](std::int64_t k) {
      const double u = u_interior(k, nu * ntheta, 1e-3);
      deficit[static_cast<std::size_t>(k)] = h_bound - mean_curvature(p, u);
    });
    return std::max(max_of(deficit), 0.0);
  });

  run_check(checks, "mean_curvature_equator_error", 0.0, 1e-10,
            [&] { return std::fabs(mean_curvature(p, kPi / 2.0) - h_bound); });

  run_check(checks, "meridian_length_identity", kPi, 0.0, [&] { return meridian_length(p); });

  run_check(checks, "meridian_polyline_error", 0.0, 1e-4,
            [&] { return std::fabs(meridian_polyline_length(p, 10000) - kPi); });

  run_check(checks, "pole_gap", profile_height(kPi, B), 1e-12,
            [&] { return euclidean_pole_gap(p); });

  run_check(checks, "pole_gap_strictly_inside", 1.0, 0.0,
            [&] { return euclidean_pole_gap(p) < kPi ? 1.0 : 0.0; });

  run_check(checks, "covering_multiplicity_max_deviation", 0.0, 1e-12,
            [&] { return covering_multiplicity_check(p, grid); });

  const double target_area = 2.0 * kTwoPi * alpha;
  run_check(checks, "parametric_area", target_area, 1e-3 * target_area,
            [&] { return total_parametric_area(p, grid); });

  const double target_angle = kTwoPi * alpha;
  run_check(checks, "cone_angle_origin", target_angle, 1e-4 * target_angle,
            [&] { return cone_angle_richardson(p, Pole::origin, cone_eps); });
  run_check(checks, "cone_angle_infinity", target_angle, 1e-4 * target_angle,
            [&] { return cone_angle_richardson(p, Pole::infinity, cone_eps); });

  const bool all_pass = aggregate(checks);
  return {p, std::move(checks), all_pass};
}

VerifyReport verify_all(const BranchParams& bp, const GridSpec& grid, double cone_eps) {
  require_grid(grid, "verify_all");
  const double alpha = bp.alpha;
  const std::int64_t nr = grid.nu;
  const std::int64_t ntheta = grid.ntheta;
  std::vector<CheckResult> checks;

  // Radial samples, geometric on [0.1, 10]; steps scale with max(r, 1) so the
  // stencil never crosses r = 0.
  const bool fd_ok = std::isfinite(grid.h) && grid.h > 0.0 && grid.h < 5e-2;
  const auto r_at = [&](std::int64_t i) {
    return 0.1 * std::pow(100.0, (static_cast<double>(i) + 0.5) / static_cast<double>(nr));
  };
  const auto theta_at = [&](std::int64_t j) {
    return kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(ntheta);
  };
  const auto surface = [&bp](double r, double theta) {
    return branched_immersion(std::polar(r, theta), bp);
  };

  run_check(checks, "fd_step_within_precision_range", 0.0, 1e-2, [&] {
    if (!(grid.h > 0.0) || !std::isfinite(grid.h))
      throw std::domain_error("verify_all: step must be positive");
    return grid.h;
  });
  run_check(checks, "cone_eps_within_precision_range", 0.0, 1e-2, [&] {
    if (!(cone_eps > 0.0) || !std::isfinite(cone_eps))
      throw std::domain_error("verify_all: epsilon must be positive");
    return cone_eps;
  });

  run_check(checks, "sphere_constraint_max_error", 0.0, 1e-14, [&] {
    return kernels::grid_max(Exec::parallel, nr, ntheta, [&](std::int64_t i, std::int64_t j) {
      return std::fabs(norm_squared(surface(r_at(i), theta_at(j))) - 1.0);
    });
  });

  // One sweep serves the three pullback checks: the numeric first form in
  // polar coordinates must match rho * (dr^2 + r^2 dtheta^2).
  double pb_e = kNaN, pb_f = kNaN, pb_g = kNaN;
  if (fd_ok) {
    std::vector<double> pe(static_cast<std::size_t>(nr));
    std::vector<double> pf(static_cast<std::size_t>(nr));
    std::vector<double> pg(static_cast<std::size_t>(nr));
    kernels::index_for(Exec::parallel, nr, [&](std::int64_t i) {
      const double r = r_at(i);
      const double h = grid.h * std::max(r, 1.0);
      double me = 0.0, mf = 0.0, mg = 0.0;
      for (std::int64_t j = 0; j < ntheta; ++j) {
        const double t = theta_at(j);
        const double rho = branched_density(std::polar(r, t), bp).value;
        const MetricCoeffs mc = numeric_first_form(surface, r, t, h);
        me = std::max(me, std::fabs(mc.E - rho) / rho);
        mf = std::max(mf, std::fabs(mc.F) / (rho * r));
        mg = std::max(mg, std::fabs(mc.G - rho * r * r) / (rho * r * r));
      }
      pe[static_cast<std::size_t>(i)] = me;
      pf[static_cast<std::size_t>(i)] = mf;
      pg[static_cast<std::size_t>(i)] = mg;
    });
    pb_e = max_of(pe);
    pb_f = max_of(pf);
    pb_g = max_of(pg);
  }
  run_check(checks, "pullback_E_max_rel_error", 0.0, 1e-6, [&] { return pb_e; });
  run_check(checks, "pullback_F_max_rel_error", 0.0, 1e-6, [&] { return pb_f; });
  run_check(checks, "pullback_G_max_rel_error", 0.0, 1e-6, [&] { return pb_g; });

  run_check(checks, "density_match_max_rel_error", 0.0, 1e-13, [&] {
    // Complex-arithmetic route against the componentwise trigonometric route.
    return kernels::grid_max(Exec::parallel, nr, ntheta, [&](std::int64_t i, std::int64_t j) {
      const double r = r_at(i);
      const double t = theta_at(j);
      const double got = branched_density(std::polar(r, t), bp).value;
      const double want = conformal_density_integer(bp.alpha, bp.b, ConformalCoord(r, t)).value;
      return std::fabs(got - want) / want;
    });
  });

  run_check(checks, "infinity_chart_match_max_rel_error", 0.0, 1e-12, [&] {
    // rho_inf(zeta) = rho(1/zeta) / |zeta|^4 with zeta = 1/z.
    return kernels::grid_max(Exec::parallel, nr, ntheta, [&](std::int64_t i, std::int64_t j) {
      const Complex z = std::polar(r_at(i), theta_at(j));
      const Complex zeta = 1.0 / z;
      const double got = branched_density_infinity_chart(zeta, bp).value;
      const double want = branched_density(z, bp).value * std::pow(std::abs(z), 4.0);
      return std::fabs(got - want) / want;
    });
  });

  run_check(checks, "power_map_derivative_max_rel_error", 0.0, 1e-6, [&] {
    return kernels::grid_max(Exec::parallel, nr, ntheta, [&](std::int64_t i, std::int64_t j) {
      const double r = r_at(i);
      const Complex z = std::polar(r, theta_at(j));
      const double h = 1e-6 * std::max(r, 1.0);
      const Complex d = (tau(z + h, bp) - tau(z - h, bp)) / (2.0 * h);
      const double want = alpha * std::pow(r, alpha - 1.0);
      return std::fabs(std::abs(d) - want) / want;
    });
  });

  run_check(checks, "deck_invariance_max_deviation", 0.0, 1e-12, [&] {
    // tau, hence the immersion, is invariant under z -> z * exp(2 pi i / alpha).
    const Complex turn = std::polar(1.0, kTwoPi / alpha);
    return kernels::grid_max(Exec::parallel, nr, ntheta, [&](std::int64_t i, std::int64_t j) {
      const Complex z = std::polar(r_at(i), theta_at(j));
      return norm(branched_immersion(z * turn, bp) - branched_immersion(z, bp));
    });
  });

  const double target_area = 2.0 * kTwoPi * alpha;
  run_check(checks, "parametric_area", target_area, 1e-2 * target_area, [&] {
    // Midpoint rule for the density area element rho r dr dtheta, taken in
    // log radius over [1e-2, 1e2]; the truncated tails are O(1e-7).
    const double t_lo = std::log(1e-2);
    const double t_hi = std::log(1e2);
    const double dt = (t_hi - t_lo) / static_cast<double>(nr);
    const double dtheta = kTwoPi / static_cast<double>(ntheta);
    return kernels::grid_sum(Exec::parallel, nr, ntheta, [&](std::int64_t i, std::int64_t j) {
      const double r = std::exp(t_lo + (static_cast<double>(i) + 0.5) * dt);
      const double rho = branched_density(std::polar(r, theta_at(j)), bp).value;
      return rho * r * r * dt * dtheta;
    });
  });

  const double target_angle = kTwoPi * alpha;
  run_check(checks, "cone_angle_origin", target_angle, 1e-4 * target_angle,
            [&] { return cone_angle_richardson(bp, Pole::origin, cone_eps); });
  run_check(checks, "cone_angle_infinity", target_angle, 1e-4 * target_angle,
            [&] { return cone_angle_richardson(bp, Pole::infinity, cone_eps); });

  const bool all_pass = aggregate(checks);
  return {bp, std::move(checks), all_pass};
}

}  // namespace football
