#include "football/verify.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "football/presets.hpp"

using namespace football;

namespace {

const FootballParams& half_sphere() {  // alpha = 1/2
  static const FootballParams p(0.5, 1);
  return p;
}

const FootballParams& one_sphere() {  // alpha = 1
  static const FootballParams p(0.5, 2);
  return p;
}

const BranchParams& double_cover() {  // alpha = 2, b = 1
  static const BranchParams bp(2, 1.0);
  return bp;
}

}  // namespace

TEST_CASE("numeric first form on closed-form surfaces") {
  SUBCASE("flat plane") {
    auto plane = [](double u, double t) { return Point3{u, t, 0.0}; };
    const MetricCoeffs mc = numeric_first_form(plane, 0.5, 0.25, 0.25);
    CHECK(std::fabs(mc.E - 1.0) < 1e-14);
    CHECK(std::fabs(mc.F) < 1e-14);
    CHECK(std::fabs(mc.G - 1.0) < 1e-14);
  }
  SUBCASE("unit sphere") {
    auto sphere = [](double u, double t) {
      return Point3{std::sin(u) * std::cos(t), std::sin(u) * std::sin(t), std::cos(u)};
    };
    const MetricCoeffs mc = numeric_first_form(sphere, 1.0, 0.5, 1e-5);
    CHECK(std::fabs(mc.E - 1.0) < 1e-9);
    CHECK(std::fabs(mc.F) < 1e-9);
    CHECK(std::fabs(mc.G - std::sin(1.0) * std::sin(1.0)) < 1e-9);
  }
  SUBCASE("football matches its closed-form coefficients") {
    const FootballParams& p = one_sphere();
    auto s = [&](double u, double t) { return immerse_geodesic(p, GeodesicCoord(u, t)); };
    const MetricCoeffs mc = numeric_first_form(s, 1.2, 0.8, 1e-5);
    const FundamentalForms want = fundamental_forms(p, 1.2);
    CHECK(std::fabs(mc.E - want.E) < 1e-6);
    CHECK(std::fabs(mc.F - want.F) < 1e-6);
    CHECK(std::fabs(mc.G - want.G) < 1e-6);
  }
  SUBCASE("step validation") {
    auto plane = [](double u, double t) { return Point3{u, t, 0.0}; };
    CHECK_THROWS_AS(numeric_first_form(plane, 0.0, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(numeric_first_form(plane, 0.0, 0.0, -1e-3), std::domain_error);
    CHECK_THROWS_AS(numeric_first_form(plane, 0.0, 0.0, std::nan("")), std::domain_error);
  }
}

TEST_CASE("finite differences converge at second order on the first form") {
  const FootballParams& p = one_sphere();
  auto s = [&](double u, double t) { return immerse_geodesic(p, GeodesicCoord(u, t)); };
  const double u = 1.0, t = 0.7;
  const FundamentalForms want = fundamental_forms(p, u);
  auto err_at = [&](double h) {
    const MetricCoeffs mc = numeric_first_form(s, u, t, h);
    double e = std::fabs(mc.E - want.E);
    e = std::max(e, std::fabs(mc.F - want.F));
    return std::max(e, std::fabs(mc.G - want.G));
  };
  // Factor >= 3 per halving while truncation dominates; below ~1e-4 the
  // rounding floor of binary64 position data takes over.
  double prev = err_at(1e-3);
  for (double h : {5e-4, 2.5e-4, 1.25e-4}) {
    const double cur = err_at(h);
    CHECK(prev / cur >= 3.0);
    prev = cur;
  }
}

TEST_CASE("numeric Gauss curvature from the metric coefficient") {
  SUBCASE("round metrics have curvature one") {
    for (double alpha : {0.5, 1.0, 2.0}) {
      const double k = numeric_gauss_curvature(
          [&](double u) { return football_metric_G(alpha, u); }, kPi / 3.0, 1e-4);
      CHECK(std::fabs(k - 1.0) < 1e-6);
    }
  }
  SUBCASE("flat and hyperbolic references") {
    const double flat =
        numeric_gauss_curvature([](double u) { return u * u; }, 1.0, 1e-3);
    CHECK(std::fabs(flat) < 1e-8);
    const double hyp =
        numeric_gauss_curvature([](double u) { return std::sinh(u) * std::sinh(u); }, 0.8, 1e-4);
    CHECK(std::fabs(hyp + 1.0) < 1e-6);
  }
  SUBCASE("second-order convergence") {
    auto g = [](double u) { return football_metric_G(1.0, u); };
    double prev = std::fabs(numeric_gauss_curvature(g, 1.0, 1e-2) - 1.0);
    for (double h : {5e-3, 2.5e-3}) {
      const double cur = std::fabs(numeric_gauss_curvature(g, 1.0, h) - 1.0);
      CHECK(prev / cur >= 3.0);
      prev = cur;
    }
  }
  SUBCASE("validation") {
    auto g = [](double u) { return u * u - 1.0; };  // negative near zero
    CHECK_THROWS_AS(numeric_gauss_curvature(g, 0.5, 1e-3), std::domain_error);
    auto ok = [](double) { return 1.0; };
    CHECK_THROWS_AS(numeric_gauss_curvature(ok, 0.5, 0.0), std::domain_error);
  }
}

TEST_CASE("cone angle of footballs") {
  SUBCASE("estimate follows 2 pi alpha sin(eps)/eps") {
    for (const auto& p : {half_sphere(), FootballParams(0.25, 8)}) {
      for (double eps : {1e-2, 1e-3}) {
        const double want = kTwoPi * p.alpha() * std::sin(eps) / eps;
        const double got = cone_angle_estimate(p, Pole::origin, eps);
        CHECK(std::fabs(got - want) <= 1e-15 * want);
        CHECK(cone_angle_estimate(p, Pole::infinity, eps) == got);  // pole-symmetric
      }
      const double near = cone_angle_estimate(p, Pole::origin, 1e-3);
      CHECK(std::fabs(near - kTwoPi * p.alpha()) < 0.01 * kTwoPi * p.alpha());
    }
  }
  SUBCASE("Richardson recovers the angle to 1e-6 relative") {
    for (const auto* id : {"ex5_1", "ex5_2", "ex5_3", "ex5_4", "ex5_5"}) {
      const auto& p = std::get<FootballParams>(find_preset(id)->params);
      const double want = kTwoPi * p.alpha();
      for (Pole pole : {Pole::origin, Pole::infinity}) {
        const double got = cone_angle_richardson(p, pole, 1e-2);
        CHECK(std::fabs(got - want) <= 1e-6 * want);
      }
    }
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(cone_angle_estimate(half_sphere(), Pole::origin, 0.0), std::domain_error);
    CHECK_THROWS_AS(cone_angle_estimate(half_sphere(), Pole::origin, -1e-3), std::domain_error);
    CHECK_THROWS_AS(cone_angle_estimate(half_sphere(), Pole::origin, 4.0), std::domain_error);
  }
}

TEST_CASE("cone angle of the branched cover by quadrature") {
  const BranchParams& bp = double_cover();
  SUBCASE("against the closed-form circumference/distance ratio") {
    for (double eps : {1e-2, 5e-3}) {
      const double o = cone_angle_estimate(bp, Pole::origin, eps);
      CHECK(std::fabs(o - oracles::branched_cone_ratio_origin(eps)) <=
            5e-9 * o);
      const double i = cone_angle_estimate(bp, Pole::infinity, eps);
      CHECK(std::fabs(i - oracles::branched_cone_ratio_infinity(eps)) <=
            5e-9 * i);
    }
  }
  SUBCASE("frozen spot value") {
    CHECK(std::fabs(cone_angle_estimate(bp, Pole::origin, 1e-2) - 12.566998943361343) < 1e-7);
  }
  SUBCASE("approaches 4 pi") {
    const double want = kTwoPi * 2.0;
    CHECK(std::fabs(cone_angle_estimate(bp, Pole::origin, 1e-2) - want) < 0.01 * want);
    for (Pole pole : {Pole::origin, Pole::infinity}) {
      const double rich = cone_angle_richardson(bp, pole, 1e-2);
      CHECK(std::fabs(rich - want) <= 1e-8 * want);
    }
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(cone_angle_estimate(bp, Pole::origin, 0.0), std::domain_error);
    CHECK_THROWS_AS(cone_angle_estimate(bp, Pole::origin, -1.0), std::domain_error);
  }
}

TEST_CASE("parametric area") {
  SUBCASE("converges to 4 pi alpha") {
    const double want = 2.0 * kTwoPi;  // alpha = 1
    const double got = total_parametric_area(one_sphere(), GridSpec{128, 128, 1e-5});
    CHECK(std::fabs(got - want) <= 1e-3 * want);
  }
  SUBCASE("error falls at second order in the spacing") {
    const double want = kTwoPi * half_sphere().alpha();
    auto err_at = [&](int n) {
      return std::fabs(total_parametric_area(half_sphere(), GridSpec{n, n, 1e-5}) - 2.0 * want);
    };
    CHECK(err_at(32) / err_at(64) >= 3.0);
    CHECK(err_at(64) / err_at(128) >= 3.0);
  }
  SUBCASE("execution modes agree bitwise") {
    const GridSpec g{64, 48, 1e-5};
    CHECK(total_parametric_area(one_sphere(), g, Exec::serial) ==
          total_parametric_area(one_sphere(), g, Exec::parallel));
  }
  SUBCASE("grid validation") {
    CHECK_THROWS_AS(total_parametric_area(one_sphere(), GridSpec{1, 8, 1e-5}),
                    std::domain_error);
    CHECK_THROWS_AS(total_parametric_area(one_sphere(), GridSpec{8, 1, 1e-5}),
                    std::domain_error);
  }
}

TEST_CASE("covering multiplicity") {
  for (const auto* id : {"ex5_1", "ex5_3", "ex5_5"}) {
    const auto& p = std::get<FootballParams>(find_preset(id)->params);
    CHECK(covering_multiplicity_check(p, GridSpec{20, 20, 1e-5}) < 1e-12);
  }
  CHECK_THROWS_AS(covering_multiplicity_check(one_sphere(), GridSpec{20, 1, 1e-5}),
                  std::domain_error);
}

TEST_CASE("meridian lengths") {
  SUBCASE("intrinsic length is exactly pi") {
    CHECK(meridian_length(half_sphere()) == kPi);
    CHECK(meridian_length(FootballParams(0.125, 16)) == kPi);
  }
  SUBCASE("polyline converges to pi from below") {
    const double coarse = meridian_polyline_length(half_sphere(), 100);
    const double fine = meridian_polyline_length(half_sphere(), 1000);
    const double finest = meridian_polyline_length(half_sphere(), 10000);
    CHECK(coarse < fine);
    CHECK(fine < finest);
    CHECK(finest < kPi);
    CHECK(kPi - finest < 1e-4);
  }
  SUBCASE("single segment is the pole gap") {
    CHECK(std::fabs(meridian_polyline_length(half_sphere(), 1) -
                    euclidean_pole_gap(half_sphere())) < 1e-15);
  }
  SUBCASE("execution modes agree bitwise") {
    CHECK(meridian_polyline_length(one_sphere(), 777, 0.3, Exec::serial) ==
          meridian_polyline_length(one_sphere(), 777, 0.3, Exec::parallel));
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(meridian_polyline_length(half_sphere(), 0), std::domain_error);
  }
}

TEST_CASE("pole gap") {
  for (double b : {0.125, 0.25, 0.5, 0.75}) {
    const FootballParams p(b, 1);
    const double gap = euclidean_pole_gap(p);
    CHECK(std::fabs(gap - profile_height(kPi, b)) < 1e-15);
    CHECK(gap < kPi);
  }
  CHECK(std::fabs(euclidean_pole_gap(half_sphere()) - oracles::frozen::kHeightPi_12) < 1e-12);
}

TEST_CASE("verify_all on a football") {
  static const VerifyReport rep = verify_all(half_sphere());
  SUBCASE("every check passes") {
    CHECK(rep.all_pass);
    for (const auto& c : rep.checks) {
      INFO(c.name, ": measured ", c.measured, " expected ", c.expected, " tol ", c.tolerance);
      CHECK(c.pass);
    }
  }
  SUBCASE("check list is fixed and ordered") {
    const std::vector<std::string> want = {
        "fd_step_within_precision_range",
        "cone_eps_within_precision_range",
        "coordinate_roundtrip_max_error",
        "profile_height_bounds_violation",
        "first_form_E_max_error",
        "first_form_F_max_error",
        "first_form_G_max_error",
        "second_form_weingarten_max_error",
        "frame_invariants_max_error",
        "metric_match_G_max_error",
        "twisted_profile_consistency_max_error",
        "gauss_curvature_analytic_max_error",
        "gauss_curvature_numeric_max_error",
        "mean_curvature_bound_violation",
        "mean_curvature_equator_error",
        "meridian_length_identity",
        "meridian_polyline_error",
        "pole_gap",
        "pole_gap_strictly_inside",
        "covering_multiplicity_max_deviation",
        "parametric_area",
        "cone_angle_origin",
        "cone_angle_infinity",
    };
    REQUIRE(rep.checks.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(rep.checks[i].name == want[i]);
  }
  SUBCASE("pass flags are consistent with the recorded numbers") {
    for (const auto& c : rep.checks)
      CHECK(c.pass == (std::fabs(c.measured - c.expected) <= c.tolerance));
  }
  SUBCASE("report is deterministic") {
    const VerifyReport again = verify_all(half_sphere());
    CHECK(report_to_json(rep) == report_to_json(again));
  }
  SUBCASE("JSON shape") {
    const nlohmann::json j = nlohmann::json::parse(report_to_json(rep));
    CHECK(j.contains("params"));
    CHECK(j.contains("checks"));
    CHECK(j.contains("all_pass"));
    CHECK(j["all_pass"].get<bool>());
    CHECK(j["params"]["family"] == "football");
    CHECK(j["params"]["B"].get<double>() == 0.5);
    CHECK(j["params"]["lambda"].get<int>() == 1);
    CHECK(j["params"]["alpha"].get<double>() == 0.5);
    REQUIRE(j["checks"].is_array());
    for (const auto& c : j["checks"]) {
      CHECK(c.size() == 5);
      CHECK(c.contains("name"));
      CHECK(c.contains("measured"));
      CHECK(c.contains("expected"));
      CHECK(c.contains("tolerance"));
      CHECK(c.contains("pass"));
    }
  }
}

TEST_CASE("verify_all surfaces precision problems instead of aborting") {
  SUBCASE("oversized finite-difference step") {
    const VerifyReport rep = verify_all(one_sphere(), GridSpec{16, 16, 1.0});
    CHECK_FALSE(rep.all_pass);
    bool flagged = false, ff_failed = false;
    for (const auto& c : rep.checks) {
      if (c.name == "fd_step_within_precision_range") {
        flagged = true;
        CHECK_FALSE(c.pass);
        CHECK(c.measured == 1.0);
      }
      if (c.name == "first_form_E_max_error") {
        ff_failed = true;
        CHECK_FALSE(c.pass);
        CHECK(std::isnan(c.measured));
      }
    }
    CHECK(flagged);
    CHECK(ff_failed);
  }
  SUBCASE("NaN measurements serialize as null") {
    const VerifyReport rep = verify_all(one_sphere(), GridSpec{16, 16, 1.0});
    const nlohmann::json j = nlohmann::json::parse(report_to_json(rep));
    bool saw_null = false;
    for (const auto& c : j["checks"])
      if (c["measured"].is_null()) saw_null = true;
    CHECK(saw_null);
  }
  SUBCASE("oversized cone epsilon") {
    const VerifyReport rep = verify_all(one_sphere(), GridSpec{16, 16, 1e-5}, 0.1);
    CHECK_FALSE(rep.all_pass);
    for (const auto& c : rep.checks)
      if (c.name == "cone_eps_within_precision_range") CHECK_FALSE(c.pass);
  }
  SUBCASE("invalid cone epsilon is caught, not propagated") {
    const VerifyReport rep = verify_all(one_sphere(), GridSpec{16, 16, 1e-5}, -1.0);
    CHECK_FALSE(rep.all_pass);
  }
  SUBCASE("structurally invalid grids throw") {
    CHECK_THROWS_AS(verify_all(one_sphere(), GridSpec{1, 16, 1e-5}), std::domain_error);
    CHECK_THROWS_AS(verify_all(double_cover(), GridSpec{16, 1, 1e-5}), std::domain_error);
  }
}

TEST_CASE("verify_all on the branched cover") {
  static const VerifyReport rep = verify_all(double_cover());
  SUBCASE("every check passes") {
    CHECK(rep.all_pass);
    for (const auto& c : rep.checks) {
      INFO(c.name, ": measured ", c.measured, " expected ", c.expected, " tol ", c.tolerance);
      CHECK(c.pass);
    }
  }
  SUBCASE("check list is fixed and ordered") {
    const std::vector<std::string> want = {
        "fd_step_within_precision_range",
        "cone_eps_within_precision_range",
        "sphere_constraint_max_error",
        "pullback_E_max_rel_error",
        "pullback_F_max_rel_error",
        "pullback_G_max_rel_error",
        "density_match_max_rel_error",
        "infinity_chart_match_max_rel_error",
        "power_map_derivative_max_rel_error",
        "deck_invariance_max_deviation",
        "parametric_area",
        "cone_angle_origin",
        "cone_angle_infinity",
    };
    REQUIRE(rep.checks.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(rep.checks[i].name == want[i]);
  }
  SUBCASE("JSON labels the family") {
    const nlohmann::json j = nlohmann::json::parse(report_to_json(rep));
    CHECK(j["params"]["family"] == "branched");
    CHECK(j["params"]["alpha"].get<int>() == 2);
    CHECK(j["params"]["b"].get<double>() == 1.0);
  }
  SUBCASE("deterministic") {
    const VerifyReport again = verify_all(double_cover());
    CHECK(report_to_json(rep) == report_to_json(again));
  }
  SUBCASE("oversized step degrades to a failing report") {
    const VerifyReport bad = verify_all(double_cover(), GridSpec{16, 16, 1.0});
    CHECK_FALSE(bad.all_pass);
  }
}
