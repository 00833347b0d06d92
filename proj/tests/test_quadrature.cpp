#include "football/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"

using football::integrate;

TEST_CASE("polynomials up to cubic are integrated exactly") {
  CHECK(integrate([](double) { return 1.0; }, 0.0, 3.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(integrate([](double x) { return x; }, -1.0, 2.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(integrate([](double x) { return x * x * x; }, 0.0, 2.0) ==
        doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("smooth transcendental integrands meet the tolerance") {
  const double two = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  CHECK(std::fabs(two - 2.0) < 1e-13);
  const double em1 = integrate([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(std::fabs(em1 - (std::exp(1.0) - 1.0)) < 1e-13);
  const double quartic = integrate([](double x) { return x * x * x * x; }, 0.0, 1.0, 1e-12);
  CHECK(std::fabs(quartic - 0.2) < 1e-12);
}

TEST_CASE("reversed bounds flip the sign, equal bounds give zero") {
  auto f = [](double x) { return std::cos(x) + x; };
  const double fwd = integrate(f, 0.25, 1.75);
  const double rev = integrate(f, 1.75, 0.25);
  CHECK(fwd == -rev);
  CHECK(integrate(f, 0.7, 0.7) == 0.0);
}

TEST_CASE("endpoint square-root singularity converges under bisection") {
  const double v = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-11);
  CHECK(std::fabs(v - 2.0 / 3.0) < 1e-9);
}

TEST_CASE("invalid tolerance or interval is rejected") {
  auto f = [](double x) { return x; };
  CHECK_THROWS_AS(integrate(f, 0.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(integrate(f, 0.0, 1.0, -1e-9), std::domain_error);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(integrate(f, 0.0, inf), std::domain_error);
  CHECK_THROWS_AS(integrate(f, std::nan(""), 1.0), std::domain_error);
}
