#include <doctest.h>

#include <cmath>

#include "lpspec/curvature.hpp"
#include "lpspec/error.hpp"

using namespace lpspec;

TEST_SUITE("curvature") {

TEST_CASE("space forms have constant curvature -1") {
  const std::pair<WarpingFunction, double> forms[] = {
      {WarpingFunction::hyperbolic_sine(1.0), 1.0},
      {WarpingFunction::exponential(1.0), 0.0},
      {WarpingFunction::hyperbolic_cosine(1.0), -1.0}};
  for (const auto& [f, secN] : forms) {
    for (double r = 0.1; r < 30.0; r += 0.29) {
      const auto rep = sectional(f, r, {secN, secN}, 4);
      CHECK(std::abs(rep.sec_radial + 1.0) <= 1e-12);
      CHECK(std::abs(rep.sec_spherical.first + 1.0) <= 1e-12);
      CHECK(std::abs(rep.sec_spherical.second + 1.0) <= 1e-12);
      CHECK(rep.ricci_lower == doctest::Approx(-3.0));
    }
  }
}

TEST_CASE("cosh end with spherical cross-section") {
  const auto rep = sectional(WarpingFunction::hyperbolic_cosine(4.0), 1.0, {1.0, 1.0}, 3);
  CHECK(rep.sec_radial == doctest::Approx(-4.0).epsilon(1e-15));
  const double expected = (1.0 - 4.0 * std::pow(std::sinh(2.0), 2)) / std::pow(std::cosh(2.0), 2);
  CHECK(std::abs(rep.sec_spherical.first - expected) <= 1e-12);
}

TEST_CASE("curvature range brackets and Ricci bound") {
  const auto rep = sectional(WarpingFunction::hyperbolic_sine(2.0), 0.8, {-2.0, 3.0}, 5);
  CHECK(rep.sec_spherical.first < rep.sec_spherical.second);
  CHECK(rep.ricci_lower == doctest::Approx(4.0 * std::min(rep.sec_radial, rep.sec_spherical.first)));
  CHECK_THROWS_AS(sectional(WarpingFunction::hyperbolic_sine(1.0, 1.0, 1.0), 0.5, {1, 1}, 3), Error);
  CHECK_THROWS_AS(sectional(WarpingFunction::hyperbolic_sine(1.0), 0.0, {1, 1}, 3), Error);
}

TEST_CASE("tail curvature approaches -a0") {
  const auto q = [](double t) { return std::exp(-t); };
  const WarpingFunction corpus[] = {
      WarpingFunction::hyperbolic_sine(1.0), WarpingFunction::hyperbolic_cosine(2.0, 3.0),
      WarpingFunction::exponential(0.5, 2.0), integrate_perturbed(1.0, q, {0.0, 1.0}, {0.0, 30.0}, 1e-3)};
  for (const auto& f : corpus) {
    const auto rep = sectional(f, 29.0, {-1.0, 1.0}, 3);
    CHECK(std::abs(rep.sec_radial + f.a0()) <= 1e-6);
    CHECK(std::abs(rep.sec_spherical.first + f.a0()) <= 1e-6);
    CHECK(std::abs(rep.sec_spherical.second + f.a0()) <= 1e-6);
  }
}

TEST_CASE("conformal factor") {
  const auto e = WarpingFunction::exponential(1.0);
  for (double x : {0.9, 0.5, 0.1, 1e-3}) CHECK(conformal_factor(e, 1.0, x) == doctest::Approx(1.0));
  const auto s = WarpingFunction::hyperbolic_sine(1.0);
  CHECK(conformal_factor(s, 1.0, 0.01) == doctest::Approx(0.49995).epsilon(1e-12));
  const auto c = WarpingFunction::hyperbolic_cosine(4.0);
  for (double x : {0.5, 0.1, 0.01}) {
    CHECK(conformal_factor(c, 4.0, x) == doctest::Approx((1 + x * x) / 2).epsilon(1e-12));
  }
  // Cauchy in x near 0
  double prev = 1.0;
  for (double x = 0.1; x > 1e-6; x /= 2) {
    const double gap = std::abs(conformal_factor(s, 1.0, x) - conformal_factor(s, 1.0, x / 2));
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 1e-11);
  CHECK_THROWS_AS(conformal_factor(s, 1.0, 1.5), Error);
}

TEST_CASE("heat kernel domination") {
  CHECK(heat_kernel_bound(0.0, 3.0, 0.25) == 0.25);
  CHECK(heat_kernel_bound(1.0, 2.0, 0.1) == doctest::Approx(0.7389056098930650));
  CHECK(heat_kernel_bound(-1.0, 3.0, 1.0) == doctest::Approx(0.049787068367863944));
  CHECK_THROWS_AS(heat_kernel_bound(1.0, 0.0, 1.0), Error);
  CHECK_THROWS_AS(heat_kernel_bound(1.0, 1.0, 0.0), Error);
}

}
