#include <doctest.h>

#include <cmath>
#include <vector>

#include "../support/oracles.hpp"
#include "lpspec/error.hpp"
#include "lpspec/radialop.hpp"
#include "lpspec/regions.hpp"

using namespace lpspec;

namespace {

struct Sampled {
  std::vector<cplx> h;
  UniformGrid grid;
};

template <class H>
Sampled sample(H&& h, double r0, double r1, std::size_t m) {
  Sampled s{{}, {r0, r1, m}};
  for (std::size_t i = 0; i < m; ++i) s.h.push_back(h(s.grid.node(i)));
  return s;
}

/// max interior |fd - exact| where exact(r) is the reference value.
template <class H, class Exact>
double fd_error(H&& h, Exact&& exact, const WarpingFunction& f, const OperatorContext& ctx,
                double r0, double r1, std::size_t m) {
  const auto s = sample(h, r0, r1, m);
  const auto out = delta2_apply_fd(s.h, f, ctx, s.grid);
  double err = 0.0;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    err = std::max(err, std::abs(out[i - 1] - exact(s.grid.node(i))));
  }
  return err;
}

}  // namespace

TEST_SUITE("radialop") {

TEST_CASE("exponential powers are exact eigenfunctions") {
  const auto f = WarpingFunction::exponential(1.0);
  const OperatorContext ctx{3, 1, 0.0, 1.0};
  for (double r : {0.0, 0.5, 3.0, 20.0}) {
    const cplx v = delta2_apply_analytic({std::nullopt, -1.0, f}, ctx, r);
    CHECK(std::abs(v - std::exp(-r)) <= 1e-15 * std::max(1.0, std::exp(-r)));
  }
  const auto f2 = WarpingFunction::exponential(2.5);
  const OperatorContext ctx2{5, 2, 0.0, 2.5};
  for (const cplx mu : {cplx(-1.3, 0.4), cplx(0.2, -2.0), cplx(-4, 0)}) {
    for (double r : {0.3, 1.7, 6.0}) {
      const cplx lhs = delta2_apply_analytic({std::nullopt, mu, f2}, ctx2, r);
      const cplx rhs = candidate_lambda(mu, ctx2) * std::exp(mu * f2.log_value(r));
      CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(rhs));
    }
  }
}

TEST_CASE("constants are annihilated when the first-order term vanishes") {
  // n - 2k + 1 = 0 leaves only -h''
  const auto f = WarpingFunction::hyperbolic_sine(1.0);
  for (double r : {0.5, 2.0, 9.0}) {
    CHECK(std::abs(delta2_apply_analytic({std::nullopt, 0.0, f}, {3, 2, 0.0, 1.0}, r)) == 0.0);
  }
  // otherwise Delta_2 1 = -(n - 2k + 1)(f'/f)' = 2 / sinh^2 r for n = 3, k = 1
  for (double r : {0.5, 2.0, 9.0}) {
    const cplx v = delta2_apply_analytic({std::nullopt, 0.0, f}, {3, 1, 0.0, 1.0}, r);
    CHECK(v.real() == doctest::Approx(2.0 / std::pow(std::sinh(r), 2)).epsilon(1e-12));
  }
}

TEST_CASE("closed form agrees with a term-by-term evaluation") {
  // f = sinh r, mu = 1, n = 3, k = 0, lambda0 = 2: h = sinh, h' = cosh, h'' = sinh,
  // -[h'' + 4 (h f'/f)'] + 2 h/f^2 = -[sinh + 4 sinh] + 2/sinh
  const auto f = WarpingFunction::hyperbolic_sine(1.0);
  const OperatorContext ctx{3, 0, 2.0, 1.0};
  const double r = 1.0;
  const double expected = -5.0 * std::sinh(r) + 2.0 / std::sinh(r);
  CHECK(std::abs(delta2_apply_analytic({std::nullopt, 1.0, f}, ctx, r) - expected) <= 1e-12);
  const cplx via_derivatives =
      delta2_apply_derivatives(std::sinh(r), std::cosh(r), std::sinh(r), f, ctx, r);
  CHECK(std::abs(via_derivatives - expected) <= 1e-12);
}

TEST_CASE("finite differences on simple profiles") {
  const auto e = WarpingFunction::exponential(1.0);
  const OperatorContext ctx{3, 1, 0.0, 1.0};
  auto one = sample([](double) { return cplx(1.0); }, 0.0, 5.0, 101);
  for (const cplx v : delta2_apply_fd(one.h, e, ctx, one.grid)) CHECK(std::abs(v) <= 1e-10);

  auto inv = sample([](double r) { return cplx(std::exp(-r)); }, 0.0, 5.0, 5001);
  const auto out = delta2_apply_fd(inv.h, e, ctx, inv.grid);
  CHECK(out.size() == 4999);
  for (std::size_t i = 1; i + 1 < 5001; i += 50) {
    CHECK(std::abs(out[i - 1] - std::exp(-inv.grid.node(i))) <= 1e-5);
  }
}

TEST_CASE("finite differences converge at second order") {
  const auto s = WarpingFunction::hyperbolic_sine(1.0);
  const OperatorContext ctx{4, 1, 1.0, 1.0};
  auto h = [](double r) { return cplx(std::sin(r)); };
  auto exact = [&](double r) {
    return delta2_apply_derivatives(std::sin(r), std::cos(r), -std::sin(r), s, ctx, r);
  };
  const double e1 = fd_error(h, exact, s, ctx, 0.5, 6.0, 201);
  const double e2 = fd_error(h, exact, s, ctx, 0.5, 6.0, 401);
  CHECK(e1 / e2 >= 3.5);
  CHECK(e1 / e2 <= 4.5);

  const auto c = WarpingFunction::hyperbolic_cosine(2.0);
  const OperatorContext ctx2{5, 1, 0.0, 2.0};
  const cplx mu(-1.5, 0.8);
  auto hf = [&](double r) { return std::exp(mu * c.log_value(r)); };
  auto ex = [&](double r) { return delta2_apply_analytic({std::nullopt, mu, c}, ctx2, r); };
  const double g1 = fd_error(hf, ex, c, ctx2, 0.0, 3.0, 301);
  const double g2 = fd_error(hf, ex, c, ctx2, 0.0, 3.0, 601);
  CHECK(g1 / g2 >= 3.5);
  CHECK(g1 / g2 <= 4.5);
}

TEST_CASE("finite difference guards") {
  const auto e = WarpingFunction::exponential(1.0);
  std::vector<cplx> h(4, 1.0);
  try {
    delta2_apply_fd(h, e, {3, 1, 0.0, 1.0}, {0.0, 1.0, 4});
    FAIL("expected GridTooCoarse");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::GridTooCoarse);
  }
  std::vector<cplx> h5(5, 1.0);
  CHECK_THROWS_AS(delta2_apply_fd(h5, WarpingFunction::hyperbolic_sine(1.0, 1.0, 1.0),
                                  {3, 1, 0.0, 1.0}, {0.0, 2.0, 5}),
                  Error);
}

TEST_CASE("candidate eigenvalues and exponents") {
  const OperatorContext ctx{3, 1, 0.0, 1.0};
  CHECK(candidate_lambda(0.0, ctx) == cplx(0.0));
  CHECK(mu_for(1.0, 1, 3, 0.0) == cplx(-2.0, 0.0));
  CHECK(mu_for(2.0, 2, 3, 1.0) == cplx(0.0, 1.0));
  CHECK(std::abs(mu_for(4.0 / 3.0, 0, 5, 2.0) - cplx(-4.0, 2.0)) <= 1e-15);

  // n = 3, k = 3, p = 1: mu = 0, lambda = 0, which lies on P_{1,0}
  const cplx lam = candidate_lambda(mu_for(1.0, 3, 3, 0.0), {3, 3, 0.0, 1.0});
  CHECK(std::abs(lam) <= 1e-15);
  CHECK(contains(region_params({3, 0, 1.0, 1.0}), lam));

  // n = 3, k = 2, p = 2: mu = is and lambda = a0 s^2 = vertex + s^2 of Q_{2,1}
  const OperatorContext c2{3, 2, 0.0, 1.0};
  const auto ray = region_params({3, 1, 2.0, 1.0});
  for (double s = -4.0; s <= 4.0; s += 0.125) {
    const cplx l = candidate_lambda(mu_for(2.0, 2, 3, s), c2);
    CHECK(std::abs(l - (ray.vertex + s * s)) <= 1e-13);
  }
}

TEST_CASE("degree relabelling maps candidates onto the curve") {
  for (int n : {3, 4, 5, 6}) {
    for (int m = 0; 2 * m <= n; ++m) {
      for (double p : {1.0, 1.25, 4.0 / 3.0, 1.8, 2.0}) {
        for (double a0 : {1.0, 2.0}) {
          const OperatorContext ctx{n, n - m, 0.0, a0};
          for (double s = -5.0; s <= 5.0; s += 0.5) {
            const cplx lam = candidate_lambda(mu_for(p, n - m, n, s), ctx);
            // the substitution k = n - m reverses the sign of s
            CHECK(std::abs(lam - curve_point({n, m, p, a0}, -s)) <= 1e-12);
            CHECK(std::abs(lam - std::conj(oracle::curve(n, m, p, a0, s))) <= 1e-12);
          }
        }
      }
    }
  }
}

}
