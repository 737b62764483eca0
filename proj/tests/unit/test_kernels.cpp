#include <doctest.h>

#include <cmath>
#include <random>

#include "lpspec/eigenforms.hpp"
#include "lpspec/kernels.hpp"
#include "lpspec/regions.hpp"

using namespace lpspec;

TEST_SUITE("kernels") {

TEST_CASE("parallel stencil matches the serial reference") {
  const auto f = WarpingFunction::hyperbolic_sine(1.0);
  const OperatorContext ctx{5, 2, 1.5, 1.0};
  const std::size_t m = 20001;
  std::vector<cplx> h(m);
  for (std::size_t i = 0; i < m; ++i) h[i] = std::exp(cplx(-0.7, 0.3) * (0.5 + 1e-3 * i));
  std::vector<cplx> a(m - 2), b(m - 2);
  kernels::serial::fd_apply(h, f, ctx, 0.5, 1e-3, a);
  kernels::omp::fd_apply(h, f, ctx, 0.5, 1e-3, b);
  CHECK(a == b);
}

TEST_CASE("parallel membership and nearest-distance match the serial reference") {
  const auto region = region_params({4, 1, 1.0, 1.0});
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  std::vector<cplx> pts(5000), cloud(3000);
  for (auto& z : pts) z = {u(rng), u(rng)};
  for (auto& z : cloud) z = {u(rng), u(rng)};
  CHECK(kernels::serial::contains_batch(region, pts, 1e-9) ==
        kernels::omp::contains_batch(region, pts, 1e-9));
  CHECK(kernels::serial::nearest_distance(pts, cloud) == kernels::omp::nearest_distance(pts, cloud));
}

TEST_CASE("sweep results do not depend on the execution policy") {
  const auto f = WarpingFunction::hyperbolic_sine(1.0);
  const std::vector<std::pair<double, double>> schedule{{6, 106}, {12, 412}};
  const auto a = decay_sweep_table(f, 1.5, {4, 3, 0.0, 1.0}, {}, ResidualMode::Warped, schedule, 1.0,
                                   Execution::Serial);
  const auto b = decay_sweep_table(f, 1.5, {4, 3, 0.0, 1.0}, {}, ResidualMode::Warped, schedule, 1.0,
                                   Execution::Parallel);
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    CHECK(a.rows[i].breakdown.terms == b.rows[i].breakdown.terms);
    CHECK(a.rows[i].breakdown.ratio == b.rows[i].breakdown.ratio);
  }
}

TEST_CASE("thread control") {
  kernels::set_threads(0);
  CHECK(kernels::max_threads() >= 1);
  kernels::set_threads(2);
  CHECK(kernels::max_threads() == 2);
  kernels::set_threads(1);
}

}
