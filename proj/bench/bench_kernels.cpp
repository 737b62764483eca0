#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "lpspec/kernels.hpp"

using namespace lpspec;

namespace {

std::vector<cplx> profile(std::size_t m) {
  std::vector<cplx> h(m);
  for (std::size_t i = 0; i < m; ++i) h[i] = std::exp(cplx(-0.7, 0.3) * (0.5 + 1e-4 * i));
  return h;
}

std::vector<cplx> random_points(std::size_t count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  std::vector<cplx> pts(count);
  for (auto& z : pts) z = {u(rng), u(rng)};
  return pts;
}

template <auto Fn>
void fd_apply(benchmark::State& state) {
  const auto f = WarpingFunction::hyperbolic_sine(1.0);
  const auto h = profile(static_cast<std::size_t>(state.range(0)));
  std::vector<cplx> out(h.size() - 2);
  for (auto _ : state) {
    Fn(h, f, OperatorContext{5, 2, 1.5, 1.0}, 0.5, 1e-4, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void contains_batch(benchmark::State& state) {
  const auto region = region_params({4, 1, 1.0, 1.0});
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(region, pts, 1e-9));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void nearest_distance(benchmark::State& state) {
  const auto queries = random_points(static_cast<std::size_t>(state.range(0)), 2);
  const auto cloud = random_points(2000, 3);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(queries, cloud));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(fd_apply<kernels::serial::fd_apply>)->Name("fd_apply/serial")->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(fd_apply<kernels::omp::fd_apply>)->Name("fd_apply/omp")->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(contains_batch<kernels::serial::contains_batch>)->Name("contains_batch/serial")->Arg(1 << 12);
BENCHMARK(contains_batch<kernels::omp::contains_batch>)->Name("contains_batch/omp")->Arg(1 << 12);
BENCHMARK(nearest_distance<kernels::serial::nearest_distance>)->Name("nearest_distance/serial")->Arg(1 << 10);
BENCHMARK(nearest_distance<kernels::omp::nearest_distance>)->Name("nearest_distance/omp")->Arg(1 << 10);

BENCHMARK_MAIN();
