#include <algorithm>
#include <exception>

#include <omp.h>

#include "kernel_ops.hpp"

namespace lpspec::kernels {

void set_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int max_threads() { return omp_get_max_threads(); }

namespace omp {

void fd_apply(std::span<const cplx> h, const WarpingFunction& f, const OperatorContext& ctx,
              double r0, double dr, std::span<cplx> out) {
  const auto m = static_cast<std::ptrdiff_t>(h.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 1; i < m - 1; ++i) {
    try {
      out[i - 1] = detail::fd_point(h.data(), static_cast<std::size_t>(i), f, ctx, r0, dr);
    } catch (...) {
#pragma omp critical(lpspec_fd_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<unsigned char> contains_batch(const ParabolicRegion& region,
                                          std::span<const cplx> points, double tol) {
  const auto n = static_cast<std::ptrdiff_t>(points.size());
  std::vector<unsigned char> out(points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = contains(region, points[i], tol) ? 1 : 0;
  return out;
}

std::vector<double> nearest_distance(std::span<const cplx> queries, std::span<const cplx> cloud) {
  const auto n = static_cast<std::ptrdiff_t>(queries.size());
  std::vector<double> out(queries.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = detail::nearest(queries[i], cloud.data(), cloud.size());
  }
  return out;
}

}  // namespace omp
}  // namespace lpspec::kernels
