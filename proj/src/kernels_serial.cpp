#include <algorithm>

#include "kernel_ops.hpp"

namespace lpspec::kernels::serial {

void fd_apply(std::span<const cplx> h, const WarpingFunction& f, const OperatorContext& ctx,
              double r0, double dr, std::span<cplx> out) {
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    out[i - 1] = detail::fd_point(h.data(), i, f, ctx, r0, dr);
  }
}

std::vector<unsigned char> contains_batch(const ParabolicRegion& region,
                                          std::span<const cplx> points, double tol) {
  std::vector<unsigned char> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = contains(region, points[i], tol) ? 1 : 0;
  return out;
}

std::vector<double> nearest_distance(std::span<const cplx> queries, std::span<const cplx> cloud) {
  std::vector<double> out(queries.size());
  for (std::size_t i = 0; i < queries.size(); ++i) {
    out[i] = detail::nearest(queries[i], cloud.data(), cloud.size());
  }
  return out;
}

}  // namespace lpspec::kernels::serial
