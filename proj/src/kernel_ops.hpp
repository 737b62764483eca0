#pragma once

#include <cmath>
#include <limits>

#include "lpspec/kernels.hpp"

namespace lpspec::kernels::detail {

inline cplx fd_point(const cplx* h, std::size_t i, const WarpingFunction& f,
                     const OperatorContext& ctx, double r0, double dr) {
  const double r = r0 + dr * static_cast<double>(i);
  const cplx dh = (h[i + 1] - h[i - 1]) / (2.0 * dr);
  const cplx d2h = (h[i + 1] - 2.0 * h[i] + h[i - 1]) / (dr * dr);
  return delta2_apply_derivatives(h[i], dh, d2h, f, ctx, r);
}

inline double nearest(cplx q, const cplx* cloud, std::size_t n) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) best = std::min(best, std::norm(q - cloud[j]));
  return std::sqrt(best);
}

}  // namespace lpspec::kernels::detail
