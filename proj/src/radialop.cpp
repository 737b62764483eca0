#include "lpspec/radialop.hpp"

#include <cmath>
#include <string>

#include "lpspec/error.hpp"
#include "lpspec/kernels.hpp"

namespace lpspec {

void OperatorContext::validate() const {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "dimension n must be >= 2");
  if (k < 0 || k > n) throw Error(ErrorCode::InvalidArgument, "degree k must lie in [0, n]");
  if (!(lambda0 >= 0.0)) throw Error(ErrorCode::InvalidArgument, "lambda0 must be nonnegative");
  if (!(a0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "a0 must be positive");
}

cplx delta2_reduced(const RadialProfile& h, const OperatorContext& ctx, double r) {
  const double g1 = h.f.log_derivative(r);
  const double g2 = h.f.second_ratio(r);
  const double inv_f2 = std::exp(-2.0 * h.f.log_value(r));
  const CutoffValue phi = h.phi ? h.phi->eval(r) : CutoffValue{1.0, 0.0, 0.0};
  const cplx mu = h.mu;
  const double shift = ctx.shift();
  const cplx bracket = (mu + shift) * phi.value * g2 + (mu - 1.0) * (mu + shift) * phi.value * g1 * g1 +
                       phi.second + (2.0 * mu + shift) * phi.first * g1 -
                       ctx.lambda0 * phi.value * inv_f2;
  return -bracket;
}

cplx delta2_apply_analytic(const RadialProfile& h, const OperatorContext& ctx, double r) {
  return std::exp(h.mu * h.f.log_value(r)) * delta2_reduced(h, ctx, r);
}

cplx delta2_apply_derivatives(cplx h, cplx dh, cplx d2h, const WarpingFunction& f,
                              const OperatorContext& ctx, double r) {
  const double g1 = f.log_derivative(r);
  const double dg1 = f.second_ratio(r) - g1 * g1;
  const double inv_f2 = std::exp(-2.0 * f.log_value(r));
  return -(d2h + static_cast<double>(ctx.shift()) * (dh * g1 + h * dg1)) + ctx.lambda0 * h * inv_f2;
}

std::vector<cplx> delta2_apply_fd(std::span<const cplx> h_samples, const WarpingFunction& f,
                                  const OperatorContext& ctx, const UniformGrid& grid) {
  ctx.validate();
  if (grid.m < 5) {
    throw Error(ErrorCode::GridTooCoarse, "need at least 5 nodes, got " + std::to_string(grid.m));
  }
  if (h_samples.size() != grid.m) {
    throw Error(ErrorCode::InvalidArgument, "sample count does not match the grid");
  }
  if (!(grid.r1 > grid.r0) || !f.in_domain(grid.r0) || !f.in_domain(grid.r1)) {
    throw Error(ErrorCode::OutOfDomain, "grid must lie inside the warping function's domain");
  }
  std::vector<cplx> out(grid.m - 2);
  kernels::omp::fd_apply(h_samples, f, ctx, grid.r0, grid.spacing(), out);
  return out;
}

cplx candidate_lambda(cplx mu, const OperatorContext& ctx) {
  return -ctx.a0 * mu * (mu + static_cast<double>(ctx.shift()));
}

cplx mu_for(double p, int k, int n, double s) {
  if (!(p >= 1.0) || std::isinf(p)) {
    throw Error(ErrorCode::InvalidArgument, "mu_for requires a finite p >= 1");
  }
  return {-(n - 1) / p + (k - 1), s};
}

}  // namespace lpspec
