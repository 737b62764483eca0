#include "lpspec/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lpspec/error.hpp"

namespace lpspec {

CurvatureReport sectional(const WarpingFunction& f, double r, std::pair<double, double> secN_range,
                          int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "dimension n must be >= 2");
  const auto [lo, hi] = secN_range;
  if (!(lo <= hi)) throw Error(ErrorCode::InvalidArgument, "secN range needs lo <= hi");
  if (!f.in_domain(r)) {
    throw Error(ErrorCode::OutOfDomain, "r = " + std::to_string(r) + " outside the warping domain");
  }
  const double log_f = f.log_value(r);
  if (!std::isfinite(log_f)) throw Error(ErrorCode::OutOfDomain, "f vanishes at r");
  const double inv_f2 = std::exp(-2.0 * log_f);
  const double g = f.log_derivative(r);
  CurvatureReport rep;
  rep.r = r;
  rep.n = n;
  rep.sec_radial = -f.second_ratio(r);
  rep.sec_spherical = {lo * inv_f2 - g * g, hi * inv_f2 - g * g};
  rep.ricci_lower = (n - 1) * std::min(rep.sec_radial, rep.sec_spherical.first);
  return rep;
}

double conformal_factor(const WarpingFunction& f, double a0, double x) {
  if (!(a0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "a0 must be positive");
  if (!(x > 0.0 && x < 1.0)) throw Error(ErrorCode::OutOfDomain, "x must lie in (0, 1)");
  const double r = -std::log(x) / std::sqrt(a0);
  if (!f.in_domain(r)) {
    throw Error(ErrorCode::OutOfDomain, "-ln x / sqrt(a0) outside the warping domain");
  }
  return std::exp(f.log_value(r) + std::log(x));
}

double heat_kernel_bound(double K2, double t, double scalar_kernel_value) {
  if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "t must be positive");
  if (!(scalar_kernel_value > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "scalar kernel value must be positive");
  }
  return std::exp(K2 * t) * scalar_kernel_value;
}

}  // namespace lpspec
