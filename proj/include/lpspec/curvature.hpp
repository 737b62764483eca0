#pragma once

#include <utility>

#include "lpspec/warping.hpp"

namespace lpspec {

struct CurvatureReport {
  double r = 0.0;
  double sec_radial = 0.0;                    ///< -f''/f
  std::pair<double, double> sec_spherical{};  ///< (secN - f'^2)/f^2 at secN = lo, hi
  double ricci_lower = 0.0;                   ///< (n-1) min(sec_radial, spherical lo)
  int n = 0;
};

/// Sectional curvature bracket of dr^2 + f^2 g_N at r, given the range of the
/// sectional curvatures of N.
CurvatureReport sectional(const WarpingFunction& f, double r, std::pair<double, double> secN_range,
                          int n);

/// f(-ln x / sqrt(a0)) * x, the scale of the compactified metric.
double conformal_factor(const WarpingFunction& f, double a0, double x);

/// e^{K2 t} p: bound on the form heat kernel by the scalar one.
double heat_kernel_bound(double K2, double t, double scalar_kernel_value);

}  // namespace lpspec
