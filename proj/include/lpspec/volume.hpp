#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lpspec/warping.hpp"

namespace lpspec {

/// q = -(a0+eps) on [0,s) and [t,inf), q = -K^2 on [s,t).
struct PiecewiseQ {
  double a0 = 1.0;
  double eps = 0.0;
  double K = 1.0;
  double s = 0.0;
  double t = 0.0;

  /// Throws InvalidArgument unless a0 > 0, eps >= 0, K >= sqrt(a0+eps), 0 <= s <= t.
  void validate() const;
  double b() const noexcept { return a0 + eps; }
  double operator()(double r) const noexcept;
};

/// Solution of u'' + q u = 0, u(0) = 0, u'(0) = 1 on a uniform grid.
struct SturmSolution {
  double step = 0.0;
  std::vector<double> r;
  std::vector<double> u;
  std::vector<double> u_prime;
  std::optional<PiecewiseQ> piecewise;  ///< set when solved with a PiecewiseQ

  double r_max() const noexcept { return r.empty() ? 0.0 : r.back(); }
  /// Index of the node at radius x. Throws OutOfDomain when x is off the grid.
  std::size_t node_index(double x) const;
};

/// Classical RK4. With a PiecewiseQ each step lies inside one constant segment,
/// so the coefficient is applied exactly per segment; s and t must be nodes.
/// step <= 0 selects about r_max / 1e5, snapped to 1/m with m a multiple of 1000,
/// so radii given to three decimals are nodes.
SturmSolution solve_sturm(const PiecewiseQ& q, double r_max, double step = 0.0);
SturmSolution solve_sturm(const RadialFunction& q, double r_max, double step = 0.0);

struct BoundsCheck {
  bool lower_ok = false;
  bool upper_ok = false;
  double max_violation = 0.0;  ///< largest violation relative to the bound value
};

/// Lower bound sinh(sqrt(b) r)/sqrt(b) and the three-branch upper bound.
BoundsCheck check_bounds(const SturmSolution& sol, const PiecewiseQ& q, double tol = 1e-8);

double sturm_lower_bound(const PiecewiseQ& q, double r);
double sturm_upper_bound(const PiecewiseQ& q, double r);

/// int_0^r u^{n-1} / int_0^1 u^{n-1} by composite Simpson on the stored grid.
double volume_ratio(const SturmSolution& sol, int n, double r);

struct GrowthEstimate {
  double gamma_hat = 0.0;
  std::pair<double, double> window{};
  int n = 0;
  double fit_residual = 0.0;  ///< RMS residual of the log-linear fit
  std::size_t points = 0;
};

/// Least-squares slope of log int_0^r u^{n-1} over the window. The window
/// must lie inside the grid and span at least 5.
GrowthEstimate growth_rate(const SturmSolution& sol, int n, std::pair<double, double> window);
/// Window defaults to the last third of the grid.
GrowthEstimate growth_rate(const SturmSolution& sol, int n);

}  // namespace lpspec
