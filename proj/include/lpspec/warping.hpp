#pragma once

#include <functional>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

namespace lpspec {

enum class WarpingFamily { Exp, Sinh, Cosh, PerturbedODE, Tabulated };

std::string_view to_string(WarpingFamily family) noexcept;

/// Real-valued function of the radial variable (perturbations q, Sturm coefficients).
using RadialFunction = std::function<double(double)>;

struct WarpingValue {
  double value = 0.0;
  double first = 0.0;
  double second = 0.0;
};

/// Radial profile f of a warped product metric dr^2 + f(r)^2 g_N on (c0, inf).
///
/// Exp, Sinh and Cosh are c·e^{x}, c·sinh(x), c·cosh(x) with x = sqrt(a0)·r and
/// are evaluated in closed form. Tabulated and PerturbedODE hold immutable samples
/// (shared between copies) and interpolate with cubic Hermite polynomials.
///
/// The ratio accessors (`log_value`, `log_derivative`, `second_ratio` and the two
/// deviations) never form f itself for the analytic families, so they stay finite
/// far beyond the point where f overflows a double.
class WarpingFunction {
 public:
  static WarpingFunction exponential(double a0, double c = 1.0, double c0 = 0.0);
  static WarpingFunction hyperbolic_sine(double a0, double c = 1.0, double c0 = 0.0);
  static WarpingFunction hyperbolic_cosine(double a0, double c = 1.0, double c0 = 0.0);

  /// Samples (r_i, f_i, f'_i, f''_i) on a strictly increasing grid; a0 is the
  /// curvature scale the profile is meant to approach.
  static WarpingFunction tabulated(double a0, std::vector<double> r, std::vector<double> f,
                                   std::vector<double> df, std::vector<double> d2f);

  WarpingFamily family() const noexcept { return family_; }
  double a0() const noexcept { return a0_; }
  double scale() const noexcept { return c_; }
  double left_endpoint() const noexcept { return c0_; }
  /// Largest evaluable radius (+inf for the analytic families).
  double right_endpoint() const noexcept;
  bool in_domain(double r) const noexcept;

  /// (f, f', f'') at r. Throws OutOfDomain outside [c0, right_endpoint] and
  /// Overflow when f is not representable.
  WarpingValue eval(double r) const;

  double log_value(double r) const;       ///< ln f(r)
  double log_derivative(double r) const;  ///< f'/f
  double second_ratio(double r) const;    ///< f''/f
  double first_deviation(double r) const;   ///< (f'/f)^2 - a0
  double second_deviation(double r) const;  ///< f''/f - a0

  /// Stored samples; empty for the analytic families.
  const std::vector<double>& sample_radii() const noexcept;
  const std::vector<double>& sample_values() const noexcept;
  const std::vector<double>& sample_first() const noexcept;
  const std::vector<double>& sample_second() const noexcept;

  /// Perturbation q for PerturbedODE (f'' = (a0 + q) f); empty otherwise.
  const RadialFunction& perturbation() const noexcept { return q_; }

 private:
  struct Table {
    std::vector<double> r, f, df, d2f;
  };

  WarpingFunction(WarpingFamily family, double a0, double c, double c0)
      : family_(family), a0_(a0), c_(c), c0_(c0) {}

  void check_domain(double r) const;
  std::size_t locate(double r) const;
  WarpingValue interpolate(double r) const;

  friend WarpingFunction integrate_perturbed(double, RadialFunction, std::pair<double, double>,
                                             std::pair<double, double>, double, double);

  WarpingFamily family_;
  double a0_;
  double c_;
  double c0_;
  std::shared_ptr<const Table> table_;
  RadialFunction q_;
};

struct ClassBReport {
  double sup_dev_second = 0.0;  ///< sup |f''/f - a0| over the window
  double sup_dev_first = 0.0;   ///< sup |(f'/f)^2 - a0|
  double min_tail_value = 0.0;  ///< min f over the window
  bool verdict = false;
  std::pair<double, double> tail_window{};
  std::size_t samples = 0;
};

/// Finite-window proxy for membership in the asymptotically hyperbolic class:
/// both curvature ratios within `tol` of a0 and f at least `growth_floor`.
ClassBReport class_b_report(const WarpingFunction& f, std::pair<double, double> tail_window,
                            double tol, double growth_floor = 1e3, std::size_t samples = 2001);

/// Integrates f'' = (a0 + q) f with classical RK4 at fixed step from
/// (f, f')(r0) = init over r_span. Each step is paired with two half steps; the
/// Richardson estimate of the local error must stay below `tolerance` (relative)
/// or StepTooLarge is thrown.
WarpingFunction integrate_perturbed(double a0, RadialFunction q, std::pair<double, double> init,
                                    std::pair<double, double> r_span, double step,
                                    double tolerance = 1e-8);

struct HartmanReport {
  double lambda = 0.0;
  std::vector<double> t;
  std::vector<double> Q_values;       ///< Q_lambda(t) = int_t^inf q(s) e^{-2 lambda s} ds
  std::vector<double> scaled_values;  ///< e^{2 lambda t} Q_lambda(t)
  bool existence_ok = false;
  bool ratio_bound_ok = false;
  bool integrability_ok = false;
  bool square_integrability_ok = false;
  bool decay_ok = false;

  bool all_ok() const noexcept {
    return existence_ok && ratio_bound_ok && integrability_ok && square_integrability_ok &&
           decay_ok;
  }
};

struct HartmanGrid {
  double t_end = 0.0;
  std::size_t count = 0;
};

/// Evaluates the asymptotic-solution conditions for u'' = (lambda^2 + q) u on a
/// sample grid starting at T0. q is assumed monotone and integrable beyond T0.
HartmanReport hartman_check(const RadialFunction& q, double lambda, double T0,
                            const HartmanGrid& grid);

}  // namespace lpspec
