#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>

#include "lpspec/error.hpp"

namespace lpspec::quad {

struct SimpsonOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int min_depth = 4;
  int max_depth = 48;
};

namespace detail {

template <class F>
double simpson_step(const F& f, double a, double fa, double m, double fm, double b, double fb,
                    double whole, const SimpsonOptions& opt, int depth, std::size_t& evals) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  evals += 2;
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double refined = left + right;
  const double delta = refined - whole;
  // Per-panel acceptance, tolerance not halved on descent: integrands at the
  // rounding-noise level would otherwise recurse to max_depth. For nonnegative
  // integrands the total relative error stays below rel_tol.
  const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(refined));
  if (depth >= opt.min_depth && std::abs(delta) <= 15.0 * tol) {
    return refined + delta / 15.0;
  }
  if (depth >= opt.max_depth || !(b - a > 0.0) || m <= a || m >= b) {
    throw Error(ErrorCode::QuadratureFailure, "adaptive Simpson exceeded maximum depth");
  }
  return simpson_step(f, a, fa, lm, flm, m, fm, left, opt, depth + 1, evals) +
         simpson_step(f, m, fm, rm, frm, b, fb, right, opt, depth + 1, evals);
}

}  // namespace detail

/// Adaptive Simpson with Richardson correction on each accepted panel.
template <class F>
double adaptive_simpson(const F& f, double a, double b, const SimpsonOptions& opt = {},
                        std::size_t* evaluations = nullptr) {
  if (a == b) return 0.0;
  if (a > b) return -adaptive_simpson(f, b, a, opt, evaluations);
  std::size_t evals = 3;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb)) {
    throw Error(ErrorCode::QuadratureFailure, "non-finite integrand value");
  }
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double value = detail::simpson_step(f, a, fa, m, fm, b, fb, whole, opt, 0, evals);
  if (evaluations != nullptr) *evaluations += evals;
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::QuadratureFailure, "non-finite integral");
  }
  return value;
}

/// Composite Simpson over uniformly spaced samples y[0..count-1] with spacing h.
/// An odd number of panels closes with a Simpson 3/8 panel.
double composite_simpson(std::span<const double> y, double h);

/// Running integral of uniformly spaced samples, fourth order at even nodes.
/// out[i] approximates the integral from node 0 to node i.
void cumulative_simpson(std::span<const double> y, double h, std::span<double> out);

}  // namespace lpspec::quad
