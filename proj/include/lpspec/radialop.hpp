#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lpspec/cutoff.hpp"
#include "lpspec/warping.hpp"

namespace lpspec {

using cplx = std::complex<double>;

/// Degree data of the form eta ^ dr with eta a closed (k-1)-eigenform on the
/// cross-section, Laplace eigenvalue lambda0.
struct OperatorContext {
  int n = 2;
  int k = 1;
  double lambda0 = 0.0;
  double a0 = 1.0;

  void validate() const;
  /// n - 2k + 1, the coefficient of the first-order term.
  int shift() const noexcept { return n - 2 * k + 1; }
};

/// h(r) = phi(r) f(r)^mu; phi absent means phi == 1.
struct RadialProfile {
  std::optional<CutoffProfile> phi;
  cplx mu{0.0, 0.0};
  WarpingFunction f;
};

/// Delta_2 h / f^mu for h = phi f^mu, from the closed-form expansion of the
/// operator on phi f^mu. Never forms f^mu, so it is safe at large r.
cplx delta2_reduced(const RadialProfile& h, const OperatorContext& ctx, double r);

/// Delta_2 (phi f^mu) at r.
cplx delta2_apply_analytic(const RadialProfile& h, const OperatorContext& ctx, double r);

/// Delta_2 h = -[h'' + (n-2k+1)(h f'/f)'] + lambda0 h / f^2 for an arbitrary
/// profile given its value and two derivatives at r.
cplx delta2_apply_derivatives(cplx h, cplx dh, cplx d2h, const WarpingFunction& f,
                              const OperatorContext& ctx, double r);

struct UniformGrid {
  double r0 = 0.0;
  double r1 = 1.0;
  std::size_t m = 0;

  double spacing() const noexcept { return (r1 - r0) / static_cast<double>(m - 1); }
  double node(std::size_t i) const noexcept { return r0 + spacing() * static_cast<double>(i); }
};

/// Second-order finite-difference Delta_2 on uniform samples of h. The term
/// (h f'/f)' is expanded by the product rule with analytic f'/f and f''/f, so
/// only h is differenced. Returns the m-2 interior values.
std::vector<cplx> delta2_apply_fd(std::span<const cplx> h_samples, const WarpingFunction& f,
                                  const OperatorContext& ctx, const UniformGrid& grid);

/// -a0 mu (mu + n - 2k + 1)
cplx candidate_lambda(cplx mu, const OperatorContext& ctx);

/// -(n-1)/p + (k-1) + i s
cplx mu_for(double p, int k, int n, double s);

}  // namespace lpspec
