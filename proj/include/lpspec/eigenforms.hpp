#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lpspec/cutoff.hpp"
#include "lpspec/kernels.hpp"
#include "lpspec/quadrature.hpp"
#include "lpspec/radialop.hpp"
#include "lpspec/warping.hpp"

namespace lpspec {

/// Angular constants of the test form. In warped mode only eta_norm_const is
/// used; hyperbolic mode uses the cutoff chi on the sphere through sup-norm
/// constants and the two-sided bound chi_lower <= int |eta_0| chi <= chi_upper.
struct AngularData {
  double eta_norm_const = 1.0;
  double chi_lap = 1.0;   ///< sup |Delta_S chi|
  double chi_grad = 1.0;  ///< sup |grad chi|
  double chi_lower = 1.0;
  double chi_upper = 1.0;

  void validate() const;
};

enum class ResidualMode { Warped, Hyperbolic };

enum class ResidualTerm : std::size_t { I, II, III, IV, V, A1, A2, A3 };
inline constexpr std::size_t kResidualTermCount = 8;

std::string_view to_string(ResidualTerm term) noexcept;
std::string_view to_string(ResidualMode mode) noexcept;

struct ResidualBreakdown {
  /// p-th powers of the L^p norms of the summands of Delta omega - lambda omega.
  std::array<double, kResidualTermCount> terms{};
  double omega_norm_p = 0.0;     ///< ||omega||_p
  double ratio = 0.0;            ///< (sum of terms)^{1/p} / ||omega||_p
  double triangle_bound = 0.0;   ///< sum of terms^{1/p}, divided by ||omega||_p
  double direct_residual = 0.0;  ///< ||Delta omega - lambda omega||_p by direct quadrature
  double direct_ratio = 0.0;     ///< direct_residual / ||omega||_p
  cplx lambda{};
  cplx mu{};

  double term(ResidualTerm t) const noexcept { return terms[static_cast<std::size_t>(t)]; }
  double term_sum() const noexcept;
};

/// p (Re mu - (k-1)) + (n-1): the power of f left in |omega|^p dvol.
double omega_weight_exponent(cplx mu, double p, int n, int k);

/// ||phi f^mu eta ^ dr||_p. Throws WeightMismatch unless Re mu is the
/// canonical -(n-1)/p + (k-1) to 1e-12, so that the weight exponent is 0.
double omega_lp_norm(const WarpingFunction& f, const CutoffProfile& phi, cplx mu, double p, int n,
                     int k, const AngularData& ang, ResidualMode mode = ResidualMode::Warped,
                     const quad::SimpsonOptions& opt = {});

/// Residual decomposition at lambda = candidate_lambda(mu). Hyperbolic mode
/// requires f = sinh(r) (a0 = 1) and ctx.n = N + 1.
ResidualBreakdown residual_terms(const WarpingFunction& f, const CutoffProfile& phi, cplx mu,
                                 double p, const OperatorContext& ctx, const AngularData& ang,
                                 ResidualMode mode, const quad::SimpsonOptions& opt = {});

struct SweepRow {
  double A = 0.0;
  double B = 0.0;
  double s = 0.0;
  ResidualBreakdown breakdown;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool decaying = false;  ///< ratios eventually monotone (5% slack) and final <= first
  bool strictly_decreasing = false;
};

struct DecayVerdict {
  bool decaying = false;
  bool strictly_decreasing = false;
};

/// decaying: from the third entry on each ratio is at most 1.05 times the
/// previous one, and the last ratio does not exceed the first.
DecayVerdict assess_decay(std::span<const double> ratios);

/// Residuals along a schedule of (A, B) with mu = mu_for(p, k, n, s). Entries
/// are independent and run in parallel. Never throws NotDecaying.
SweepResult decay_sweep_table(const WarpingFunction& f, double p, const OperatorContext& ctx,
                              const AngularData& ang, ResidualMode mode,
                              const std::vector<std::pair<double, double>>& schedule, double s,
                              Execution exec = Execution::Parallel,
                              const quad::SimpsonOptions& opt = {});

/// As decay_sweep_table, throwing NotDecaying when the table does not decay.
SweepResult decay_sweep(const WarpingFunction& f, double p, const OperatorContext& ctx,
                        const AngularData& ang, ResidualMode mode,
                        const std::vector<std::pair<double, double>>& schedule, double s,
                        Execution exec = Execution::Parallel,
                        const quad::SimpsonOptions& opt = {});

}  // namespace lpspec
