#include "lpspec/eigenforms.hpp"

#include <cmath>
#include <exception>
#include <string>

#include "lpspec/error.hpp"

namespace lpspec {

namespace {

constexpr double kWeightTol = 1e-12;

/// Integral over [a, b] split at the cutoff knots so no panel straddles a
/// ramp boundary. Pieces outside [lo, hi] are skipped.
template <class F>
double integrate_knots(const F& g, const CutoffProfile& phi, double lo, double hi,
                       const quad::SimpsonOptions& opt) {
  const auto knots = phi.knots();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double a = std::max(knots[i], lo);
    const double b = std::min(knots[i + 1], hi);
    if (b > a) total += quad::adaptive_simpson(g, a, b, opt);
  }
  return total;
}

double ramps_only(const CutoffProfile& phi, double lo, double hi,
                  const std::function<double(double)>& g, const quad::SimpsonOptions& opt) {
  const auto knots = phi.knots();
  double total = 0.0;
  const std::pair<double, double> ramps[2] = {{knots[0], knots[1]}, {knots[2], knots[3]}};
  for (const auto& [a0, b0] : ramps) {
    const double a = std::max(a0, lo);
    const double b = std::min(b0, hi);
    if (b > a) total += quad::adaptive_simpson(g, a, b, opt);
  }
  return total;
}

void check_support(const WarpingFunction& f, const CutoffProfile& phi) {
  if (!(phi.support_start() > f.left_endpoint()) || phi.support_end() > f.right_endpoint()) {
    throw Error(ErrorCode::OutOfDomain,
                "cutoff support [" + std::to_string(phi.support_start()) + ", " +
                    std::to_string(phi.support_end()) + "] leaves the warping domain");
  }
}

void check_exponent(double p) {
  if (!(p >= 1.0) || std::isinf(p)) {
    throw Error(ErrorCode::InvalidArgument, "residuals need a finite p >= 1");
  }
}

}  // namespace

void AngularData::validate() const {
  if (!(eta_norm_const > 0.0) || !(chi_lap > 0.0) || !(chi_grad > 0.0) || !(chi_lower > 0.0) ||
      !(chi_upper > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "angular constants must be positive");
  }
  if (chi_lower > chi_upper) {
    throw Error(ErrorCode::InvalidArgument, "chi_lower must not exceed chi_upper");
  }
}

std::string_view to_string(ResidualTerm term) noexcept {
  switch (term) {
    case ResidualTerm::I: return "I";
    case ResidualTerm::II: return "II";
    case ResidualTerm::III: return "III";
    case ResidualTerm::IV: return "IV";
    case ResidualTerm::V: return "V";
    case ResidualTerm::A1: return "A1";
    case ResidualTerm::A2: return "A2";
    case ResidualTerm::A3: return "A3";
  }
  return "?";
}

std::string_view to_string(ResidualMode mode) noexcept {
  return mode == ResidualMode::Warped ? "warped" : "hyperbolic";
}

double ResidualBreakdown::term_sum() const noexcept {
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum;
}

double omega_weight_exponent(cplx mu, double p, int n, int k) {
  return p * (mu.real() - (k - 1)) + (n - 1);
}

double omega_lp_norm(const WarpingFunction& f, const CutoffProfile& phi, cplx mu, double p, int n,
                     int k, const AngularData& ang, ResidualMode mode,
                     const quad::SimpsonOptions& opt) {
  check_exponent(p);
  ang.validate();
  const double canonical = -(n - 1) / p + (k - 1);
  if (std::abs(mu.real() - canonical) > kWeightTol) {
    throw Error(ErrorCode::WeightMismatch, "Re mu = " + std::to_string(mu.real()) +
                                               " differs from the canonical " +
                                               std::to_string(canonical));
  }
  check_support(f, phi);
  const double expo = omega_weight_exponent(mu, p, n, k);
  auto integrand = [&](double r) {
    const double weight = expo == 0.0 ? 1.0 : std::exp(expo * f.log_value(r));
    return std::pow(std::abs(phi.eval(r).value), p) * weight;
  };
  double mass = ang.eta_norm_const *
                integrate_knots(integrand, phi, phi.support_start(), phi.support_end(), opt);
  if (mode == ResidualMode::Hyperbolic) mass *= std::pow(ang.chi_lower, p);
  return std::pow(mass, 1.0 / p);
}

ResidualBreakdown residual_terms(const WarpingFunction& f, const CutoffProfile& phi, cplx mu,
                                 double p, const OperatorContext& ctx, const AngularData& ang,
                                 ResidualMode mode, const quad::SimpsonOptions& opt) {
  ctx.validate();
  check_exponent(p);
  if (mode == ResidualMode::Hyperbolic &&
      (f.family() != WarpingFamily::Sinh || f.a0() != 1.0 || ctx.a0 != 1.0)) {
    throw Error(ErrorCode::ModeMismatch, "hyperbolic mode requires f = sinh(r) with a0 = 1");
  }
  if (std::abs(f.a0() - ctx.a0) > 1e-15 * ctx.a0) {
    throw Error(ErrorCode::InvalidArgument, "warping a0 and operator a0 differ");
  }
  ResidualBreakdown out;
  out.mu = mu;
  out.lambda = candidate_lambda(mu, ctx);
  out.omega_norm_p = omega_lp_norm(f, phi, mu, p, ctx.n, ctx.k, ang, mode, opt);

  const double lo = phi.support_start();
  const double hi = phi.support_end();
  const double shift = ctx.shift();
  const double c_I = std::pow(std::abs((mu - 1.0) * (mu + shift)), p);
  const double c_II = std::pow(std::abs(mu + shift), p);
  const double c_IV = std::pow(std::abs(2.0 * mu + shift), p);
  const double c_V = std::pow(ctx.lambda0, p);
  const double weight =
      ang.eta_norm_const * (mode == ResidualMode::Hyperbolic ? std::pow(ang.chi_upper, p) : 1.0);

  auto phi_p = [&](double r) { return std::pow(std::abs(phi.eval(r).value), p); };
  auto& t = out.terms;
  auto at = [&](ResidualTerm term) -> double& { return t[static_cast<std::size_t>(term)]; };

  if (c_I > 0.0) {
    at(ResidualTerm::I) = c_I * integrate_knots(
        [&](double r) { return phi_p(r) * std::pow(std::abs(f.first_deviation(r)), p); },
        phi, lo, hi, opt);
  }
  if (c_II > 0.0) {
    at(ResidualTerm::II) = c_II * integrate_knots(
        [&](double r) { return phi_p(r) * std::pow(std::abs(f.second_deviation(r)), p); },
        phi, lo, hi, opt);
  }
  at(ResidualTerm::III) = ramps_only(
      phi, lo, hi, [&](double r) { return std::pow(std::abs(phi.eval(r).second), p); }, opt);
  if (c_IV > 0.0) {
    at(ResidualTerm::IV) = c_IV * ramps_only(
        phi, lo, hi,
        [&](double r) {
          return std::pow(std::abs(phi.eval(r).first) * std::abs(f.log_derivative(r)), p);
        },
        opt);
  }
  if (c_V > 0.0) {
    at(ResidualTerm::V) = c_V * integrate_knots(
        [&](double r) { return phi_p(r) * std::exp(-2.0 * p * f.log_value(r)); }, phi, lo, hi, opt);
  }
  for (std::size_t i = 0; i <= static_cast<std::size_t>(ResidualTerm::V); ++i) t[i] *= weight;

  const RadialProfile h{phi, mu, f};
  const double direct_main =
      weight * integrate_knots(
                   [&](double r) {
                     const cplx residual =
                         delta2_reduced(h, ctx, r) - out.lambda * phi.eval(r).value;
                     return std::pow(std::abs(residual), p);
                   },
                   phi, lo, hi, opt);
  out.direct_residual = std::pow(direct_main, 1.0 / p);

  if (mode == ResidualMode::Hyperbolic) {
    const double decay = integrate_knots(
        [&](double r) { return phi_p(r) * std::exp(-2.0 * p * f.log_value(r)); }, phi, lo, hi, opt);
    const double grad = integrate_knots(
        [&](double r) {
          return phi_p(r) * std::pow(std::abs(f.log_derivative(r)), p) *
                 std::exp(-p * f.log_value(r));
        },
        phi, lo, hi, opt);
    at(ResidualTerm::A1) = ang.eta_norm_const * std::pow(ang.chi_lap, p) * decay;
    at(ResidualTerm::A2) = ang.eta_norm_const * std::pow(2.0 * ang.chi_grad, p) * decay;
    at(ResidualTerm::A3) = ang.eta_norm_const * std::pow(ang.chi_grad, p) * grad;
    for (auto extra : {ResidualTerm::A1, ResidualTerm::A2, ResidualTerm::A3}) {
      out.direct_residual += std::pow(at(extra), 1.0 / p);
    }
  }

  double minkowski = 0.0;
  for (double term : t) minkowski += std::pow(term, 1.0 / p);
  out.ratio = std::pow(out.term_sum(), 1.0 / p) / out.omega_norm_p;
  out.triangle_bound = minkowski / out.omega_norm_p;
  out.direct_ratio = out.direct_residual / out.omega_norm_p;
  return out;
}

DecayVerdict assess_decay(std::span<const double> ratios) {
  DecayVerdict v{!ratios.empty(), !ratios.empty()};
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    if (!(ratios[i] < ratios[i - 1])) v.strictly_decreasing = false;
    if (i >= 2 && !(ratios[i] <= ratios[i - 1] * 1.05)) v.decaying = false;
  }
  if (!ratios.empty() && !(ratios.back() <= ratios.front())) v.decaying = false;
  return v;
}

SweepResult decay_sweep_table(const WarpingFunction& f, double p, const OperatorContext& ctx,
                              const AngularData& ang, ResidualMode mode,
                              const std::vector<std::pair<double, double>>& schedule, double s,
                              Execution exec, const quad::SimpsonOptions& opt) {
  if (schedule.empty()) throw Error(ErrorCode::InvalidArgument, "empty sweep schedule");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const auto [A, B] = schedule[i];
    if (!(B > A)) throw Error(ErrorCode::InvalidInterval, "schedule entry needs B > A");
    if (i > 0) {
      const auto [A0, B0] = schedule[i - 1];
      if (!(A > A0) || !(B - A > B0 - A0)) {
        throw Error(ErrorCode::InvalidArgument, "schedule must increase A and B - A");
      }
    }
  }
  const cplx mu = mu_for(p, ctx.k, ctx.n, s);
  SweepResult result;
  result.rows.resize(schedule.size());
  const auto count = static_cast<std::ptrdiff_t>(schedule.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::Parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      const auto [A, B] = schedule[static_cast<std::size_t>(i)];
      const CutoffProfile phi(A, B);
      result.rows[static_cast<std::size_t>(i)] =
          SweepRow{A, B, s, residual_terms(f, phi, mu, p, ctx, ang, mode, opt)};
    } catch (...) {
#pragma omp critical(lpspec_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<double> ratios;
  for (const auto& row : result.rows) ratios.push_back(row.breakdown.ratio);
  const DecayVerdict verdict = assess_decay(ratios);
  result.decaying = verdict.decaying;
  result.strictly_decreasing = verdict.strictly_decreasing;
  return result;
}

SweepResult decay_sweep(const WarpingFunction& f, double p, const OperatorContext& ctx,
                        const AngularData& ang, ResidualMode mode,
                        const std::vector<std::pair<double, double>>& schedule, double s,
                        Execution exec, const quad::SimpsonOptions& opt) {
  SweepResult result = decay_sweep_table(f, p, ctx, ang, mode, schedule, s, exec, opt);
  if (!result.decaying) {
    throw Error(ErrorCode::NotDecaying,
                "residual ratio did not decay: first " +
                    std::to_string(result.rows.front().breakdown.ratio) + ", final " +
                    std::to_string(result.rows.back().breakdown.ratio));
  }
  return result;
}

}  // namespace lpspec
