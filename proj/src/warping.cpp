#include "lpspec/warping.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lpspec/error.hpp"
#include "lpspec/quadrature.hpp"

namespace lpspec {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be positive and finite");
  }
}

// ln sinh(x) for x > 0 without overflow
double log_sinh(double x) {
  if (x > 20.0) return x - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * x));
  return std::log(std::sinh(x));
}

double log_cosh(double x) {
  const double ax = std::abs(x);
  return ax - std::numbers::ln2 + std::log1p(std::exp(-2.0 * ax));
}

struct Hermite {
  double h00, h10, h01, h11;
};

Hermite hermite_basis(double t) {
  const double t2 = t * t;
  const double t3 = t2 * t;
  return {2.0 * t3 - 3.0 * t2 + 1.0, t3 - 2.0 * t2 + t, -2.0 * t3 + 3.0 * t2, t3 - t2};
}

}  // namespace

std::string_view to_string(WarpingFamily family) noexcept {
  switch (family) {
    case WarpingFamily::Exp: return "exp";
    case WarpingFamily::Sinh: return "sinh";
    case WarpingFamily::Cosh: return "cosh";
    case WarpingFamily::PerturbedODE: return "perturbed";
    case WarpingFamily::Tabulated: return "tabulated";
  }
  return "unknown";
}

WarpingFunction WarpingFunction::exponential(double a0, double c, double c0) {
  require_positive(a0, "a0");
  require_positive(c, "c");
  return WarpingFunction(WarpingFamily::Exp, a0, c, c0);
}

WarpingFunction WarpingFunction::hyperbolic_sine(double a0, double c, double c0) {
  require_positive(a0, "a0");
  require_positive(c, "c");
  if (c0 < 0.0) throw Error(ErrorCode::InvalidArgument, "sinh profile requires c0 >= 0");
  return WarpingFunction(WarpingFamily::Sinh, a0, c, c0);
}

WarpingFunction WarpingFunction::hyperbolic_cosine(double a0, double c, double c0) {
  require_positive(a0, "a0");
  require_positive(c, "c");
  return WarpingFunction(WarpingFamily::Cosh, a0, c, c0);
}

WarpingFunction WarpingFunction::tabulated(double a0, std::vector<double> r, std::vector<double> f,
                                           std::vector<double> df, std::vector<double> d2f) {
  require_positive(a0, "a0");
  const std::size_t n = r.size();
  if (n < 2 || f.size() != n || df.size() != n || d2f.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "tabulated profile needs >= 2 samples of equal length");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(r[i] > r[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "tabulated radii must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(f[i] > 0.0) || !std::isfinite(f[i])) {
      throw Error(ErrorCode::OutOfDomain, "tabulated f must be positive and finite");
    }
  }
  WarpingFunction w(WarpingFamily::Tabulated, a0, 1.0, r.front());
  w.table_ = std::make_shared<const Table>(
      Table{std::move(r), std::move(f), std::move(df), std::move(d2f)});
  return w;
}

double WarpingFunction::right_endpoint() const noexcept {
  if (table_) return table_->r.back();
  return std::numeric_limits<double>::infinity();
}

bool WarpingFunction::in_domain(double r) const noexcept {
  return r >= c0_ && r <= right_endpoint();
}

void WarpingFunction::check_domain(double r) const {
  if (!in_domain(r)) {
    throw Error(ErrorCode::OutOfDomain, "radius " + std::to_string(r) + " outside [" +
                                            std::to_string(c0_) + ", " +
                                            std::to_string(right_endpoint()) + "]");
  }
}

std::size_t WarpingFunction::locate(double r) const {
  const auto& grid = table_->r;
  auto it = std::upper_bound(grid.begin(), grid.end(), r);
  std::size_t i = (it == grid.begin()) ? 0 : static_cast<std::size_t>(it - grid.begin()) - 1;
  return std::min(i, grid.size() - 2);
}

WarpingValue WarpingFunction::interpolate(double r) const {
  const Table& tb = *table_;
  const std::size_t i = locate(r);
  const double h = tb.r[i + 1] - tb.r[i];
  const double t = (r - tb.r[i]) / h;
  const Hermite b = hermite_basis(t);
  WarpingValue out;
  out.value = b.h00 * tb.f[i] + b.h10 * h * tb.df[i] + b.h01 * tb.f[i + 1] + b.h11 * h * tb.df[i + 1];
  out.first =
      b.h00 * tb.df[i] + b.h10 * h * tb.d2f[i] + b.h01 * tb.df[i + 1] + b.h11 * h * tb.d2f[i + 1];
  if (family_ == WarpingFamily::PerturbedODE) {
    out.second = (a0_ + q_(r)) * out.value;
  } else {
    out.second = (1.0 - t) * tb.d2f[i] + t * tb.d2f[i + 1];
  }
  return out;
}

WarpingValue WarpingFunction::eval(double r) const {
  check_domain(r);
  const double k = std::sqrt(a0_);
  const double x = k * r;
  WarpingValue out;
  switch (family_) {
    case WarpingFamily::Exp: {
      const double e = c_ * std::exp(x);
      out = {e, k * e, a0_ * e};
      break;
    }
    case WarpingFamily::Sinh:
      out = {c_ * std::sinh(x), c_ * k * std::cosh(x), c_ * a0_ * std::sinh(x)};
      break;
    case WarpingFamily::Cosh:
      out = {c_ * std::cosh(x), c_ * k * std::sinh(x), c_ * a0_ * std::cosh(x)};
      break;
    case WarpingFamily::PerturbedODE:
    case WarpingFamily::Tabulated:
      out = interpolate(r);
      break;
  }
  if (!std::isfinite(out.value) || !std::isfinite(out.first) || !std::isfinite(out.second)) {
    throw Error(ErrorCode::Overflow, "warping function not representable at r=" + std::to_string(r));
  }
  return out;
}

double WarpingFunction::log_value(double r) const {
  check_domain(r);
  const double x = std::sqrt(a0_) * r;
  switch (family_) {
    case WarpingFamily::Exp: return std::log(c_) + x;
    case WarpingFamily::Sinh: return std::log(c_) + log_sinh(x);
    case WarpingFamily::Cosh: return std::log(c_) + log_cosh(x);
    default: return std::log(interpolate(r).value);
  }
}

double WarpingFunction::log_derivative(double r) const {
  check_domain(r);
  const double k = std::sqrt(a0_);
  const double x = k * r;
  switch (family_) {
    case WarpingFamily::Exp: return k;
    case WarpingFamily::Sinh: return k / std::tanh(x);
    case WarpingFamily::Cosh: return k * std::tanh(x);
    default: {
      const WarpingValue v = interpolate(r);
      return v.first / v.value;
    }
  }
}

double WarpingFunction::second_ratio(double r) const {
  check_domain(r);
  switch (family_) {
    case WarpingFamily::Exp:
    case WarpingFamily::Sinh:
    case WarpingFamily::Cosh:
      return a0_;
    case WarpingFamily::PerturbedODE:
      return a0_ + q_(r);
    case WarpingFamily::Tabulated: {
      const WarpingValue v = interpolate(r);
      return v.second / v.value;
    }
  }
  return a0_;
}

double WarpingFunction::first_deviation(double r) const {
  check_domain(r);
  const double x = std::sqrt(a0_) * r;
  switch (family_) {
    case WarpingFamily::Exp: return 0.0;
    case WarpingFamily::Sinh: {
      const double s = std::sinh(x);
      return a0_ / (s * s);
    }
    case WarpingFamily::Cosh: {
      const double c = std::cosh(x);
      return -a0_ / (c * c);
    }
    default: {
      const double g = log_derivative(r);
      return g * g - a0_;
    }
  }
}

double WarpingFunction::second_deviation(double r) const {
  check_domain(r);
  switch (family_) {
    case WarpingFamily::Exp:
    case WarpingFamily::Sinh:
    case WarpingFamily::Cosh:
      return 0.0;
    case WarpingFamily::PerturbedODE:
      return q_(r);
    case WarpingFamily::Tabulated:
      return second_ratio(r) - a0_;
  }
  return 0.0;
}

const std::vector<double>& WarpingFunction::sample_radii() const noexcept {
  static const std::vector<double> empty;
  return table_ ? table_->r : empty;
}
const std::vector<double>& WarpingFunction::sample_values() const noexcept {
  static const std::vector<double> empty;
  return table_ ? table_->f : empty;
}
const std::vector<double>& WarpingFunction::sample_first() const noexcept {
  static const std::vector<double> empty;
  return table_ ? table_->df : empty;
}
const std::vector<double>& WarpingFunction::sample_second() const noexcept {
  static const std::vector<double> empty;
  return table_ ? table_->d2f : empty;
}

ClassBReport class_b_report(const WarpingFunction& f, std::pair<double, double> tail_window,
                            double tol, double growth_floor, std::size_t samples) {
  const auto [lo, hi] = tail_window;
  if (!(hi > lo)) throw Error(ErrorCode::InvalidInterval, "tail window must satisfy r_hi > r_lo");
  if (!(lo > f.left_endpoint())) {
    throw Error(ErrorCode::OutOfDomain, "tail window must start right of c0");
  }
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (hi > f.right_endpoint()) {
    throw Error(ErrorCode::OutOfDomain, "tail window exceeds the evaluable range");
  }
  samples = std::max<std::size_t>(samples, 1000);

  ClassBReport report;
  report.tail_window = tail_window;
  report.samples = samples;
  double min_log = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) {
    const double r = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
    report.sup_dev_second = std::max(report.sup_dev_second, std::abs(f.second_deviation(r)));
    report.sup_dev_first = std::max(report.sup_dev_first, std::abs(f.first_deviation(r)));
    min_log = std::min(min_log, f.log_value(r));
  }
  report.min_tail_value = std::exp(min_log);
  report.verdict = report.sup_dev_second <= tol && report.sup_dev_first <= tol &&
                   report.min_tail_value >= growth_floor;
  return report;
}

namespace {

using State = std::array<double, 2>;

State rk4_step(const RadialFunction& q, double a0, double r, const State& y, double h) {
  auto rhs = [&](double x, const State& s) -> State { return {s[1], (a0 + q(x)) * s[0]}; };
  const State k1 = rhs(r, y);
  const State k2 = rhs(r + 0.5 * h, {y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]});
  const State k3 = rhs(r + 0.5 * h, {y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]});
  const State k4 = rhs(r + h, {y[0] + h * k3[0], y[1] + h * k3[1]});
  return {y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
          y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

}  // namespace

WarpingFunction integrate_perturbed(double a0, RadialFunction q, std::pair<double, double> init,
                                    std::pair<double, double> r_span, double step,
                                    double tolerance) {
  require_positive(a0, "a0");
  require_positive(step, "step");
  if (!q) throw Error(ErrorCode::InvalidArgument, "perturbation q is empty");
  const auto [r0, r1] = r_span;
  if (!(r1 > r0)) throw Error(ErrorCode::InvalidInterval, "r_span must satisfy r1 > r0");
  const auto [f0, df0] = init;
  if (f0 < 0.0) throw Error(ErrorCode::InvalidArgument, "initial value must be nonnegative");
  if (f0 == 0.0 && df0 == 0.0) throw Error(ErrorCode::InvalidArgument, "trivial initial data");

  // snap to a whole number of steps covering the span exactly
  const auto steps = static_cast<std::size_t>(std::max(1.0, std::round((r1 - r0) / step)));
  const double h = (r1 - r0) / static_cast<double>(steps);

  WarpingFunction::Table table;
  table.r.reserve(steps + 1);
  table.f.reserve(steps + 1);
  table.df.reserve(steps + 1);
  table.d2f.reserve(steps + 1);
  State y{f0, df0};
  auto push = [&](double r, const State& s) {
    table.r.push_back(r);
    table.f.push_back(s[0]);
    table.df.push_back(s[1]);
    table.d2f.push_back((a0 + q(r)) * s[0]);
  };
  push(r0, y);
  constexpr double kOverflow = 1e300;
  for (std::size_t i = 0; i < steps; ++i) {
    const double r = r0 + h * static_cast<double>(i);
    const State full = rk4_step(q, a0, r, y, h);
    const State half = rk4_step(q, a0, r + 0.5 * h, rk4_step(q, a0, r, y, 0.5 * h), 0.5 * h);
    const double scale = std::max({std::abs(full[0]), std::abs(full[1]), 1e-300});
    const double local =
        std::max(std::abs(half[0] - full[0]), std::abs(half[1] - full[1])) / 15.0 / scale;
    if (local > tolerance) {
      throw Error(ErrorCode::StepTooLarge, "local error estimate " + std::to_string(local) +
                                               " exceeds tolerance at r=" + std::to_string(r));
    }
    y = full;
    if (!std::isfinite(y[0]) || std::abs(y[0]) > kOverflow || std::abs(y[1]) > kOverflow) {
      throw Error(ErrorCode::Overflow, "solution exceeds representable magnitude; rescale init");
    }
    const double r_next = (i + 1 == steps) ? r1 : r0 + h * static_cast<double>(i + 1);
    if (!(y[0] > 0.0)) {
      throw Error(ErrorCode::OutOfDomain,
                  "integrated profile is not positive at r=" + std::to_string(r_next));
    }
    push(r_next, y);
  }

  WarpingFunction w(WarpingFamily::PerturbedODE, a0, 1.0, r0);
  w.table_ = std::make_shared<const WarpingFunction::Table>(std::move(table));
  w.q_ = std::move(q);
  return w;
}

HartmanReport hartman_check(const RadialFunction& q, double lambda, double T0,
                            const HartmanGrid& grid) {
  require_positive(lambda, "lambda");
  if (!q) throw Error(ErrorCode::InvalidArgument, "perturbation q is empty");
  if (grid.count < 2 || !(grid.t_end > T0)) {
    throw Error(ErrorCode::InvalidInterval, "Hartman grid must cover (T0, t_end) with >= 2 samples");
  }
  HartmanReport rep;
  rep.lambda = lambda;
  const std::size_t n = grid.count;
  rep.t.resize(n);
  rep.Q_values.resize(n);
  rep.scaled_values.resize(n);
  const double two_lambda = 2.0 * lambda;

  // The scaled integral S(t) = e^{2 lambda t} Q(t) = int_0^inf q(t+u) e^{-2 lambda u} du is
  // computed directly; Q(t) itself underflows quickly.
  bool finite = true;
  for (std::size_t j = 0; j < n; ++j) {
    const double t = T0 + (grid.t_end - T0) * static_cast<double>(j) / static_cast<double>(n - 1);
    rep.t[j] = t;
    const double qt = std::abs(q(t));
    double scaled = 0.0;
    if (qt > 0.0) {
      // truncate where the monotone tail bound drops below 1e-14 of the local scale
      const double target = 1e-14 * qt / two_lambda;
      double U = 1.0;
      while (std::abs(q(t + U)) * std::exp(-two_lambda * U) / two_lambda >= target) {
        U *= 2.0;
        if (U > 1e6) {
          throw Error(ErrorCode::TailNotNegligible,
                      "tail bound not below tolerance for t=" + std::to_string(t));
        }
      }
      quad::SimpsonOptions opt;
      opt.abs_tol = std::max(1e-300, 1e-15 * qt / two_lambda);
      scaled = quad::adaptive_simpson(
          [&](double u) { return q(t + u) * std::exp(-two_lambda * u); }, 0.0, U, opt);
    }
    rep.scaled_values[j] = scaled;
    rep.Q_values[j] = scaled * std::exp(-two_lambda * t);
    finite = finite && std::isfinite(scaled);
  }
  rep.existence_ok = finite;

  // |Q(t)| <= |q(t)| e^{-2 lambda t} / (2 lambda), checked on the scaled values
  rep.ratio_bound_ok = true;
  for (std::size_t j = 0; j < n; ++j) {
    const double bound = std::abs(q(rep.t[j])) / two_lambda;
    if (std::abs(rep.scaled_values[j]) > bound * (1.0 + 1e-9)) rep.ratio_bound_ok = false;
  }

  // Integrability proxies: the sampled integrals of |S| and |S|^2 are finite and
  // dominated by those of |q|/(2 lambda) and |q|^2/(4 lambda^2), the comparison
  // that makes them converge when q is integrable.
  std::vector<double> abs_s(n), sq_s(n), abs_q(n), sq_q(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double qv = std::abs(q(rep.t[j])) / two_lambda;
    abs_s[j] = std::abs(rep.scaled_values[j]);
    sq_s[j] = abs_s[j] * abs_s[j];
    abs_q[j] = qv;
    sq_q[j] = qv * qv;
  }
  const double h = rep.t[1] - rep.t[0];
  const double int_s = quad::composite_simpson(abs_s, h);
  const double int_s2 = quad::composite_simpson(sq_s, h);
  const double int_q = quad::composite_simpson(abs_q, h);
  const double int_q2 = quad::composite_simpson(sq_q, h);
  rep.integrability_ok = std::isfinite(int_s) && std::isfinite(int_q) && int_s <= int_q * (1.0 + 1e-9) + 1e-300;
  rep.square_integrability_ok =
      std::isfinite(int_s2) && std::isfinite(int_q2) && int_s2 <= int_q2 * (1.0 + 1e-9) + 1e-300;

  // Decay proxy: the supremum of |S| over the second half of the grid is at most
  // half the supremum over the whole grid (or S vanishes identically).
  double sup_all = 0.0, sup_tail = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    sup_all = std::max(sup_all, abs_s[j]);
    if (2 * j >= n) sup_tail = std::max(sup_tail, abs_s[j]);
  }
  rep.decay_ok = finite && (sup_all == 0.0 || sup_tail <= 0.5 * sup_all);
  return rep;
}

}  // namespace lpspec
