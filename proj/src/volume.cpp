#include "lpspec/volume.hpp"

#include <cmath>
#include <string>

#include "lpspec/error.hpp"
#include "lpspec/quadrature.hpp"

namespace lpspec {

namespace {

constexpr double kNodeTol = 1e-9;
constexpr double kDefaultSteps = 1e5;

std::size_t step_count(double r_max, double step) {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) {
    throw Error(ErrorCode::InvalidArgument, "r_max must be positive");
  }
  if (!(step > 0.0)) {
    // about r_max / 1e5, snapped so every multiple of 1e-3 is a node
    const double per_unit = 1000.0 * std::ceil(kDefaultSteps / (r_max * 1000.0));
    step = 1.0 / per_unit;
  }
  const double count = std::round(r_max / step);
  if (count < 2.0 || std::abs(count * step - r_max) > kNodeTol * r_max) {
    throw Error(ErrorCode::BreakpointMisaligned,
                "r_max = " + std::to_string(r_max) + " is not a multiple of step " +
                    std::to_string(step));
  }
  return static_cast<std::size_t>(count);
}

bool on_grid(double x, double h) {
  const double k = std::round(x / h);
  return std::abs(k * h - x) <= kNodeTol * std::max(1.0, std::abs(x));
}

template <class Coefficient>
SturmSolution integrate(const Coefficient& coeff, double r_max, std::size_t steps) {
  const double h = r_max / static_cast<double>(steps);
  SturmSolution sol;
  sol.step = h;
  sol.r.resize(steps + 1);
  sol.u.resize(steps + 1);
  sol.u_prime.resize(steps + 1);
  double u = 0.0;
  double v = 1.0;
  sol.r[0] = 0.0;
  sol.u[0] = u;
  sol.u_prime[0] = v;
  for (std::size_t i = 0; i < steps; ++i) {
    const double r = h * static_cast<double>(i);
    const double q0 = coeff(r, i, 0.0);
    const double qm = coeff(r, i, 0.5);
    const double q1 = coeff(r, i, 1.0);
    const double k1u = v;
    const double k1v = -q0 * u;
    const double k2u = v + 0.5 * h * k1v;
    const double k2v = -qm * (u + 0.5 * h * k1u);
    const double k3u = v + 0.5 * h * k2v;
    const double k3v = -qm * (u + 0.5 * h * k2u);
    const double k4u = v + h * k3v;
    const double k4v = -q1 * (u + h * k3u);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    if (!std::isfinite(u) || !std::isfinite(v)) {
      throw Error(ErrorCode::Overflow, "Sturm solution overflowed at r=" + std::to_string(r));
    }
    sol.r[i + 1] = (i + 1 == steps) ? r_max : h * static_cast<double>(i + 1);
    sol.u[i + 1] = u;
    sol.u_prime[i + 1] = v;
  }
  return sol;
}

}  // namespace

void PiecewiseQ::validate() const {
  if (!(a0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "a0 must be positive");
  if (!(eps >= 0.0)) throw Error(ErrorCode::InvalidArgument, "eps must be nonnegative");
  if (!(K >= std::sqrt(a0 + eps) * (1.0 - 1e-15))) {
    throw Error(ErrorCode::InvalidArgument, "K must be at least sqrt(a0+eps)");
  }
  if (!(s >= 0.0) || !(t >= s)) throw Error(ErrorCode::InvalidArgument, "need 0 <= s <= t");
}

double PiecewiseQ::operator()(double r) const noexcept {
  return (r >= s && r < t) ? -K * K : -b();
}

std::size_t SturmSolution::node_index(double x) const {
  if (r.empty() || x < 0.0 || x > r.back() * (1.0 + kNodeTol) || !on_grid(x, step)) {
    throw Error(ErrorCode::OutOfDomain, "radius " + std::to_string(x) + " is not a grid node");
  }
  return static_cast<std::size_t>(std::round(x / step));
}

SturmSolution solve_sturm(const PiecewiseQ& q, double r_max, double step) {
  q.validate();
  const std::size_t steps = step_count(r_max, step);
  const double h = r_max / static_cast<double>(steps);
  for (double breakpoint : {q.s, q.t}) {
    if (breakpoint < r_max && !on_grid(breakpoint, h)) {
      throw Error(ErrorCode::BreakpointMisaligned,
                  "breakpoint " + std::to_string(breakpoint) + " is not a grid node");
    }
  }
  const auto s_node = static_cast<std::size_t>(std::round(q.s / h));
  const auto t_node = static_cast<std::size_t>(std::round(q.t / h));
  const double inner = -q.K * q.K;
  const double outer = -q.b();
  auto coeff = [&](double, std::size_t i, double) {
    return (i >= s_node && i < t_node) ? inner : outer;
  };
  SturmSolution sol = integrate(coeff, r_max, steps);
  sol.piecewise = q;
  return sol;
}

SturmSolution solve_sturm(const RadialFunction& q, double r_max, double step) {
  if (!q) throw Error(ErrorCode::InvalidArgument, "coefficient q is empty");
  const std::size_t steps = step_count(r_max, step);
  const double h = r_max / static_cast<double>(steps);
  auto coeff = [&](double r, std::size_t, double frac) { return q(r + frac * h); };
  return integrate(coeff, r_max, steps);
}

double sturm_lower_bound(const PiecewiseQ& q, double r) {
  const double rb = std::sqrt(q.b());
  return std::sinh(rb * r) / rb;
}

double sturm_upper_bound(const PiecewiseQ& q, double r) {
  const double b = q.b();
  const double rb = std::sqrt(b);
  if (r < q.s) return std::exp(r * rb) / rb;
  if (r < q.t) return std::exp(q.s * rb + q.K * (r - q.s)) / rb;
  return q.K / b * std::exp(q.s * rb + q.K * (q.t - q.s) + (r - q.t) * rb);
}

BoundsCheck check_bounds(const SturmSolution& sol, const PiecewiseQ& q, double tol) {
  q.validate();
  BoundsCheck out{true, true, 0.0};
  for (std::size_t i = 0; i < sol.r.size(); ++i) {
    const double r = sol.r[i];
    const double lo = sturm_lower_bound(q, r);
    const double hi = sturm_upper_bound(q, r);
    const double below = (lo - sol.u[i]) / std::max(1.0, std::abs(lo));
    const double above = (sol.u[i] - hi) / std::max(1.0, std::abs(hi));
    out.max_violation = std::max({out.max_violation, below, above});
    if (below > tol) out.lower_ok = false;
    if (above > tol) out.upper_ok = false;
  }
  return out;
}

double volume_ratio(const SturmSolution& sol, int n, double r) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "dimension n must be >= 2");
  if (r < 1.0) throw Error(ErrorCode::OutOfDomain, "volume ratio needs r >= 1");
  const std::size_t i1 = sol.node_index(1.0);
  const std::size_t ir = sol.node_index(r);
  std::vector<double> y(ir + 1);
  for (std::size_t i = 0; i <= ir; ++i) y[i] = std::pow(sol.u[i], n - 1);
  const std::span<const double> ys(y);
  return quad::composite_simpson(ys.first(ir + 1), sol.step) /
         quad::composite_simpson(ys.first(i1 + 1), sol.step);
}

GrowthEstimate growth_rate(const SturmSolution& sol, int n, std::pair<double, double> window) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "dimension n must be >= 2");
  const auto [lo, hi] = window;
  if (!(hi - lo >= 5.0)) {
    throw Error(ErrorCode::WindowTooShort, "fit window must span at least 5");
  }
  if (lo <= 0.0 || hi > sol.r_max() * (1.0 + kNodeTol)) {
    throw Error(ErrorCode::OutOfDomain, "fit window must lie inside (0, r_max]");
  }
  std::vector<double> y(sol.u.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::pow(sol.u[i], n - 1);
  std::vector<double> cumulative(y.size());
  quad::cumulative_simpson(y, sol.step, cumulative);

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < sol.r.size(); ++i) {
    const double r = sol.r[i];
    if (r < lo - kNodeTol || r > hi + kNodeTol) continue;
    const double v = std::log(cumulative[i]);
    if (!std::isfinite(v)) throw Error(ErrorCode::Overflow, "log volume integral not finite");
    pts.emplace_back(r, v);
    sx += r;
    sy += v;
    sxx += r * r;
    sxy += r * v;
  }
  const auto m = static_cast<double>(pts.size());
  if (pts.size() < 3) throw Error(ErrorCode::WindowTooShort, "fit window holds too few nodes");
  const double denom = m * sxx - sx * sx;
  const double slope = (m * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / m;
  double ss = 0.0;
  for (const auto& [x, v] : pts) {
    const double e = v - (intercept + slope * x);
    ss += e * e;
  }
  GrowthEstimate est;
  est.gamma_hat = slope;
  est.window = window;
  est.n = n;
  est.fit_residual = std::sqrt(ss / m);
  est.points = pts.size();
  return est;
}

GrowthEstimate growth_rate(const SturmSolution& sol, int n) {
  const double r_max = sol.r_max();
  return growth_rate(sol, n, {r_max * 2.0 / 3.0, r_max});
}

}  // namespace lpspec
