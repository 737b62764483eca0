#include "lpspec/regions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "lpspec/error.hpp"
#include "lpspec/kernels.hpp"

namespace lpspec {

void SpectralParams::validate() const {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "dimension n must be >= 2");
  if (k < 0 || k > n) throw Error(ErrorCode::InvalidArgument, "degree k must lie in [0, n]");
  if (std::isnan(p) || p < 1.0) throw Error(ErrorCode::InvalidArgument, "exponent p must lie in [1, inf]");
  if (!(a0 > 0.0) || !std::isfinite(a0)) throw Error(ErrorCode::InvalidArgument, "a0 must be positive");
}

SpectralParams SpectralParams::quotient(int N, int k, double p) {
  return SpectralParams{N + 1, k, p, 1.0};
}

cplx ParabolicRegion::boundary_point(double x) const noexcept {
  const cplx z(x, im_half_width);
  return vertex + z * z;
}

cplx curve_point(const SpectralParams& params, double s) {
  params.validate();
  if (std::isinf(params.p)) {
    throw Error(ErrorCode::InvalidArgument, "curve_point requires a finite exponent");
  }
  const double m = params.n - 1;
  const cplx first(m / params.p - params.k, s);
  const cplx second(m * (1.0 / params.p - 1.0) + params.k, s);
  return -params.a0 * first * second;
}

int canonical_degree(int k, int n) {
  if (k < 0 || k > n) throw Error(ErrorCode::InvalidArgument, "degree k must lie in [0, n]");
  return std::min(k, n - k);
}

double dual_exponent(double p) {
  if (std::isnan(p) || p < 1.0) throw Error(ErrorCode::InvalidArgument, "exponent p must lie in [1, inf]");
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

ParabolicRegion region_params(const SpectralParams& params) {
  params.validate();
  if (2 * params.k > params.n) {
    throw Error(ErrorCode::DegreeNotCanonical,
                "k=" + std::to_string(params.k) + " exceeds n/2; apply canonical_degree first");
  }
  const double p = std::isinf(params.p) ? dual_exponent(params.p) : params.p;
  const double centre = 0.5 * (params.n - 1) - params.k;
  ParabolicRegion region;
  region.params = params;
  region.vertex = params.a0 * centre * centre;
  region.im_half_width = std::sqrt(params.a0) * (params.n - 1) * std::abs(1.0 / p - 0.5);
  return region;
}

double region_distance(const ParabolicRegion& region, cplx lambda) {
  const double u = lambda.real() - region.vertex;
  const double v = lambda.imag();
  const double w = region.im_half_width;
  if (w == 0.0) {
    return u >= 0.0 ? std::abs(v) : std::hypot(u, v);
  }
  const double w2 = w * w;
  if (v * v <= 4.0 * w2 * (u + w2)) return 0.0;

  // Boundary: u = a t^2 - b with v = t. Stationary points of the squared distance
  // solve the depressed cubic t^3 + P t + Q = 0.
  const double a = 1.0 / (4.0 * w2);
  const double b = w2;
  const double P = (1.0 - 2.0 * a * (b + u)) / (2.0 * a * a);
  const double Q = -v / (2.0 * a * a);
  std::array<double, 3> roots{};
  int count = 0;
  const double disc = 0.25 * Q * Q + P * P * P / 27.0;
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    roots[count++] = std::cbrt(-0.5 * Q + sq) + std::cbrt(-0.5 * Q - sq);
  } else {
    const double rho = 2.0 * std::sqrt(-P / 3.0);
    const double theta = std::acos(std::clamp(3.0 * Q / (P * rho), -1.0, 1.0)) / 3.0;
    for (int j = 0; j < 3; ++j) {
      roots[count++] = rho * std::cos(theta - 2.0 * M_PI * j / 3.0);
    }
  }
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < count; ++j) {
    double t = roots[j];
    for (int it = 0; it < 3; ++it) {
      const double g = t * t * t + P * t + Q;
      const double dg = 3.0 * t * t + P;
      if (dg == 0.0) break;
      t -= g / dg;
    }
    best = std::min(best, std::hypot(a * t * t - b - u, t - v));
  }
  return best;
}

bool contains(const ParabolicRegion& region, cplx lambda, double tol) {
  if (tol < 0.0) throw Error(ErrorCode::InvalidArgument, "tolerance must be nonnegative");
  if (region.im_half_width == 0.0) {
    return std::abs(lambda.imag()) <= tol && lambda.real() - region.vertex >= -tol;
  }
  return region_distance(region, lambda) <= tol;
}

bool union_identity_check(double p, int k, int n, double a0, int q_samples, int s_samples,
                          double tol, double s_max) {
  if (std::isnan(p) || p < 1.0 || p > 2.0) {
    throw Error(ErrorCode::InvalidArgument, "union identity requires 1 <= p <= 2");
  }
  if (q_samples < 1 || s_samples < 2) {
    throw Error(ErrorCode::InvalidArgument, "need q_samples >= 1 and s_samples >= 2");
  }
  const ParabolicRegion region = region_params(SpectralParams{n, k, p, a0});

  const int q_count = (p == 2.0) ? 1 : std::max(q_samples, 2);
  std::vector<double> s_grid(static_cast<std::size_t>(s_samples));
  for (int j = 0; j < s_samples; ++j) {
    s_grid[static_cast<std::size_t>(j)] = -s_max + 2.0 * s_max * j / (s_samples - 1);
  }
  std::vector<cplx> cloud;
  cloud.reserve(static_cast<std::size_t>(q_count) * s_grid.size());
  for (int i = 0; i < q_count; ++i) {
    const double q = (q_count == 1) ? p : p + (2.0 - p) * i / (q_count - 1);
    const SpectralParams curve{n, k, q, a0};
    for (double s : s_grid) cloud.push_back(curve_point(curve, s));
  }

  // (a) every curve point with exponent in [p, 2] lies in the region
  const std::vector<unsigned char> inside = kernels::omp::contains_batch(region, cloud, tol);
  if (std::find(inside.begin(), inside.end(), 0) != inside.end()) return false;

  // (b) the boundary parabola, parametrised independently of the curve formula,
  // is traced by sampled curve points
  std::vector<cplx> boundary;
  boundary.reserve(s_grid.size());
  for (double s : s_grid) boundary.push_back(region.boundary_point(std::sqrt(a0) * s));
  const std::vector<double> gaps = kernels::omp::nearest_distance(boundary, cloud);
  return std::all_of(gaps.begin(), gaps.end(), [tol](double g) { return g <= tol; });
}

EssentialBottom essential_bottom(int k, int n, double a0, bool infinite_volume) {
  if (n < 1 || k < 0 || k > n) throw Error(ErrorCode::InvalidArgument, "need 0 <= k <= n");
  if (!(a0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "a0 must be positive");
  if (2 * k < n) {
    const double d = n - 2 * k - 1;
    return {a0 * d * d / 4.0, false};
  }
  if (2 * k > n) {
    const double d = n - 2 * k + 1;
    return {a0 * d * d / 4.0, false};
  }
  return {a0 / 4.0, infinite_volume};
}

SpectrumModel assemble_spectrum(const SpectralParams& params, std::vector<double> eigenvalues) {
  params.validate();
  if (params.a0 != 1.0) {
    throw Error(ErrorCode::InvalidArgument, "hyperbolic quotients have a0 = 1");
  }
  if (2 * params.k == params.n) {
    throw Error(ErrorCode::MiddleDegreeUnsupported,
                "k = (N+1)/2 = " + std::to_string(params.k) + " is excluded");
  }
  for (double e : eigenvalues) {
    if (!std::isfinite(e)) throw Error(ErrorCode::InvalidArgument, "eigenvalues must be finite reals");
  }
  SpectrumModel model;
  model.region = region_params(params);
  model.params = params;
  std::sort(eigenvalues.begin(), eigenvalues.end());
  model.isolated_eigenvalues = std::move(eigenvalues);
  return model;
}

bool SpectrumModel::contains(cplx lambda, double tol) const {
  if (lpspec::contains(region, lambda, tol)) return true;
  return std::any_of(isolated_eigenvalues.begin(), isolated_eigenvalues.end(),
                     [&](double e) { return std::abs(lambda - cplx(e, 0.0)) <= tol; });
}

}  // namespace lpspec
