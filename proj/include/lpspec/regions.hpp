#pragma once

#include <complex>
#include <span>
#include <vector>

namespace lpspec {

using cplx = std::complex<double>;

/// Dimension n, form degree k, integrability exponent p in [1, inf] and the
/// curvature scale a0 of the end.
struct SpectralParams {
  int n = 2;
  int k = 0;
  double p = 2.0;
  double a0 = 1.0;

  /// Throws InvalidArgument unless n >= 2, 0 <= k <= n, 1 <= p <= inf, a0 > 0.
  void validate() const;

  /// Quotient H^{N+1}/Gamma: n = N + 1 and a0 = 1.
  static SpectralParams quotient(int N, int k, double p);
};

/// {vertex + z^2 : |Im z| <= im_half_width}. For p = 2 this is the ray [vertex, inf).
struct ParabolicRegion {
  double vertex = 0.0;
  double im_half_width = 0.0;
  SpectralParams params;

  /// Leftmost real point, vertex - im_half_width^2.
  double real_minimum() const noexcept { return vertex - im_half_width * im_half_width; }
  /// Point of the boundary parabola, vertex + (x + i*w)^2.
  cplx boundary_point(double x) const noexcept;
};

struct SpectrumModel {
  ParabolicRegion region;
  std::vector<double> isolated_eigenvalues;  ///< sorted ascending
  SpectralParams params;

  bool contains(cplx lambda, double tol = 1e-9) const;
};

/// Point of the curve -a0((n-1)/p - k + is)((n-1)(1/p - 1) + k + is).
cplx curve_point(const SpectralParams& params, double s);

/// min(k, n - k).
int canonical_degree(int k, int n);

/// Hoelder conjugate; 1 <-> inf, 2 -> 2.
double dual_exponent(double p);

/// Vertex a0((n-1)/2 - k)^2 and half-width sqrt(a0)(n-1)|1/p - 1/2|. p = inf is
/// read through its dual. Throws DegreeNotCanonical when k > n/2.
ParabolicRegion region_params(const SpectralParams& params);

/// Euclidean distance from lambda to the closed region (0 inside).
double region_distance(const ParabolicRegion& region, cplx lambda);

/// Membership up to distance tol. For p = 2 the ray test is |Im| <= tol and
/// Re >= vertex - tol.
bool contains(const ParabolicRegion& region, cplx lambda, double tol = 1e-9);

/// Checks that the curves with exponents q in [p, 2] fill the region for p:
/// every sampled curve point lies in the region, and every boundary sample is
/// matched by a sampled curve point, both within tol.
bool union_identity_check(double p, int k, int n, double a0, int q_samples, int s_samples,
                          double tol, double s_max = 5.0);

struct EssentialBottom {
  double bottom = 0.0;
  bool zero_eigenvalue = false;
};

/// Bottom of the L^2 essential spectrum on k-forms for limiting curvature -a0.
EssentialBottom essential_bottom(int k, int n, double a0, bool infinite_volume);

/// Spectrum of a cusp-free, infinite-volume quotient: the region for
/// (N = n - 1, a0 = 1) together with the given real eigenvalues.
/// Throws MiddleDegreeUnsupported when k = n/2 and DegreeNotCanonical when k > n/2.
SpectrumModel assemble_spectrum(const SpectralParams& params, std::vector<double> eigenvalues);

}  // namespace lpspec
