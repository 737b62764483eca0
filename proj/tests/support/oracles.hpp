#pragma once

// Independent reference computations shared by unit and acceptance tests.
// None of these call into the library code they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace oracle {

using cplx = std::complex<double>;

/// Real roots of x^3 + P x + Q = 0.
inline int real_cubic_roots(double P, double Q, double out[3]) {
  const double disc = Q * Q / 4.0 + P * P * P / 27.0;
  if (disc > 0.0) {
    const double sq = std::sqrt(disc);
    out[0] = std::cbrt(-Q / 2.0 + sq) + std::cbrt(-Q / 2.0 - sq);
    return 1;
  }
  const double m = 2.0 * std::sqrt(std::max(0.0, -P / 3.0));
  if (m == 0.0) {
    out[0] = 0.0;
    return 1;
  }
  const double arg = std::clamp(3.0 * Q / (P * m), -1.0, 1.0);
  const double theta = std::acos(arg) / 3.0;
  for (int j = 0; j < 3; ++j) out[j] = m * std::cos(theta - 2.0 * M_PI * j / 3.0);
  return 3;
}

/// min over x >= 0 of |(x + iy)^2 - c|, from the critical points of the
/// quartic (x^2 - y^2 - Re c)^2 + (2xy - Im c)^2.
inline double gap_at(double y, cplx c) {
  const double a = y * y + c.real();
  const double b = c.imag();
  auto g = [&](double x) { return std::hypot(x * x - a, 2.0 * x * y - b); };
  double best = g(0.0);
  double roots[3];
  const int count = real_cubic_roots(2.0 * y * y - a, -y * b, roots);
  for (int j = 0; j < count; ++j) {
    if (roots[j] >= 0.0) best = std::min(best, g(roots[j]));
  }
  return best;
}

/// min over z = x + iy, x >= 0, |y| <= w, of |vertex + z^2 - lambda|: exact in
/// x, dense grid in y refined by step halving around the best few grid points.
inline double parabola_gap(double vertex, double w, cplx lambda) {
  const cplx c = lambda - vertex;
  if (!(w > 0.0)) return gap_at(0.0, c);
  constexpr int kGrid = 2000;
  const double h = 2.0 * w / kGrid;
  double best = std::numeric_limits<double>::infinity();
  double values[kGrid + 1];
  for (int j = 0; j <= kGrid; ++j) {
    values[j] = gap_at(-w + h * j, c);
    best = std::min(best, values[j]);
  }
  for (int j = 0; j <= kGrid; ++j) {
    const bool local = (j == 0 || values[j] <= values[j - 1]) && (j == kGrid || values[j] <= values[j + 1]);
    if (!local) continue;
    double y = -w + h * j, v = values[j], step = h;
    while (step > 1e-15) {
      bool moved = false;
      for (double d : {step, -step}) {
        const double ny = std::clamp(y + d, -w, w);
        const double nv = gap_at(ny, c);
        if (nv < v) {
          y = ny;
          v = nv;
          moved = true;
        }
      }
      if (!moved) step *= 0.5;
    }
    best = std::min(best, v);
  }
  return best;
}

/// Closed-form value of the P curve, written out independently.
inline cplx curve(int n, int k, double p, double a0, double s) {
  const cplx first((n - 1) / p - k, s);
  const cplx second((n - 1) * (1.0 / p - 1.0) + k, s);
  return -a0 * first * second;
}

/// Solution of u'' = b u, u(0) = 0, u'(0) = 1 propagated through piecewise
/// constant segments by exact hyperbolic transfer matrices.
struct Transfer {
  double u;
  double du;
};

inline Transfer propagate(double b, double u, double du, double len) {
  const double k = std::sqrt(b);
  return {u * std::cosh(k * len) + du / k * std::sinh(k * len),
          u * k * std::sinh(k * len) + du * std::cosh(k * len)};
}

/// u(r) for q = -b on [0,s), -K^2 on [s,t), -b beyond.
inline Transfer piecewise_sturm(double b, double K, double s, double t, double r) {
  Transfer st{0.0, 1.0};
  const double r1 = std::min(r, s);
  st = propagate(b, st.u, st.du, r1);
  if (r <= s) return st;
  const double r2 = std::min(r, t);
  st = propagate(K * K, st.u, st.du, r2 - s);
  if (r <= t) return st;
  return propagate(b, st.u, st.du, r - t);
}

}  // namespace oracle
