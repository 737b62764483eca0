#include "lpspec/cutoff.hpp"

#include <cmath>

#include "lpspec/error.hpp"

namespace lpspec {

namespace {

CutoffValue smoothstep(double x) {
  const double x2 = x * x;
  const double one_minus = 1.0 - x;
  return {x2 * x * (10.0 + x * (-15.0 + 6.0 * x)), 30.0 * x2 * one_minus * one_minus,
          60.0 * x * one_minus * (1.0 - 2.0 * x)};
}

}  // namespace

CutoffProfile::CutoffProfile(double A, double B) : A_(A), B_(B) {
  if (!(B > A) || !std::isfinite(A) || !std::isfinite(B)) {
    throw Error(ErrorCode::InvalidInterval, "cutoff needs finite B > A");
  }
}

CutoffValue CutoffProfile::eval(double r) const noexcept {
  if (r <= A_ - 1.0 || r >= B_ + 1.0) return {};
  if (r < A_) return smoothstep(r - (A_ - 1.0));
  if (r <= B_) return {1.0, 0.0, 0.0};
  const CutoffValue s = smoothstep(B_ + 1.0 - r);
  return {s.value, -s.first, s.second};
}

CutoffProfile make_cutoff(double A, double B) { return CutoffProfile(A, B); }

}  // namespace lpspec
