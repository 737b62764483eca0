#pragma once

#include <array>

namespace lpspec {

struct CutoffValue {
  double value = 0.0;
  double first = 0.0;
  double second = 0.0;
};

/// C^2 bump: 0 outside [A-1, B+1], 1 on [A, B], quintic smoothstep
/// 6x^5 - 15x^4 + 10x^3 on each unit ramp.
class CutoffProfile {
 public:
  /// sup|phi'| = 15/8, attained at the ramp midpoints.
  static constexpr double kFirstBound = 15.0 / 8.0;
  /// sup|phi''| = 10/sqrt(3), rounded up.
  static constexpr double kSecondBound = 6.0;

  /// Throws InvalidInterval unless B > A.
  CutoffProfile(double A, double B);

  double plateau_start() const noexcept { return A_; }
  double plateau_end() const noexcept { return B_; }
  double support_start() const noexcept { return A_ - 1.0; }
  double support_end() const noexcept { return B_ + 1.0; }
  /// A-1, A, B, B+1
  std::array<double, 4> knots() const noexcept { return {A_ - 1.0, A_, B_, B_ + 1.0}; }

  CutoffValue eval(double r) const noexcept;

 private:
  double A_;
  double B_;
};

CutoffProfile make_cutoff(double A, double B);

}  // namespace lpspec
