#include "lpspec/quadrature.hpp"

namespace lpspec::quad {

double composite_simpson(std::span<const double> y, double h) {
  const std::size_t count = y.size();
  if (count < 2) return 0.0;
  if (count == 2) return 0.5 * h * (y[0] + y[1]);
  const std::size_t panels = count - 1;
  std::size_t simpson_end = panels;
  double tail = 0.0;
  if (panels % 2 == 1) {
    if (panels < 3) return 0.5 * h * (y[0] + y[1]) + 0.5 * h * (y[1] + y[2]);
    simpson_end = panels - 3;
    const std::size_t j = simpson_end;
    tail = 3.0 * h / 8.0 * (y[j] + 3.0 * y[j + 1] + 3.0 * y[j + 2] + y[j + 3]);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i + 2 <= simpson_end; i += 2) {
    sum += y[i] + 4.0 * y[i + 1] + y[i + 2];
  }
  return h / 3.0 * sum + tail;
}

void cumulative_simpson(std::span<const double> y, double h, std::span<double> out) {
  const std::size_t count = y.size();
  if (count == 0) return;
  out[0] = 0.0;
  if (count == 1) return;
  if (count == 2) {
    out[1] = 0.5 * h * (y[0] + y[1]);
    return;
  }
  for (std::size_t i = 1; i < count; ++i) {
    if (i % 2 == 0) {
      out[i] = out[i - 2] + h / 3.0 * (y[i - 2] + 4.0 * y[i - 1] + y[i]);
    } else if (i + 1 < count) {
      // quadratic through (i-1, i, i+1) integrated over the first panel
      out[i] = out[i - 1] + h / 12.0 * (5.0 * y[i - 1] + 8.0 * y[i] - y[i + 1]);
    } else {
      // last node, quadratic through (i-2, i-1, i) over its final panel
      out[i] = out[i - 1] + h / 12.0 * (-y[i - 2] + 8.0 * y[i - 1] + 5.0 * y[i]);
    }
  }
}

}  // namespace lpspec::quad
