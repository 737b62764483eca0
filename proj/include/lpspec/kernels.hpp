#pragma once

// Data-parallel kernels. `serial` is the plain reference loop kept for testing
// and benchmarking; `omp` is the OpenMP version used by the library. Both
// produce identical results (each output element is computed independently).

#include <complex>
#include <span>
#include <vector>

#include "lpspec/radialop.hpp"
#include "lpspec/regions.hpp"
#include "lpspec/warping.hpp"

namespace lpspec {

enum class Execution { Serial, Parallel };

namespace kernels {

/// Sets the OpenMP thread count; 0 keeps the runtime default.
void set_threads(int threads);
int max_threads();

namespace serial {

/// Interior Delta_2 stencil: out[i-1] for nodes i = 1..m-2, r_i = r0 + i*dr.
void fd_apply(std::span<const cplx> h, const WarpingFunction& f, const OperatorContext& ctx,
              double r0, double dr, std::span<cplx> out);

std::vector<unsigned char> contains_batch(const ParabolicRegion& region,
                                          std::span<const cplx> points, double tol);

/// For each query, the distance to the closest point of the cloud.
std::vector<double> nearest_distance(std::span<const cplx> queries, std::span<const cplx> cloud);

}  // namespace serial

namespace omp {

void fd_apply(std::span<const cplx> h, const WarpingFunction& f, const OperatorContext& ctx,
              double r0, double dr, std::span<cplx> out);

std::vector<unsigned char> contains_batch(const ParabolicRegion& region,
                                          std::span<const cplx> points, double tol);

std::vector<double> nearest_distance(std::span<const cplx> queries, std::span<const cplx> cloud);

}  // namespace omp

}  // namespace kernels
}  // namespace lpspec
