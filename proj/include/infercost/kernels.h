/*
 * SPDX-License-Identifier: Apache-2.0
 */

// Data-parallel inner loops shared by the regression, correlation and energy
// code.  Every kernel has a scalar reference implementation; wider variants
// are selected once at startup from the CPU feature set and must agree with
// the scalar one to round-off (see tests/kernels_test.cc).

#ifndef INFERCOST_KERNELS_H_
#define INFERCOST_KERNELS_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace infercost::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view to_string(Isa isa);

// Best ISA supported by both the build and the running CPU.
Isa detected_isa();
// ISA used by the free functions below.  INFERCOST_FORCE_SCALAR=1 in the
// environment pins the scalar path.
Isa active_isa();
// Test hook; returns false if `isa` is not available.
bool set_active_isa(Isa isa);
std::vector<Isa> available_isas();

// Centered second moments about given means.
struct CrossMoments {
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
};

struct KernelTable {
  Isa isa;
  double (*sum)(const double* x, std::size_t n);
  CrossMoments (*centered_moments)(const double* x, const double* y, std::size_t n,
                                   double mean_x, double mean_y);
  // sum_i (y_i - (intercept + slope * x_i))^2
  double (*residual_sum_squares)(const double* x, const double* y, std::size_t n,
                                 double slope, double intercept);
  // out_i = num_i / den_i
  void (*divide)(const double* num, const double* den, double* out, std::size_t n);
  // out_i = intercept + slope * x_i
  void (*affine)(const double* x, double slope, double intercept, double* out,
                 std::size_t n);
};

const KernelTable& table(Isa isa);
const KernelTable& active_table();

double sum(std::span<const double> x);
double mean(std::span<const double> x);
CrossMoments centered_moments(std::span<const double> x, std::span<const double> y,
                              double mean_x, double mean_y);
double residual_sum_squares(std::span<const double> x, std::span<const double> y,
                            double slope, double intercept);
void divide(std::span<const double> num, std::span<const double> den, std::span<double> out);
void affine(std::span<const double> x, double slope, double intercept, std::span<double> out);

}  // namespace infercost::kernels

#endif  // INFERCOST_KERNELS_H_
