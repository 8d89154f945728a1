/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "internal.h"

namespace infercost::kernels::scalar {
namespace {

double Sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

CrossMoments CenteredMoments(const double* x, const double* y, std::size_t n, double mean_x,
                             double mean_y) {
  CrossMoments m;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    m.sxx += dx * dx;
    m.sxy += dx * dy;
    m.syy += dy * dy;
  }
  return m;
}

double ResidualSumSquares(const double* x, const double* y, std::size_t n, double slope,
                          double intercept) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (intercept + slope * x[i]);
    acc += r * r;
  }
  return acc;
}

void Divide(const double* num, const double* den, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = num[i] / den[i];
}

void Affine(const double* x, double slope, double intercept, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = intercept + slope * x[i];
}

}  // namespace

const KernelTable kTable = {
    Isa::kScalar, &Sum, &CenteredMoments, &ResidualSumSquares, &Divide, &Affine,
};

}  // namespace infercost::kernels::scalar
