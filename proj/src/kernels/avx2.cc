/*
 * SPDX-License-Identifier: Apache-2.0
 */

// AVX2 + FMA variants.  This translation unit is the only one compiled with
// -mavx2 -mfma; nothing here may run before dispatch.cc has checked cpuid.

#include <immintrin.h>

#include "internal.h"

namespace infercost::kernels::avx2 {
namespace {

inline double HorizontalSum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  const __m128d swapped = _mm_unpackhi_pd(pair, pair);
  return _mm_cvtsd_f64(_mm_add_sd(pair, swapped));
}

double Sum(const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
  }
  double total = HorizontalSum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) total += x[i];
  return total;
}

CrossMoments CenteredMoments(const double* x, const double* y, std::size_t n, double mean_x,
                             double mean_y) {
  const __m256d mx = _mm256_set1_pd(mean_x);
  const __m256d my = _mm256_set1_pd(mean_y);
  __m256d sxx = _mm256_setzero_pd();
  __m256d sxy = _mm256_setzero_pd();
  __m256d syy = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x + i), mx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(y + i), my);
    sxx = _mm256_fmadd_pd(dx, dx, sxx);
    sxy = _mm256_fmadd_pd(dx, dy, sxy);
    syy = _mm256_fmadd_pd(dy, dy, syy);
  }
  CrossMoments m{HorizontalSum(sxx), HorizontalSum(sxy), HorizontalSum(syy)};
  for (; i < n; ++i) {
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
  const __m256d b = _mm256_set1_pd(slope);
  const __m256d a = _mm256_set1_pd(intercept);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d fitted = _mm256_fmadd_pd(b, _mm256_loadu_pd(x + i), a);
    const __m256d r = _mm256_sub_pd(_mm256_loadu_pd(y + i), fitted);
    acc = _mm256_fmadd_pd(r, r, acc);
  }
  double total = HorizontalSum(acc);
  for (; i < n; ++i) {
    const double r = y[i] - (intercept + slope * x[i]);
    total += r * r;
  }
  return total;
}

void Divide(const double* num, const double* den, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_div_pd(_mm256_loadu_pd(num + i), _mm256_loadu_pd(den + i)));
  }
  for (; i < n; ++i) out[i] = num[i] / den[i];
}

void Affine(const double* x, double slope, double intercept, double* out, std::size_t n) {
  const __m256d b = _mm256_set1_pd(slope);
  const __m256d a = _mm256_set1_pd(intercept);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(b, _mm256_loadu_pd(x + i), a));
  }
  for (; i < n; ++i) out[i] = intercept + slope * x[i];
}

}  // namespace

const KernelTable kTable = {
    Isa::kAvx2, &Sum, &CenteredMoments, &ResidualSumSquares, &Divide, &Affine,
};

}  // namespace infercost::kernels::avx2
