/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "infercost/kernels.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

namespace infercost::kernels {
namespace {

std::vector<double> Random(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& d : v) d = dist(rng);
  return v;
}

void ExpectClose(double a, double b, double scale) {
  EXPECT_NEAR(a, b, 1e-12 * std::max(1.0, scale)) << a << " vs " << b;
}

TEST(Kernels, ScalarIsAlwaysAvailable) {
  const auto isas = available_isas();
  ASSERT_FALSE(isas.empty());
  EXPECT_EQ(isas.front(), Isa::kScalar);
  EXPECT_EQ(table(Isa::kScalar).isa, Isa::kScalar);
}

TEST(Kernels, ScalarReferenceValues) {
  const KernelTable& k = table(Isa::kScalar);
  const double x[] = {1, 2, 3, 4};
  const double y[] = {2, 4, 6, 8};
  EXPECT_DOUBLE_EQ(k.sum(x, 4), 10.0);
  const CrossMoments m = k.centered_moments(x, y, 4, 2.5, 5.0);
  EXPECT_DOUBLE_EQ(m.sxx, 5.0);
  EXPECT_DOUBLE_EQ(m.sxy, 10.0);
  EXPECT_DOUBLE_EQ(m.syy, 20.0);
  EXPECT_DOUBLE_EQ(k.residual_sum_squares(x, y, 4, 2.0, 0.0), 0.0);
  double out[4];
  k.divide(y, x, out, 4);
  for (double d : out) EXPECT_DOUBLE_EQ(d, 2.0);
  k.affine(x, 3.0, 1.0, out, 4);
  EXPECT_DOUBLE_EQ(out[3], 13.0);
}

TEST(Kernels, EmptyInputs) {
  for (Isa isa : available_isas()) {
    const KernelTable& k = table(isa);
    EXPECT_EQ(k.sum(nullptr, 0), 0.0);
    const CrossMoments m = k.centered_moments(nullptr, nullptr, 0, 0.0, 0.0);
    EXPECT_EQ(m.sxx, 0.0);
  }
}

// Every wide variant must agree with the scalar one on every length,
// including the remainder lanes.
TEST(Kernels, VariantsMatchScalar) {
  std::mt19937_64 rng(7);
  const KernelTable& ref = table(Isa::kScalar);
  for (Isa isa : available_isas()) {
    const KernelTable& k = table(isa);
    for (std::size_t n = 0; n <= 67; ++n) {
      const auto x = Random(rng, n, 2010.0, 2022.0);
      const auto y = Random(rng, n, -3.0, 4.0);
      const auto den = Random(rng, n, 0.5, 500.0);
      const double mx = n ? ref.sum(x.data(), n) / n : 0.0;
      const double my = n ? ref.sum(y.data(), n) / n : 0.0;
      SCOPED_TRACE(std::string(to_string(isa)) + " n=" + std::to_string(n));

      ExpectClose(k.sum(x.data(), n), ref.sum(x.data(), n), 2022.0 * n);
      const CrossMoments a = k.centered_moments(x.data(), y.data(), n, mx, my);
      const CrossMoments b = ref.centered_moments(x.data(), y.data(), n, mx, my);
      ExpectClose(a.sxx, b.sxx, b.sxx);
      ExpectClose(a.sxy, b.sxy, std::abs(b.sxy));
      ExpectClose(a.syy, b.syy, b.syy);
      const double ra = k.residual_sum_squares(x.data(), y.data(), n, 0.1, -200.0);
      const double rb = ref.residual_sum_squares(x.data(), y.data(), n, 0.1, -200.0);
      ExpectClose(ra, rb, rb);

      std::vector<double> qa(n), qb(n), fa(n), fb(n);
      k.divide(y.data(), den.data(), qa.data(), n);
      ref.divide(y.data(), den.data(), qb.data(), n);
      k.affine(x.data(), 0.3, -600.0, fa.data(), n);
      ref.affine(x.data(), 0.3, -600.0, fb.data(), n);
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(qa[i], qb[i]);  // division is exact in IEEE either way
        ExpectClose(fa[i], fb[i], 600.0);
      }
    }
  }
}

TEST(Kernels, DispatchCanBePinned) {
  const Isa before = active_isa();
  ASSERT_TRUE(set_active_isa(Isa::kScalar));
  EXPECT_EQ(active_isa(), Isa::kScalar);
  EXPECT_EQ(active_table().isa, Isa::kScalar);
  const std::vector<double> v = {1.0, 2.0, 3.0};
  EXPECT_DOUBLE_EQ(mean(v), 2.0);
  set_active_isa(before);
}

}  // namespace
}  // namespace infercost::kernels
