/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "infercost/forecaster.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace infercost {
namespace {

TEST(Baselines, Somatic) {
  EXPECT_NEAR(somatic_baseline(2000).joules_per_second, 2000.0 * 4184 / 86400, 1e-12);
  EXPECT_NEAR(somatic_baseline(2000).joules_per_second, 96.85, 0.01);
  EXPECT_NEAR(somatic_baseline(86400.0 / 4184.0).joules_per_second, 1.0, 1e-12);
  EXPECT_NEAR(somatic_baseline(1000).joules_per_second, 48.43, 0.01);
  EXPECT_EQ(somatic_baseline(1).kind, BaselineKind::kSomatic);
  EXPECT_THROW(somatic_baseline(0), Error);
}

TEST(Baselines, External) {
  EXPECT_NEAR(external_baseline(79897).joules_per_second, 9114.4, 0.1);
  EXPECT_NEAR(external_baseline(8766).joules_per_second, 1000.0, 1e-9);
  EXPECT_NEAR(external_baseline(0.008766).joules_per_second, 0.001, 1e-15);
  EXPECT_THROW(external_baseline(-5), Error);
}

TEST(Baselines, ConstantsAreConfigurable) {
  EnergyConstants c;
  c.joules_per_kcal = 4186.8;  // International Table calorie
  EXPECT_NEAR(somatic_baseline(2000, c).joules_per_second, 96.92, 0.01);
}

TEST(Baselines, Linear) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(1, 1e5);
  for (int i = 0; i < 50; ++i) {
    const double a = u(rng), b = u(rng);
    EXPECT_NEAR(somatic_baseline(a + b).joules_per_second,
                somatic_baseline(a).joules_per_second + somatic_baseline(b).joules_per_second,
                1e-9 * (a + b));
    EXPECT_NEAR(external_baseline(a + b).joules_per_second,
                external_baseline(a).joules_per_second + external_baseline(b).joules_per_second,
                1e-9 * (a + b));
  }
}

TrendFit Through(double year, double value, double slope) {
  TrendFit f;
  f.slope = slope;
  f.intercept = std::log10(value) - slope * year;
  return f;
}

TEST(Crossing, ClosedForm) {
  const Crossing c = crossing_date(Through(2020, 10, 1), custom_baseline(100), 2020);
  EXPECT_NEAR(c.year, 2021.0, 1e-9);
  EXPECT_FALSE(c.in_past);
  ASSERT_TRUE(c.date);
  // Days over 365.25 puts 2021.0 on the last day of 2020.
  EXPECT_NEAR(fractional_year(*c.date), c.year, 1.0 / 365.25);
}

TEST(Crossing, PastCrossings) {
  // Falling line that was above the baseline earlier.
  const Crossing falling = crossing_date(Through(2020, 10, -0.5), custom_baseline(100), 2020);
  EXPECT_TRUE(falling.in_past);
  EXPECT_NEAR(falling.year, 2018.0, 1e-9);
  // Rising line already above the baseline.
  const Crossing rising = crossing_date(Through(2020, 10, 0.5), custom_baseline(1), 2020);
  EXPECT_TRUE(rising.in_past);
}

TEST(Crossing, RoundTrip) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> slope(-0.6, 0.6), value(1e-3, 1e3), base(0.5, 2e4);
  for (int i = 0; i < 100; ++i) {
    double s = slope(rng);
    if (std::abs(s) < 1e-3) s = 0.1;
    const TrendFit f = Through(2018, value(rng), s);
    const Baseline b = custom_baseline(base(rng));
    const Crossing c = crossing_date(f, b, 2021);
    EXPECT_NEAR(predict(f, c.year) / b.joules_per_second, 1.0, 1e-9);
  }
}

TEST(Crossing, ZeroSlope) {
  try {
    crossing_date(Through(2020, 10, 0), custom_baseline(100), 2020);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroSlope);
  }
}

TEST(PerCapita, Examples) {
  const PerCapitaPower p = percapita_power(0.2191, {1.0, 1.0});
  EXPECT_DOUBLE_EQ(p.per_capita_watts, 0.2191);
  EXPECT_NEAR(p.per_capita_watts / somatic_baseline(2000).joules_per_second, 0.0023, 1e-4);
  EXPECT_DOUBLE_EQ(percapita_power(5, {0.0, 10}).per_capita_watts, 0.0);
  const PerCapitaPower car = percapita_power(7.946, {30, 1000});
  EXPECT_NEAR(car.per_capita_watts, 238.38, 0.01);
  EXPECT_GT(car.per_capita_watts, somatic_baseline(2000).joules_per_second);
  EXPECT_NEAR(car.aggregate_watts, 238380, 1);
  EXPECT_THROW(percapita_power(0, {1, 1}), Error);
  EXPECT_THROW(percapita_power(1, {-1, 1}), Error);
}

TEST(PerCapita, Bilinear) {
  const double j = 2.5, r = 3.0;
  const double base = percapita_power(j, {r, 1}).per_capita_watts;
  EXPECT_DOUBLE_EQ(percapita_power(2 * j, {r, 1}).per_capita_watts, 2 * base);
  EXPECT_DOUBLE_EQ(percapita_power(j, {2 * r, 1}).per_capita_watts, 2 * base);
}

}  // namespace
}  // namespace infercost
