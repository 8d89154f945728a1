/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "infercost/energy_model.h"

#include <gtest/gtest.h>

#include <cmath>

#include "fixture.h"
#include "oracles.h"

namespace infercost {
namespace {

using testing_support::Bundle;

std::vector<EfficiencyPoint> Table() {
  return build_adapted_table(Bundle(), bundled_adapted_table_options());
}

TEST(Energy, PerInference) {
  EXPECT_NEAR(energy_per_inference(1.42, 6.48), 0.2191, 1e-4);
  EXPECT_DOUBLE_EQ(energy_per_inference(3.3, 3.3), 1.0);
  EXPECT_NEAR(energy_per_inference(1040, 130.88), 7.946, 1e-3);
  EXPECT_THROW(energy_per_inference(0, 1), Error);
  EXPECT_THROW(energy_per_inference(1, 0), Error);
}

TEST(Energy, Monotonicity) {
  EXPECT_LT(energy_per_inference(1, 10), energy_per_inference(2, 10));
  EXPECT_GT(energy_per_inference(1, 10), energy_per_inference(1, 20));
}

TEST(Energy, EfficiencyTrendMatchesOracle) {
  const auto table = Table();
  for (Domain d : {Domain::kCV, Domain::kNLP}) {
    std::vector<double> t, v;
    for (const auto& p : domain_points(table, d)) {
      t.push_back(fractional_year(p.launch_date));
      v.push_back(p.gflops_per_watt);
    }
    const TrendFit f = efficiency_trend(table, d);
    const oracle::Line o = oracle::NormalEquations(t, v);
    EXPECT_EQ(f.n_points, 32);
    EXPECT_NEAR(f.slope, o.slope, 1e-9);
    EXPECT_GT(f.slope, 0);
  }
}

TEST(Energy, TwoSyntheticPoints) {
  std::vector<EfficiencyPoint> pts(2);
  pts[0].launch_date = make_date(2012, 1, 1);
  pts[0].gflops_per_watt = 10;
  pts[1].launch_date = make_date(2016, 1, 1);
  pts[1].gflops_per_watt = 100;
  const TrendFit f = efficiency_trend(pts, Domain::kCV);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
  EXPECT_NEAR(efficiency_at(f, make_date(2016, 1, 1)), 100.0, 1e-9);
}

TEST(Energy, EfficiencyAtAlexNetAndT4) {
  const TrendFit cv = efficiency_trend(Table(), Domain::kCV);
  const double at_alexnet = efficiency_at(cv, make_date(2012, 6, 1));
  EXPECT_GT(at_alexnet, 10.0);
  EXPECT_LT(at_alexnet, 20.0);
  // The adapted T4 point sits far above the trend at its launch.
  EXPECT_LT(efficiency_at(cv, make_date(2018, 9, 13)), 312.15 / 3);
}

TEST(Energy, OutlierVariant) {
  const auto table = Table();
  const TrendFit with = efficiency_trend(table, Domain::kCV);
  const TrendFit without = efficiency_trend(table, Domain::kCV, {{"T4"}});
  EXPECT_EQ(without.n_points, with.n_points - 2);
  EXPECT_LT(without.slope, with.slope);
}

TEST(Energy, AnnotateRoundTrip) {
  const auto table = Table();
  const TrendFit cv = efficiency_trend(table, Domain::kCV);
  const TrendFit nlp = efficiency_trend(table, Domain::kNLP);
  const auto models = testing_support::Domain(Domain::kCV);
  const auto est = annotate_energy(models, cv, nlp);
  ASSERT_EQ(est.size(), 94u);
  for (std::size_t i = 0; i < est.size(); ++i) {
    EXPECT_GT(est[i].joules, 0);
    EXPECT_EQ(est[i].model_name, models[i].name);
    EXPECT_EQ(est[i].source, EfficiencySource::kTrendFit);
    EXPECT_NEAR(est[i].joules * est[i].efficiency_used / models[i].gflops, 1.0, 1e-9);
    EXPECT_NEAR(est[i].efficiency_used, predict(cv, models[i].release_date),
                1e-12 * est[i].efficiency_used);
  }
  EXPECT_TRUE(annotate_energy(std::vector<ModelRecord>{}, cv, nlp).empty());
}

TEST(Energy, AnnotateUsesDomainFit) {
  const auto table = Table();
  const TrendFit cv = efficiency_trend(table, Domain::kCV);
  const TrendFit nlp = efficiency_trend(table, Domain::kNLP);
  const auto models = testing_support::Domain(Domain::kNLP);
  const auto est = annotate_energy(models, cv, nlp);
  for (std::size_t i = 0; i < est.size(); ++i) {
    EXPECT_DOUBLE_EQ(est[i].efficiency_used, predict(nlp, models[i].release_date));
  }
}

TEST(Energy, ExtrapolationFlag) {
  const TrendFit cv = efficiency_trend(Table(), Domain::kCV);
  ModelRecord late;
  late.name = "late";
  late.gflops = 1;
  late.release_date = make_date(2021, 12, 1);
  ModelRecord mid = late;
  mid.release_date = make_date(2016, 1, 1);
  const auto est = annotate_energy(std::vector<ModelRecord>{late, mid}, cv, cv);
  EXPECT_TRUE(est[0].extrapolated);
  EXPECT_FALSE(est[1].extrapolated);
}

TEST(Energy, FrontierJoulesStillGrow) {
  const TrendFit cv = efficiency_trend(Table(), Domain::kCV);
  const auto best = best_per_year(testing_support::Domain(Domain::kCV));
  const auto est = annotate_energy(best, cv, cv);
  EXPECT_GT(log_linear_fit(joules_series(est, best)).slope, 0);
}

// Same subset feeding both fits: slope_J = slope_F - slope_E exactly,
// because log J = log F - log E pointwise and OLS is linear in y.
TEST(Energy, SlopeIdentity) {
  const TrendFit cv = efficiency_trend(Table(), Domain::kCV);
  for (Domain d : {Domain::kCV, Domain::kNLP}) {
    const auto models = testing_support::Domain(d);
    const auto est = annotate_energy(models, cv, cv);
    const TrendFit f = log_linear_fit(gflops_series(models));
    const TrendFit j = log_linear_fit(joules_series(est, models));
    EXPECT_NEAR(j.slope, f.slope - cv.slope, 1e-9);
  }
}

TEST(Energy, NearestGpuAndExplicit) {
  const auto table = Table();
  const ModelRecord& alexnet = *Bundle().find_model("AlexNet");
  const EnergyEstimate near = nearest_gpu_energy(alexnet, table);
  EXPECT_EQ(near.source, EfficiencySource::kNearestGpu);
  // Latest generic GPU on or before 2012-06-01 is the Tesla K10 (20.36).
  EXPECT_NEAR(near.efficiency_used, 4.58 * 1000 / 225, 1e-9);
  EXPECT_LE(near.efficiency_date, alexnet.release_date);
  const EnergyEstimate ex = explicit_energy(alexnet, 6.48);
  EXPECT_NEAR(ex.joules, 0.2191, 1e-4);
  EXPECT_EQ(ex.source, EfficiencySource::kExplicit);
}

}  // namespace
}  // namespace infercost
