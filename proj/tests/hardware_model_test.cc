/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "infercost/hardware_model.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixture.h"

namespace infercost {
namespace {

using testing_support::Bundle;

TEST(Hardware, EfficiencyOfSpecSheetRows) {
  EXPECT_NEAR(efficiency(1.58, 244), 6.48, 0.005);
  EXPECT_NEAR(efficiency(15.7, 300), 52.33, 0.005);
  EXPECT_NEAR(efficiency(8.10, 70), 115.71, 0.005);
  EXPECT_DOUBLE_EQ(efficiency(1.0, 1000.0), 1.0);
  EXPECT_THROW(efficiency(0.0, 100), Error);
  EXPECT_THROW(efficiency(1.0, -1), Error);
}

TEST(Hardware, SingleSpeedup) {
  ThroughputBenchmark fp32{Domain::kCV, "ResNet-50", "TF", 128, "Tesla V100",
                           BenchPrecision::kFP32, 100, "Tesla V100"};
  ThroughputBenchmark mixed = fp32;
  mixed.precision = BenchPrecision::kMixed;
  mixed.throughput = 250;
  EXPECT_DOUBLE_EQ(benchmark_speedup(mixed, fp32), 2.5);

  ThroughputBenchmark other = fp32;
  other.batch_size = 64;
  try {
    benchmark_speedup(mixed, other);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGroupMismatch);
  }
  try {
    benchmark_speedup(fp32, mixed);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonFp32Baseline);
  }
}

struct Expected {
  const char* gpu;
  BenchPrecision precision;
  Domain domain;
  double printed;  // two decimals
  double raw;      // mean of unrounded ratios
};

const Expected kSpeedups[] = {
    {"Tesla V100", BenchPrecision::kMixed, Domain::kCV, 2.27, 2.274490},
    {"Tesla V100", BenchPrecision::kMixed, Domain::kNLP, 2.64, 2.639481},
    {"A100", BenchPrecision::kTF32, Domain::kCV, 1.75, 1.745670},
    {"A100", BenchPrecision::kTF32, Domain::kNLP, 3.56, 3.557580},
    {"A100", BenchPrecision::kMixed, Domain::kCV, 3.33, 3.334430},
    {"A100", BenchPrecision::kMixed, Domain::kNLP, 4.67, 4.668330},
    {"T4", BenchPrecision::kMixed, Domain::kCV, 2.70, 2.697600},
    {"T4", BenchPrecision::kMixed, Domain::kNLP, 3.16, 3.158260},
};

TEST(Hardware, AggregatedSpeedupsMatchTable) {
  for (const auto& e : kSpeedups) {
    const SpeedupSummary s = aggregate_speedups(Bundle().benchmarks, e.gpu, e.precision, e.domain);
    SCOPED_TRACE(std::string(e.gpu) + " " + std::string(to_string(e.precision)));
    EXPECT_NEAR(s.mean_speedup, e.printed, 0.01);
    EXPECT_NEAR(s.mean_speedup, e.raw, 1e-5);
    EXPECT_GT(s.sample_count, 0);
  }
}

TEST(Hardware, A100UsesV100Baseline) {
  const SpeedupSummary s =
      aggregate_speedups(Bundle().benchmarks, "A100", BenchPrecision::kMixed, Domain::kCV);
  EXPECT_EQ(s.baseline, SpeedupBaseline::kReferenceGpuFp32);
  EXPECT_EQ(s.reference_gpu, "Tesla V100");
  const SpeedupSummary t =
      aggregate_speedups(Bundle().benchmarks, "T4", BenchPrecision::kMixed, Domain::kCV);
  EXPECT_EQ(t.baseline, SpeedupBaseline::kOwnFp32);
}

TEST(Hardware, EmptyGroup) {
  try {
    aggregate_speedups(Bundle().benchmarks, "GeForce GTX 580", BenchPrecision::kMixed,
                       Domain::kCV);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyGroup);
  }
}

TEST(Hardware, AggregationIgnoresRowOrder) {
  std::vector<ThroughputBenchmark> rows = Bundle().benchmarks;
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(rows.begin(), rows.end(), rng);
    for (const auto& e : kSpeedups) {
      const double a = aggregate_speedups(rows, e.gpu, e.precision, e.domain).mean_speedup;
      const double b =
          aggregate_speedups(Bundle().benchmarks, e.gpu, e.precision, e.domain).mean_speedup;
      EXPECT_EQ(a, b);
    }
  }
}

TEST(Hardware, AdaptedTflops) {
  SpeedupSummary s;
  s.mean_speedup = 2.0;
  EXPECT_DOUBLE_EQ(adapted_tflops(15.7, s), 31.4);
  s.mean_speedup = 0.0;
  EXPECT_THROW(adapted_tflops(15.7, s), Error);
}

const EfficiencyPoint* Find(const std::vector<EfficiencyPoint>& t, std::string_view gpu,
                            EfficiencyDomain d, GpuPrecision p) {
  for (const auto& e : t) {
    if (e.gpu_name == gpu && e.domain == d && e.precision == p) return &e;
  }
  return nullptr;
}

TEST(Hardware, AdaptedTableEntries) {
  const auto table = build_adapted_table(Bundle(), bundled_adapted_table_options());
  struct Row {
    const char* gpu;
    EfficiencyDomain d;
    GpuPrecision p;
    double tflops, gflops_w;
  };
  const Row rows[] = {
      {"Tesla V100", EfficiencyDomain::kCV, GpuPrecision::kMixedTensor, 35.71, 119.03},
      {"T4", EfficiencyDomain::kCV, GpuPrecision::kMixedTensor, 21.85, 312.15},
      {"A100", EfficiencyDomain::kCV, GpuPrecision::kTF32, 27.41, 68.52},
      {"A100", EfficiencyDomain::kCV, GpuPrecision::kMixedTensor, 52.35, 130.88},
      {"Tesla V100", EfficiencyDomain::kNLP, GpuPrecision::kMixedTensor, 41.44, 138.13},
      {"T4", EfficiencyDomain::kNLP, GpuPrecision::kMixedTensor, 25.58, 365.46},
      {"A100", EfficiencyDomain::kNLP, GpuPrecision::kTF32, 55.85, 139.64},
      {"A100", EfficiencyDomain::kNLP, GpuPrecision::kMixedTensor, 73.29, 183.23},
  };
  for (const Row& r : rows) {
    const EfficiencyPoint* p = Find(table, r.gpu, r.d, r.p);
    ASSERT_NE(p, nullptr) << r.gpu;
    EXPECT_TRUE(p->adapted);
    EXPECT_DOUBLE_EQ(round2(p->tflops), r.tflops) << r.gpu;
    EXPECT_DOUBLE_EQ(round2(p->gflops_per_watt), r.gflops_w) << r.gpu;
  }
  const EfficiencyPoint* gtx580 =
      Find(table, "GeForce GTX 580", EfficiencyDomain::kGeneric, GpuPrecision::kFP32);
  ASSERT_NE(gtx580, nullptr);
  EXPECT_DOUBLE_EQ(round2(gtx580->gflops_per_watt), 6.48);
}

TEST(Hardware, GenericSetSize) {
  auto count_generic = [](const std::vector<EfficiencyPoint>& t) {
    return std::count_if(t.begin(), t.end(), [](const EfficiencyPoint& p) {
      return p.domain == EfficiencyDomain::kGeneric;
    });
  };
  const auto all = build_adapted_table(Bundle());
  EXPECT_EQ(count_generic(all), 31);
  EXPECT_EQ(all.size(), 31u + 8u);
  const auto fixture = build_adapted_table(Bundle(), bundled_adapted_table_options());
  EXPECT_EQ(count_generic(fixture), 28);
  for (std::size_t i = 1; i < 28; ++i) {
    EXPECT_LE(fixture[i - 1].launch_date, fixture[i].launch_date);
  }
}

TEST(Hardware, DomainPointsSplit) {
  const auto table = build_adapted_table(Bundle(), bundled_adapted_table_options());
  EXPECT_EQ(domain_points(table, Domain::kCV).size(), 32u);
  EXPECT_EQ(domain_points(table, Domain::kNLP).size(), 32u);
}

TEST(Hardware, TableCsvHasOneLinePerPoint) {
  const auto table = build_adapted_table(Bundle(), bundled_adapted_table_options());
  const std::string csv = adapted_table_csv(table);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), static_cast<long>(table.size() + 1));
  EXPECT_NE(csv.find("For NLP,T4,Mixed,25.58,70,13/09/2018,Server,365.46"), std::string::npos);
}

TEST(Hardware, Round2) {
  EXPECT_DOUBLE_EQ(round2(52.333), 52.33);
  EXPECT_DOUBLE_EQ(round2(1.005), 1.01);
  EXPECT_DOUBLE_EQ(round2(-1.005), -1.01);
}

}  // namespace
}  // namespace infercost
