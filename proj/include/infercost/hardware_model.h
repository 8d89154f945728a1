/*
 * SPDX-License-Identifier: Apache-2.0
 */

// GPU efficiency (GFLOPS per Watt at TDP) and the mixed-precision "adapted"
// throughput derived from measured inference speed-ups over FP32.

#ifndef INFERCOST_HARDWARE_MODEL_H_
#define INFERCOST_HARDWARE_MODEL_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infercost/registry.h"

namespace infercost {

enum class EfficiencyDomain { kCV, kNLP, kGeneric };

std::string_view to_string(EfficiencyDomain d);
EfficiencyDomain efficiency_domain(Domain d);

struct EfficiencyPoint {
  std::string gpu_name;
  EfficiencyDomain domain = EfficiencyDomain::kGeneric;
  double gflops_per_watt = 0.0;
  Date launch_date{};
  GpuPrecision precision = GpuPrecision::kFP32;
  bool adapted = false;
  // Inputs kept for the delimited table.
  double tflops = 0.0;
  double tdp_watts = 0.0;
  Deployment deployment = Deployment::kDesktop;
};

enum class SpeedupBaseline {
  // FP32 run on the same GPU.
  kOwnFp32,
  // FP32 run on a different reference GPU (A100 rows use V100 FP32).
  kReferenceGpuFp32,
};

struct SpeedupSummary {
  std::string gpu_name;
  BenchPrecision precision = BenchPrecision::kMixed;
  Domain domain = Domain::kCV;
  double mean_speedup = 0.0;
  int sample_count = 0;
  SpeedupBaseline baseline = SpeedupBaseline::kOwnFp32;
  std::string reference_gpu;
};

// tflops * 1000 / tdp.
double efficiency(double tflops, double tdp_watts);

// bench.throughput / baseline.throughput; both rows from the same
// (domain, model, framework, batch) group, baseline at FP32.
double benchmark_speedup(const ThroughputBenchmark& bench, const ThroughputBenchmark& baseline);

// Arithmetic mean of per-row speed-ups over every row of `gpu` at
// `precision` in `domain`, each against its group's FP32 baseline.
SpeedupSummary aggregate_speedups(std::span<const ThroughputBenchmark> benchmarks,
                                  std::string_view gpu, BenchPrecision precision, Domain domain);

// fp32_reference_tflops * mean_speedup.
double adapted_tflops(double fp32_reference_tflops, const SpeedupSummary& summary);

struct AdaptedTableOptions {
  // FP32 records left out of the Generic set.
  std::vector<std::string> generic_exclusions;
};

// Exclusions that reproduce the published adapted table from the bundled
// GPU file: P100, A100 and A30 have FP32 rows but no Generic entry there.
AdaptedTableOptions bundled_adapted_table_options();

// Generic points (one per FP32 GpuRecord, ordered by launch date then name)
// followed by adapted points per benchmarked (gpu, precision, domain) group,
// CV before NLP.
std::vector<EfficiencyPoint> build_adapted_table(const DatasetBundle& bundle,
                                                 const AdaptedTableOptions& options = {});

// Points usable for one domain's efficiency trend: Generic + that domain's
// adapted points.
std::vector<EfficiencyPoint> domain_points(std::span<const EfficiencyPoint> table, Domain d);

// Delimited rendering of the adapted table:
// adapted,gpu,precision,tflops,watts,launch_date,type,gflops_per_watt
std::string adapted_table_csv(std::span<const EfficiencyPoint> table);

// Every GpuRecord with its efficiency, in file order.
std::vector<EfficiencyPoint> theoretical_table(const DatasetBundle& bundle);

// Two decimals, half away from zero.
double round2(double value);

}  // namespace infercost

#endif  // INFERCOST_HARDWARE_MODEL_H_
