/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "infercost/hardware_model.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <tuple>

#include "infercost/csv.h"

namespace infercost {

std::string_view to_string(EfficiencyDomain d) {
  switch (d) {
    case EfficiencyDomain::kCV:
      return "CV";
    case EfficiencyDomain::kNLP:
      return "NLP";
    case EfficiencyDomain::kGeneric:
      return "Generic";
  }
  return "?";
}

EfficiencyDomain efficiency_domain(Domain d) {
  return d == Domain::kCV ? EfficiencyDomain::kCV : EfficiencyDomain::kNLP;
}

double efficiency(double tflops, double tdp_watts) {
  if (!(tflops > 0) || !(tdp_watts > 0)) {
    throw Error(ErrorCode::kNonPositiveInput, "tflops and tdp must be positive");
  }
  return tflops * 1000.0 / tdp_watts;
}

double benchmark_speedup(const ThroughputBenchmark& bench, const ThroughputBenchmark& baseline) {
  if (bench.task_domain != baseline.task_domain || bench.model_name != baseline.model_name ||
      bench.framework != baseline.framework || bench.batch_size != baseline.batch_size) {
    throw Error(ErrorCode::kGroupMismatch, "'" + bench.model_name + "' (" + bench.framework +
                                               ", batch " + std::to_string(bench.batch_size) +
                                               ") vs '" + baseline.model_name + "'");
  }
  if (baseline.precision != BenchPrecision::kFP32) {
    throw Error(ErrorCode::kNonFp32Baseline,
                "baseline precision is " + std::string(to_string(baseline.precision)));
  }
  if (!(bench.throughput > 0) || !(baseline.throughput > 0)) {
    throw Error(ErrorCode::kNonPositiveInput, "throughput must be positive");
  }
  return bench.throughput / baseline.throughput;
}

namespace {

const ThroughputBenchmark* FindBaseline(std::span<const ThroughputBenchmark> benchmarks,
                                        const ThroughputBenchmark& row) {
  for (const auto& b : benchmarks) {
    if (b.precision == BenchPrecision::kFP32 && b.gpu_name == row.reference_gpu &&
        b.reference_gpu == row.reference_gpu && b.task_domain == row.task_domain &&
        b.model_name == row.model_name && b.framework == row.framework &&
        b.batch_size == row.batch_size) {
      return &b;
    }
  }
  return nullptr;
}

}  // namespace

SpeedupSummary aggregate_speedups(std::span<const ThroughputBenchmark> benchmarks,
                                  std::string_view gpu, BenchPrecision precision, Domain domain) {
  SpeedupSummary s;
  s.gpu_name = std::string(gpu);
  s.precision = precision;
  s.domain = domain;

  // Ratios are summed in a canonical row order so the mean does not depend
  // on the order of the input rows.
  std::vector<std::pair<std::tuple<std::string, std::string, int>, double>> ratios;
  for (const auto& row : benchmarks) {
    if (row.gpu_name != gpu || row.precision != precision || row.task_domain != domain) continue;
    const ThroughputBenchmark* base = FindBaseline(benchmarks, row);
    if (base == nullptr) {
      throw Error(ErrorCode::kGroupMismatch,
                  "no FP32 baseline on " + row.reference_gpu + " for " + row.model_name);
    }
    ratios.push_back({{row.model_name, row.framework, row.batch_size},
                      benchmark_speedup(row, *base)});
    s.reference_gpu = row.reference_gpu;
  }
  if (ratios.empty()) {
    throw Error(ErrorCode::kEmptyGroup, "no " + std::string(to_string(precision)) +
                                            " benchmarks for " + std::string(gpu) + " (" +
                                            std::string(to_string(domain)) + ")");
  }
  std::sort(ratios.begin(), ratios.end());
  double total = 0.0;
  for (const auto& r : ratios) total += r.second;
  s.sample_count = static_cast<int>(ratios.size());
  s.mean_speedup = total / s.sample_count;
  s.baseline = s.reference_gpu == gpu ? SpeedupBaseline::kOwnFp32
                                      : SpeedupBaseline::kReferenceGpuFp32;
  return s;
}

double adapted_tflops(double fp32_reference_tflops, const SpeedupSummary& summary) {
  if (!(fp32_reference_tflops > 0) || !(summary.mean_speedup > 0)) {
    throw Error(ErrorCode::kNonPositiveInput, "reference TFLOPS and speed-up must be positive");
  }
  return fp32_reference_tflops * summary.mean_speedup;
}

AdaptedTableOptions bundled_adapted_table_options() {
  return {{"Tesla P100", "A100", "A30"}};
}

namespace {

const GpuRecord* OwnRecord(const DatasetBundle& bundle, const std::string& name) {
  if (const GpuRecord* fp32 = bundle.find_gpu(name, GpuPrecision::kFP32)) return fp32;
  for (const auto& g : bundle.gpus) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

}  // namespace

std::vector<EfficiencyPoint> build_adapted_table(const DatasetBundle& bundle,
                                                 const AdaptedTableOptions& options) {
  std::vector<EfficiencyPoint> generic;
  const std::set<std::string> excluded(options.generic_exclusions.begin(),
                                       options.generic_exclusions.end());
  for (const auto& g : bundle.gpus) {
    if (g.precision != GpuPrecision::kFP32 || excluded.count(g.name)) continue;
    generic.push_back({g.name, EfficiencyDomain::kGeneric, efficiency(g.tflops, g.tdp_watts),
                       g.launch_date, g.precision, false, g.tflops, g.tdp_watts, g.deployment});
  }
  std::stable_sort(generic.begin(), generic.end(),
                   [](const EfficiencyPoint& a, const EfficiencyPoint& b) {
                     if (a.launch_date != b.launch_date) return a.launch_date < b.launch_date;
                     return a.gpu_name < b.gpu_name;
                   });

  // Distinct non-FP32 groups, visited in (domain, gpu, precision) order.
  std::set<std::tuple<Domain, std::string, BenchPrecision>> groups;
  for (const auto& b : bundle.benchmarks) {
    if (b.precision != BenchPrecision::kFP32) groups.emplace(b.task_domain, b.gpu_name, b.precision);
  }

  std::vector<EfficiencyPoint> adapted;
  for (const auto& [domain, gpu, precision] : groups) {
    const SpeedupSummary summary = aggregate_speedups(bundle.benchmarks, gpu, precision, domain);
    const GpuRecord* reference = bundle.find_gpu(summary.reference_gpu, GpuPrecision::kFP32);
    const GpuRecord* own = OwnRecord(bundle, gpu);
    if (reference == nullptr || own == nullptr) {
      throw Error(ErrorCode::kGroupMismatch, "missing FP32 GPU record for " +
                                                 summary.reference_gpu + " or " + gpu);
    }
    const double tflops = adapted_tflops(reference->tflops, summary);
    const GpuPrecision p =
        precision == BenchPrecision::kTF32 ? GpuPrecision::kTF32 : GpuPrecision::kMixedTensor;
    adapted.push_back({gpu, efficiency_domain(domain), efficiency(tflops, own->tdp_watts),
                       own->launch_date, p, true, tflops, own->tdp_watts, own->deployment});
  }
  std::stable_sort(adapted.begin(), adapted.end(),
                   [](const EfficiencyPoint& a, const EfficiencyPoint& b) {
                     if (a.domain != b.domain) return a.domain < b.domain;
                     if (a.launch_date != b.launch_date) return a.launch_date < b.launch_date;
                     if (a.gpu_name != b.gpu_name) return a.gpu_name < b.gpu_name;
                     return a.precision < b.precision;
                   });

  generic.insert(generic.end(), adapted.begin(), adapted.end());
  return generic;
}

std::vector<EfficiencyPoint> domain_points(std::span<const EfficiencyPoint> table, Domain d) {
  std::vector<EfficiencyPoint> out;
  const EfficiencyDomain want = efficiency_domain(d);
  for (const auto& p : table) {
    if (p.domain == EfficiencyDomain::kGeneric || p.domain == want) out.push_back(p);
  }
  return out;
}

double round2(double value) {
  // Nudge by a few ulps so values printed as x.xx5 round up like the published tables.
  const double scaled = value * 100.0;
  return std::round(scaled + std::copysign(1e-9, scaled)) / 100.0;
}

namespace {

std::string Fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", round2(v));
  return buf;
}

std::string_view AdaptedLabel(const EfficiencyPoint& p) {
  switch (p.domain) {
    case EfficiencyDomain::kGeneric:
      return "No";
    case EfficiencyDomain::kCV:
      return "For CNN";
    case EfficiencyDomain::kNLP:
      return "For NLP";
  }
  return "?";
}

std::string_view PrecisionLabel(const EfficiencyPoint& p) {
  if (p.adapted && p.precision == GpuPrecision::kMixedTensor) return "Mixed";
  return to_string(p.precision);
}

}  // namespace

std::string adapted_table_csv(std::span<const EfficiencyPoint> table) {
  std::string out = "adapted,gpu,precision,tflops,watts,launch_date,type,gflops_per_watt\n";
  for (const auto& p : table) {
    out += csv::format_row({std::string(AdaptedLabel(p)), p.gpu_name,
                            std::string(PrecisionLabel(p)), Fixed2(p.tflops),
                            csv::format_number(p.tdp_watts), format_date(p.launch_date),
                            std::string(to_string(p.deployment)), Fixed2(p.gflops_per_watt)});
    out += "\n";
  }
  return out;
}

std::vector<EfficiencyPoint> theoretical_table(const DatasetBundle& bundle) {
  std::vector<EfficiencyPoint> out;
  for (const auto& g : bundle.gpus) {
    out.push_back({g.name, EfficiencyDomain::kGeneric, efficiency(g.tflops, g.tdp_watts),
                   g.launch_date, g.precision, false, g.tflops, g.tdp_watts, g.deployment});
  }
  return out;
}

}  // namespace infercost
