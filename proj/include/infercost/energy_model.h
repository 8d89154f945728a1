/*
 * SPDX-License-Identifier: Apache-2.0
 */

// Joules per forward pass: model GFLOPs divided by the GPU efficiency
// (GFLOPS/W, i.e. GFLOPs per Joule) expected at the model's release date.

#ifndef INFERCOST_ENERGY_MODEL_H_
#define INFERCOST_ENERGY_MODEL_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infercost/hardware_model.h"
#include "infercost/registry.h"
#include "infercost/trend_engine.h"

namespace infercost {

enum class EfficiencySource { kTrendFit, kNearestGpu, kExplicit };

std::string_view to_string(EfficiencySource s);

struct EnergyEstimate {
  std::string model_name;
  double joules = 0.0;
  double efficiency_used = 0.0;
  Date efficiency_date{};
  EfficiencySource source = EfficiencySource::kTrendFit;
  // Trend evaluated outside the span of the points it was fitted on.
  bool extrapolated = false;
  double gflops = 0.0;
};

struct EfficiencyTrendOptions {
  // GPUs dropped before fitting, e.g. {"T4"} for the outlier-free variant.
  std::vector<std::string> exclude_gpus;
};

// Fit over Generic FP32 points plus the domain's adapted points.
TrendFit efficiency_trend(std::span<const EfficiencyPoint> points, Domain domain,
                          const EfficiencyTrendOptions& options = {});

double efficiency_at(const TrendFit& fit, const Date& date);

// gflops / (GFLOPS per Watt).
double energy_per_inference(double gflops_forward, double gflops_per_watt);

// One estimate per model, input order, from the fit of the model's domain.
std::vector<EnergyEstimate> annotate_energy(std::span<const ModelRecord> models,
                                            const TrendFit& cv_fit, const TrendFit& nlp_fit);

// Sensitivity variant: efficiency of the most recent domain point launched
// on or before the release date (the earliest point if none is).
EnergyEstimate nearest_gpu_energy(const ModelRecord& model,
                                  std::span<const EfficiencyPoint> points);

EnergyEstimate explicit_energy(const ModelRecord& model, double gflops_per_watt);

std::vector<TimePoint> joules_series(std::span<const EnergyEstimate> estimates,
                                     std::span<const ModelRecord> models);

}  // namespace infercost

#endif  // INFERCOST_ENERGY_MODEL_H_
