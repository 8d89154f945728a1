/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "infercost/energy_model.h"

#include <algorithm>
#include <cmath>

#include "infercost/kernels.h"

namespace infercost {

std::string_view to_string(EfficiencySource s) {
  switch (s) {
    case EfficiencySource::kTrendFit:
      return "trend_fit";
    case EfficiencySource::kNearestGpu:
      return "nearest_gpu";
    case EfficiencySource::kExplicit:
      return "explicit";
  }
  return "?";
}

TrendFit efficiency_trend(std::span<const EfficiencyPoint> points, Domain domain,
                          const EfficiencyTrendOptions& options) {
  const EfficiencyDomain want = efficiency_domain(domain);
  std::vector<TimePoint> series;
  for (const auto& p : points) {
    if (p.domain != EfficiencyDomain::kGeneric && p.domain != want) continue;
    if (std::find(options.exclude_gpus.begin(), options.exclude_gpus.end(), p.gpu_name) !=
        options.exclude_gpus.end()) {
      continue;
    }
    series.push_back({fractional_year(p.launch_date), p.gflops_per_watt});
  }
  return log_linear_fit(series, "GFLOPS/W", Subset::kAll);
}

double efficiency_at(const TrendFit& fit, const Date& date) { return predict(fit, date); }

double energy_per_inference(double gflops_forward, double gflops_per_watt) {
  if (!(gflops_forward > 0) || !(gflops_per_watt > 0)) {
    throw Error(ErrorCode::kNonPositiveInput, "GFLOPs and efficiency must be positive");
  }
  return gflops_forward / gflops_per_watt;
}

std::vector<EnergyEstimate> annotate_energy(std::span<const ModelRecord> models,
                                            const TrendFit& cv_fit, const TrendFit& nlp_fit) {
  const std::size_t n = models.size();
  std::vector<double> gflops(n), eff(n), joules(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ModelRecord& m = models[i];
    if (!(m.gflops > 0)) {
      throw Error(ErrorCode::kNonPositiveInput, "'" + m.name + "' has non-positive GFLOPs");
    }
    gflops[i] = m.gflops;
    eff[i] = efficiency_at(m.domain == Domain::kCV ? cv_fit : nlp_fit, m.release_date);
  }
  kernels::divide(gflops, eff, joules);

  std::vector<EnergyEstimate> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ModelRecord& m = models[i];
    const TrendFit& fit = m.domain == Domain::kCV ? cv_fit : nlp_fit;
    const double year = m.release_year();
    out.push_back({m.name, joules[i], eff[i], m.release_date, EfficiencySource::kTrendFit,
                   year < fit.first_year || year > fit.last_year, m.gflops});
  }
  return out;
}

EnergyEstimate nearest_gpu_energy(const ModelRecord& model,
                                  std::span<const EfficiencyPoint> points) {
  const EfficiencyDomain want = efficiency_domain(model.domain);
  const EfficiencyPoint* chosen = nullptr;
  const EfficiencyPoint* earliest = nullptr;
  auto better = [](const EfficiencyPoint* a, const EfficiencyPoint& b, bool latest) {
    if (a == nullptr) return true;
    if (a->launch_date != b.launch_date) {
      return latest ? b.launch_date > a->launch_date : b.launch_date < a->launch_date;
    }
    return b.gflops_per_watt > a->gflops_per_watt;
  };
  for (const auto& p : points) {
    if (p.domain != EfficiencyDomain::kGeneric && p.domain != want) continue;
    if (p.launch_date <= model.release_date && better(chosen, p, true)) chosen = &p;
    if (better(earliest, p, false)) earliest = &p;
  }
  if (chosen == nullptr) chosen = earliest;
  if (chosen == nullptr) throw Error(ErrorCode::kEmptyGroup, "no efficiency points");
  return {model.name, energy_per_inference(model.gflops, chosen->gflops_per_watt),
          chosen->gflops_per_watt, chosen->launch_date, EfficiencySource::kNearestGpu,
          chosen->launch_date > model.release_date, model.gflops};
}

EnergyEstimate explicit_energy(const ModelRecord& model, double gflops_per_watt) {
  return {model.name, energy_per_inference(model.gflops, gflops_per_watt), gflops_per_watt,
          model.release_date, EfficiencySource::kExplicit, false, model.gflops};
}

std::vector<TimePoint> joules_series(std::span<const EnergyEstimate> estimates,
                                     std::span<const ModelRecord> models) {
  if (estimates.size() != models.size()) {
    throw Error(ErrorCode::kLengthMismatch, "estimates and models differ in length");
  }
  std::vector<TimePoint> out;
  out.reserve(models.size());
  for (std::size_t i = 0; i < models.size(); ++i) {
    out.push_back({models[i].release_year(), estimates[i].joules});
  }
  return out;
}

}  // namespace infercost
