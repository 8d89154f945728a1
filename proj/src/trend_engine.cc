/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "infercost/trend_engine.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "infercost/kernels.h"

namespace infercost {

std::string_view to_string(Subset s) { return s == Subset::kFrontier ? "frontier" : "all"; }

std::optional<Subset> parse_subset(std::string_view text) {
  if (text == "frontier") return Subset::kFrontier;
  if (text == "all") return Subset::kAll;
  return std::nullopt;
}

TrendFit log_linear_fit(std::span<const TimePoint> points, std::string metric_label,
                        Subset subset) {
  if (points.size() < 2) {
    throw Error(ErrorCode::kTooFewPoints,
                "need at least 2 points, got " + std::to_string(points.size()));
  }
  std::vector<double> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const auto& p : points) {
    if (!(p.value > 0) || !std::isfinite(p.value)) {
      throw Error(ErrorCode::kNonPositiveValue, "value at " + std::to_string(p.year) +
                                                    " is not positive");
    }
    xs.push_back(p.year);
    ys.push_back(std::log10(p.value));
  }
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  if (*lo == *hi) throw Error(ErrorCode::kDegenerateDates, "all points share one date");

  // Two passes: means first, then moments about them.  Years near 2000
  // make the one-pass formula lose most of its digits.
  const double mx = kernels::mean(xs);
  const double my = kernels::mean(ys);
  const kernels::CrossMoments m = kernels::centered_moments(xs, ys, mx, my);

  TrendFit fit;
  fit.slope = m.sxy / m.sxx;
  fit.intercept = my - fit.slope * mx;
  if (m.syy == 0.0) {
    fit.r_squared = 1.0;
  } else {
    fit.r_squared = std::clamp(m.sxy * m.sxy / (m.sxx * m.syy), 0.0, 1.0);
  }
  fit.n_points = static_cast<int>(points.size());
  fit.metric_label = std::move(metric_label);
  fit.subset = subset;
  fit.first_year = *lo;
  fit.last_year = *hi;
  return fit;
}

double predict(const TrendFit& fit, double year) {
  return std::pow(10.0, fit.intercept + fit.slope * year);
}

double predict(const TrendFit& fit, const Date& date) {
  return predict(fit, fractional_year(date));
}

double doubling_time(const TrendFit& fit) {
  if (!(fit.slope > 0)) throw Error(ErrorCode::kNonPositiveSlope, "slope must be positive");
  return std::log10(2.0) / fit.slope;
}

namespace {

// True if a should represent its year instead of b.
bool Better(const ModelRecord& a, const ModelRecord& b, FrontierMetric metric) {
  if (metric == FrontierMetric::kScore) {
    if (*a.score != *b.score) return *a.score > *b.score;
    if (a.gflops != b.gflops) return a.gflops < b.gflops;
    return a.name < b.name;
  }
  if (a.gflops != b.gflops) return a.gflops > b.gflops;
  return a.name < b.name;
}

}  // namespace

std::vector<ModelRecord> best_per_year(std::span<const ModelRecord> models,
                                       FrontierMetric metric) {
  std::map<int, const ModelRecord*> best;
  for (const auto& m : models) {
    if (metric == FrontierMetric::kScore && !m.score) continue;
    auto [it, inserted] = best.try_emplace(calendar_year(m.release_date), &m);
    if (!inserted && Better(m, *it->second, metric)) it->second = &m;
  }
  std::vector<ModelRecord> out;
  out.reserve(best.size());
  for (const auto& [year, m] : best) out.push_back(*m);
  return out;
}

std::vector<TimePoint> gflops_series(std::span<const ModelRecord> models) {
  std::vector<TimePoint> out;
  out.reserve(models.size());
  for (const auto& m : models) out.push_back({m.release_year(), m.gflops});
  return out;
}

bool dominates(const FrontierPoint& p, const FrontierPoint& q) {
  return p.x <= q.x && p.y >= q.y && (p.x < q.x || p.y > q.y);
}

std::vector<FrontierPoint> pareto_frontier(std::span<const FrontierPoint> points) {
  std::vector<FrontierPoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), [](const FrontierPoint& a, const FrontierPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y > b.y;
    return a.model_name < b.model_name;
  });

  std::vector<FrontierPoint> out;
  double best_before = -INFINITY;  // max y over strictly smaller x
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j].x == sorted[i].x) ++j;
    // Within an equal-x run only the top y survives, and only if nothing
    // cheaper is at least as good.
    const double top = sorted[i].y;
    if (top > best_before) {
      for (std::size_t k = i; k < j && sorted[k].y == top; ++k) out.push_back(sorted[k]);
    }
    best_before = std::max(best_before, top);
    i = j;
  }
  return out;
}

std::string_view to_string(CorrelationConvention c) {
  return c == CorrelationConvention::kRaw ? "raw" : "log-log";
}

double pearson_correlation(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::kLengthMismatch, std::to_string(xs.size()) + " vs " +
                                                std::to_string(ys.size()) + " values");
  }
  if (xs.size() < 2) throw Error(ErrorCode::kTooFewPoints, "need at least 2 pairs");
  const kernels::CrossMoments m =
      kernels::centered_moments(xs, ys, kernels::mean(xs), kernels::mean(ys));
  if (m.sxx == 0.0 || m.syy == 0.0) {
    throw Error(ErrorCode::kZeroVariance, "a variable is constant");
  }
  return std::clamp(m.sxy / std::sqrt(m.sxx * m.syy), -1.0, 1.0);
}

double pearson_correlation(std::span<const double> xs, std::span<const double> ys,
                           CorrelationConvention convention) {
  if (convention == CorrelationConvention::kRaw) return pearson_correlation(xs, ys);
  auto logs = [](std::span<const double> v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (double d : v) {
      if (!(d > 0)) throw Error(ErrorCode::kNonPositiveValue, "log-log needs positive values");
      out.push_back(std::log10(d));
    }
    return out;
  };
  const std::vector<double> lx = logs(xs);
  const std::vector<double> ly = logs(ys);
  return pearson_correlation(lx, ly);
}

std::vector<ModelRecord> compute_equivalents(std::span<const ModelRecord> models,
                                             double reference_gflops, double tolerance) {
  if (!(tolerance >= 0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be >= 0");
  if (!(reference_gflops > 0)) {
    throw Error(ErrorCode::kNonPositiveInput, "reference GFLOPs must be positive");
  }
  const double lo = reference_gflops * (1.0 - tolerance);
  const double hi = reference_gflops * (1.0 + tolerance);
  std::vector<ModelRecord> out;
  for (const auto& m : models) {
    if (m.gflops >= lo && m.gflops <= hi) out.push_back(m);
  }
  std::stable_sort(out.begin(), out.end(), [](const ModelRecord& a, const ModelRecord& b) {
    if (a.release_date != b.release_date) return a.release_date < b.release_date;
    return a.name < b.name;
  });
  return out;
}

std::vector<YearlyAverage> yearly_averages(std::span<const TimePoint> points) {
  struct Acc {
    double sum = 0.0;
    double log_sum = 0.0;
    int count = 0;
  };
  std::map<int, Acc> by_year;
  for (const auto& p : points) {
    if (!(p.value > 0)) throw Error(ErrorCode::kNonPositiveValue, "yearly average of non-positive");
    Acc& a = by_year[calendar_year(date_from_fractional_year(p.year))];
    a.sum += p.value;
    a.log_sum += std::log(p.value);
    ++a.count;
  }
  std::vector<YearlyAverage> out;
  for (const auto& [year, a] : by_year) {
    out.push_back({year, a.sum / a.count, std::exp(a.log_sum / a.count), a.count});
  }
  return out;
}

}  // namespace infercost
