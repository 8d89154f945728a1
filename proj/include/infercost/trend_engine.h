/*
 * SPDX-License-Identifier: Apache-2.0
 */

// Exponential trend fits (OLS of log10 value against fractional year),
// per-year frontiers, Pareto frontiers and correlations.

#ifndef INFERCOST_TREND_ENGINE_H_
#define INFERCOST_TREND_ENGINE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infercost/registry.h"

namespace infercost {

enum class Subset { kFrontier, kAll };

std::string_view to_string(Subset s);
std::optional<Subset> parse_subset(std::string_view text);

struct TimePoint {
  // Fractional year, see fractional_year().
  double year = 0.0;
  double value = 0.0;
};

struct TrendFit {
  // log10 units per year.
  double slope = 0.0;
  // log10(value) at year 0.
  double intercept = 0.0;
  double r_squared = 0.0;
  int n_points = 0;
  std::string metric_label;
  Subset subset = Subset::kAll;
  double first_year = 0.0;
  double last_year = 0.0;
};

TrendFit log_linear_fit(std::span<const TimePoint> points, std::string metric_label = {},
                        Subset subset = Subset::kAll);

double predict(const TrendFit& fit, double year);
double predict(const TrendFit& fit, const Date& date);

// log10(2) / slope.
double doubling_time(const TrendFit& fit);

// Which record represents a calendar year.
enum class FrontierMetric {
  // Highest score; ties go to lower GFLOPs, then name.  Unscored records
  // are ignored.
  kScore,
  // Largest GFLOPs, ties by name.  Used for NLP where most records lack a
  // common score.
  kGflops,
};

// One record per calendar year, ordered by year.
std::vector<ModelRecord> best_per_year(std::span<const ModelRecord> models,
                                       FrontierMetric metric = FrontierMetric::kScore);

std::vector<TimePoint> gflops_series(std::span<const ModelRecord> models);

struct FrontierPoint {
  std::string model_name;
  // Cost: GFLOPs or Joules.
  double x = 0.0;
  // Performance.
  double y = 0.0;
  Date date{};

  bool operator==(const FrontierPoint&) const = default;
};

// p dominates q iff p.x <= q.x and p.y >= q.y with one inequality strict.
bool dominates(const FrontierPoint& p, const FrontierPoint& q);

// Non-dominated points sorted by x, then y descending, then name.
// Exact duplicates are all kept.
std::vector<FrontierPoint> pareto_frontier(std::span<const FrontierPoint> points);

enum class CorrelationConvention { kRaw, kLogLog };

std::string_view to_string(CorrelationConvention c);

double pearson_correlation(std::span<const double> xs, std::span<const double> ys);
double pearson_correlation(std::span<const double> xs, std::span<const double> ys,
                           CorrelationConvention convention);

// Records with reference*(1-tol) <= gflops <= reference*(1+tol), by date.
std::vector<ModelRecord> compute_equivalents(std::span<const ModelRecord> models,
                                             double reference_gflops, double tolerance);

struct YearlyAverage {
  int year = 0;
  double arithmetic = 0.0;
  double geometric = 0.0;
  int count = 0;
};

// Per-calendar-year means of values (all must be positive for the
// geometric mean to be defined; non-positive values throw).
std::vector<YearlyAverage> yearly_averages(std::span<const TimePoint> points);

}  // namespace infercost

#endif  // INFERCOST_TREND_ENGINE_H_
