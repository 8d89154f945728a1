/*
 * SPDX-License-Identifier: Apache-2.0
 */

// End-to-end analysis of one domain and its serialisation: figure series as
// JSON lines (one object per line) and a plain-text summary.

#ifndef INFERCOST_REPORT_H_
#define INFERCOST_REPORT_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infercost/energy_model.h"
#include "infercost/forecaster.h"
#include "infercost/hardware_model.h"
#include "infercost/registry.h"
#include "infercost/trend_engine.h"

namespace infercost {

struct Axis {
  std::string label;
  std::string unit;
  bool log_scale = false;

  bool operator==(const Axis&) const = default;
};

struct SeriesPoint {
  double x = 0.0;
  double y = 0.0;
  std::string label;
  // Optional grouping for plotting, e.g. "frontier" or "pareto".
  std::string group;

  bool operator==(const SeriesPoint&) const = default;
};

// Horizontal lines and single annotated positions (baselines, crossings,
// yearly means).
struct Marker {
  std::string label;
  std::optional<double> x;
  double y = 0.0;

  bool operator==(const Marker&) const = default;
};

struct FitLine {
  std::string label;
  Subset subset = Subset::kAll;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int n_points = 0;

  bool operator==(const FitLine&) const = default;
};

struct FigureSeries {
  std::string figure_id;
  Axis x_axis;
  Axis y_axis;
  std::vector<SeriesPoint> points;
  std::vector<FitLine> fits;
  std::vector<Marker> markers;

  bool operator==(const FigureSeries&) const = default;
};

// Six significant digits; every float written by the report goes through it.
double round_sig6(double v);

std::string to_jsonl(const FigureSeries& series);
FigureSeries from_jsonl(std::string_view text);

struct ReportOptions {
  AdaptedTableOptions table = bundled_adapted_table_options();
  // GPU dropped from the alternative efficiency fit.
  std::string outlier_gpu = "T4";
  double kcal_per_day = kDefaultKcalPerDay;
  double kwh_per_year = kDefaultKwhPerYear;
  EnergyConstants constants;
  // Equivalence table around this model's GFLOPs (CV only).
  std::string equivalence_model = "AlexNet";
  double equivalence_tolerance = 1.2;
  CorrelationConvention correlation_convention = CorrelationConvention::kRaw;
};

FrontierMetric default_frontier_metric(Domain d);

struct CorrelationRow {
  std::string subset;
  int n = 0;
  double raw = 0.0;
  double log_log = 0.0;
};

struct CrossingRow {
  Subset subset = Subset::kAll;
  Baseline baseline;
  Crossing crossing;
};

struct DomainAnalysis {
  Domain domain = Domain::kCV;
  ReportOptions options;
  FrontierMetric frontier_metric = FrontierMetric::kScore;

  // Domain records ordered by date, then name.
  std::vector<ModelRecord> models;
  std::vector<ModelRecord> frontier;
  std::optional<TrendFit> gflops_frontier_fit;
  std::optional<TrendFit> gflops_all_fit;

  std::vector<EfficiencyPoint> gpu_table;
  std::vector<SpeedupSummary> speedups;
  std::optional<TrendFit> efficiency_fit;
  std::optional<TrendFit> efficiency_fit_without_outlier;

  // Aligned with `models` and `frontier`.
  std::vector<EnergyEstimate> energy;
  std::vector<EnergyEstimate> frontier_energy;
  std::optional<TrendFit> joules_frontier_fit;
  std::optional<TrendFit> joules_all_fit;
  std::vector<YearlyAverage> yearly_joules;

  std::vector<FrontierPoint> pareto_gflops;
  std::vector<FrontierPoint> pareto_joules;
  std::vector<CorrelationRow> correlations;
  std::optional<double> equivalence_reference;
  std::vector<ModelRecord> equivalents;

  Baseline somatic;
  Baseline external;
  // Latest release date among the domain's records; decides past/future.
  double as_of_year = 0.0;
  std::vector<CrossingRow> crossings;
};

// Runs every analysis for `domain`.  An empty model set yields an analysis
// with only `domain` and `models` filled in.
DomainAnalysis analyze(const DatasetBundle& bundle, Domain domain,
                       const ReportOptions& options = {});

std::vector<FigureSeries> build_figures(const DomainAnalysis& analysis);
std::string render_summary(const DomainAnalysis& analysis);

// Writes <figure_id>.jsonl per figure and summary_<domain>.txt into `dir`
// (created if needed).  Returns the written paths in write order.
std::vector<std::filesystem::path> write_report(const DomainAnalysis& analysis,
                                                const std::filesystem::path& dir);

}  // namespace infercost

#endif  // INFERCOST_REPORT_H_
