/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "infercost/report.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "infercost/csv.h"

namespace infercost {

using json = nlohmann::ordered_json;

double round_sig6(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return std::strtod(buf, nullptr);
}

namespace {

json AxisJson(const Axis& a) {
  return json{{"label", a.label}, {"unit", a.unit}, {"log", a.log_scale}};
}

Axis AxisFrom(const json& j) {
  return {j.at("label").get<std::string>(), j.at("unit").get<std::string>(),
          j.at("log").get<bool>()};
}

}  // namespace

std::string to_jsonl(const FigureSeries& s) {
  std::string out;
  auto line = [&out](const json& j) {
    out += j.dump();
    out += '\n';
  };
  line(json{{"kind", "figure"},
            {"figure_id", s.figure_id},
            {"x", AxisJson(s.x_axis)},
            {"y", AxisJson(s.y_axis)}});
  for (const auto& p : s.points) {
    json j{{"kind", "point"}, {"x", round_sig6(p.x)}, {"y", round_sig6(p.y)}, {"label", p.label}};
    if (!p.group.empty()) j["group"] = p.group;
    line(j);
  }
  for (const auto& f : s.fits) {
    line(json{{"kind", "fit"},
              {"label", f.label},
              {"subset", to_string(f.subset)},
              {"slope", round_sig6(f.slope)},
              {"intercept", round_sig6(f.intercept)},
              {"r_squared", round_sig6(f.r_squared)},
              {"n", f.n_points}});
  }
  for (const auto& m : s.markers) {
    json j{{"kind", "marker"}, {"label", m.label}};
    if (m.x) j["x"] = round_sig6(*m.x);
    j["y"] = round_sig6(m.y);
    line(j);
  }
  return out;
}

FigureSeries from_jsonl(std::string_view text) {
  FigureSeries s;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    if (raw.empty()) continue;
    const json j = json::parse(raw);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "figure") {
      s.figure_id = j.at("figure_id").get<std::string>();
      s.x_axis = AxisFrom(j.at("x"));
      s.y_axis = AxisFrom(j.at("y"));
      have_header = true;
    } else if (kind == "point") {
      s.points.push_back({j.at("x").get<double>(), j.at("y").get<double>(),
                          j.at("label").get<std::string>(), j.value("group", std::string())});
    } else if (kind == "fit") {
      const auto subset = parse_subset(j.at("subset").get<std::string>());
      if (!subset) throw Error(ErrorCode::kInvalidArgument, "bad subset in fit line");
      s.fits.push_back({j.at("label").get<std::string>(), *subset, j.at("slope").get<double>(),
                        j.at("intercept").get<double>(), j.at("r_squared").get<double>(),
                        j.at("n").get<int>()});
    } else if (kind == "marker") {
      Marker m{j.at("label").get<std::string>(), std::nullopt, j.at("y").get<double>()};
      if (j.contains("x")) m.x = j.at("x").get<double>();
      s.markers.push_back(m);
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown line kind '" + kind + "'");
    }
  }
  if (!have_header) throw Error(ErrorCode::kInvalidArgument, "series has no figure line");
  return s;
}

FrontierMetric default_frontier_metric(Domain d) {
  return d == Domain::kCV ? FrontierMetric::kScore : FrontierMetric::kGflops;
}

namespace {

std::vector<FrontierPoint> ScoredPoints(const std::vector<ModelRecord>& models,
                                        const std::vector<EnergyEstimate>* energy) {
  std::vector<FrontierPoint> out;
  for (std::size_t i = 0; i < models.size(); ++i) {
    const ModelRecord& m = models[i];
    if (!m.score) continue;
    out.push_back({m.name, energy ? (*energy)[i].joules : m.gflops, *m.score, m.release_date});
  }
  return out;
}

std::vector<TimePoint> EnergySeries(const std::vector<ModelRecord>& models,
                                    const std::vector<EnergyEstimate>& energy) {
  return joules_series(energy, models);
}

void AddCorrelation(std::vector<CorrelationRow>& rows, std::string subset,
                    const std::vector<ModelRecord>& models) {
  std::vector<double> params, gflops;
  for (const auto& m : models) {
    if (!m.params_m) continue;
    params.push_back(*m.params_m);
    gflops.push_back(m.gflops);
  }
  try {
    rows.push_back({std::move(subset), static_cast<int>(params.size()),
                    pearson_correlation(params, gflops, CorrelationConvention::kRaw),
                    pearson_correlation(params, gflops, CorrelationConvention::kLogLog)});
  } catch (const Error&) {
    // Too few records or no spread: nothing to report for this subset.
  }
}

}  // namespace

DomainAnalysis analyze(const DatasetBundle& bundle, Domain domain, const ReportOptions& options) {
  DomainAnalysis a;
  a.domain = domain;
  a.options = options;
  a.frontier_metric = default_frontier_metric(domain);
  a.models = filter_models(bundle, ModelFilter{domain, std::nullopt, false, ExtraDataFilter::kAny});
  if (a.models.empty()) return a;

  a.frontier = best_per_year(a.models, a.frontier_metric);
  a.gflops_all_fit = log_linear_fit(gflops_series(a.models), "GFLOPs", Subset::kAll);
  a.gflops_frontier_fit = log_linear_fit(gflops_series(a.frontier), "GFLOPs", Subset::kFrontier);

  a.gpu_table = build_adapted_table(bundle, options.table);
  std::set<std::pair<std::string, BenchPrecision>> groups;
  for (const auto& b : bundle.benchmarks) {
    if (b.task_domain == domain && b.precision != BenchPrecision::kFP32) {
      groups.emplace(b.gpu_name, b.precision);
    }
  }
  for (const auto& [gpu, precision] : groups) {
    a.speedups.push_back(aggregate_speedups(bundle.benchmarks, gpu, precision, domain));
  }
  a.efficiency_fit = efficiency_trend(a.gpu_table, domain);
  if (!options.outlier_gpu.empty()) {
    a.efficiency_fit_without_outlier =
        efficiency_trend(a.gpu_table, domain, {{options.outlier_gpu}});
  }

  a.energy = annotate_energy(a.models, *a.efficiency_fit, *a.efficiency_fit);
  a.frontier_energy = annotate_energy(a.frontier, *a.efficiency_fit, *a.efficiency_fit);
  const std::vector<TimePoint> joules_all = EnergySeries(a.models, a.energy);
  a.joules_all_fit = log_linear_fit(joules_all, "Joules", Subset::kAll);
  a.joules_frontier_fit =
      log_linear_fit(EnergySeries(a.frontier, a.frontier_energy), "Joules", Subset::kFrontier);
  a.yearly_joules = yearly_averages(joules_all);

  const std::vector<FrontierPoint> by_gflops = ScoredPoints(a.models, nullptr);
  if (!by_gflops.empty()) {
    a.pareto_gflops = pareto_frontier(by_gflops);
    a.pareto_joules = pareto_frontier(ScoredPoints(a.models, &a.energy));
  }

  if (domain == Domain::kCV) {
    std::vector<ModelRecord> transformers, cnns;
    for (const auto& m : a.models) {
      if (m.architecture == Architecture::kTransformer) transformers.push_back(m);
      if (m.architecture == Architecture::kCNN) cnns.push_back(m);
    }
    AddCorrelation(a.correlations, "Transformer", transformers);
    AddCorrelation(a.correlations, "CNN", cnns);
  }
  AddCorrelation(a.correlations, "all", a.models);

  if (domain == Domain::kCV && !options.equivalence_model.empty()) {
    if (const ModelRecord* ref = bundle.find_model(options.equivalence_model)) {
      a.equivalence_reference = ref->gflops;
      a.equivalents = compute_equivalents(a.models, ref->gflops, options.equivalence_tolerance);
    }
  }

  a.somatic = somatic_baseline(options.kcal_per_day, options.constants);
  a.external = external_baseline(options.kwh_per_year, options.constants);
  a.as_of_year = a.models.back().release_year();
  for (const TrendFit* fit : {&*a.joules_frontier_fit, &*a.joules_all_fit}) {
    for (const Baseline& b : {a.somatic, a.external}) {
      try {
        a.crossings.push_back({fit->subset, b, crossing_date(*fit, b, a.as_of_year)});
      } catch (const Error&) {
        // Flat trend: no crossing.
      }
    }
  }
  return a;
}

namespace {

std::string Lower(Domain d) { return d == Domain::kCV ? "cv" : "nlp"; }

FitLine Line(const TrendFit& f) {
  return {f.metric_label + " " + std::string(to_string(f.subset)), f.subset, f.slope,
          f.intercept, f.r_squared, f.n_points};
}

const Axis kDateAxis{"release date", "year", false};
const Axis kGflopsAxis{"forward pass", "GFLOPs", true};
const Axis kJoulesAxis{"forward pass energy", "J", true};

FigureSeries Figure(std::string id, Axis x, Axis y) {
  FigureSeries f;
  f.figure_id = std::move(id);
  f.x_axis = std::move(x);
  f.y_axis = std::move(y);
  return f;
}

bool InFrontier(const DomainAnalysis& a, const ModelRecord& m) {
  return std::any_of(a.frontier.begin(), a.frontier.end(),
                     [&](const ModelRecord& f) { return f.name == m.name; });
}

bool InPareto(const std::vector<FrontierPoint>& pareto, const std::string& name) {
  return std::any_of(pareto.begin(), pareto.end(),
                     [&](const FrontierPoint& p) { return p.model_name == name; });
}

}  // namespace

std::vector<FigureSeries> build_figures(const DomainAnalysis& a) {
  std::vector<FigureSeries> figs;
  if (a.models.empty()) return figs;
  const std::string prefix = Lower(a.domain);
  const Axis score_axis = a.domain == Domain::kCV ? Axis{"top-1 accuracy", "%", false}
                                                  : Axis{"GLUE score", "points", false};
  const std::string score_name = a.domain == Domain::kCV ? "accuracy" : "glue";

  if (a.domain == Domain::kCV) {
    FigureSeries f = Figure(prefix + "_params_vs_gflops", Axis{"parameters", "M", true}, kGflopsAxis);
    for (const auto& m : a.models) {
      if (m.params_m) {
        f.points.push_back({*m.params_m, m.gflops, m.name, std::string(to_string(m.architecture))});
      }
    }
    if (!f.points.empty()) figs.push_back(std::move(f));

    FigureSeries g = Figure(prefix + "_accuracy_vs_date", kDateAxis, score_axis);
    for (const auto& m : a.models) {
      if (m.score) {
        g.points.push_back({m.release_year(), *m.score, m.name,
                            m.uses_extra_data() ? "extra_data" : "no_extra_data"});
      }
    }
    if (!g.points.empty()) figs.push_back(std::move(g));
  }

  {
    FigureSeries f = Figure(prefix + "_gflops_vs_date", kDateAxis, kGflopsAxis);
    for (const auto& m : a.models) {
      f.points.push_back({m.release_year(), m.gflops, m.name, InFrontier(a, m) ? "frontier" : ""});
    }
    f.fits = {Line(*a.gflops_frontier_fit), Line(*a.gflops_all_fit)};
    if (a.domain == Domain::kNLP) {
      // NLP score figure sits before the date figure in the published order.
      FigureSeries s = Figure(prefix + "_" + score_name + "_vs_gflops", kGflopsAxis, score_axis);
      for (const auto& m : a.models) {
        if (m.score) {
          s.points.push_back({m.gflops, *m.score, m.name,
                              InPareto(a.pareto_gflops, m.name) ? "pareto" : ""});
        }
      }
      if (!s.points.empty()) figs.push_back(std::move(s));
    }
    figs.push_back(std::move(f));
  }

  if (a.domain == Domain::kCV) {
    FigureSeries f = Figure(prefix + "_accuracy_vs_gflops", kGflopsAxis, score_axis);
    for (const auto& m : a.models) {
      if (m.score) {
        f.points.push_back({m.gflops, *m.score, m.name,
                            InPareto(a.pareto_gflops, m.name) ? "pareto" : ""});
      }
    }
    if (!f.points.empty()) figs.push_back(std::move(f));
  }

  {
    FigureSeries f = Figure(prefix + "_joules_vs_date", kDateAxis, kJoulesAxis);
    for (std::size_t i = 0; i < a.models.size(); ++i) {
      const ModelRecord& m = a.models[i];
      f.points.push_back({m.release_year(), a.energy[i].joules, m.name,
                          InFrontier(a, m) ? "frontier" : ""});
    }
    f.fits = {Line(*a.joules_frontier_fit), Line(*a.joules_all_fit)};
    for (const auto& y : a.yearly_joules) {
      f.markers.push_back({"yearly_arithmetic_mean", y.year + 0.5, y.arithmetic});
      f.markers.push_back({"yearly_geometric_mean", y.year + 0.5, y.geometric});
    }
    figs.push_back(std::move(f));
  }

  {
    FigureSeries f = Figure(prefix + "_" + score_name + "_vs_joules", kJoulesAxis, score_axis);
    for (std::size_t i = 0; i < a.models.size(); ++i) {
      const ModelRecord& m = a.models[i];
      if (m.score) {
        f.points.push_back({a.energy[i].joules, *m.score, m.name,
                            InPareto(a.pareto_joules, m.name) ? "pareto" : ""});
      }
    }
    if (!f.points.empty()) figs.push_back(std::move(f));
  }

  {
    FigureSeries f = Figure(prefix + "_joules_vs_baselines", kDateAxis, kJoulesAxis);
    for (std::size_t i = 0; i < a.frontier.size(); ++i) {
      f.points.push_back({a.frontier[i].release_year(), a.frontier_energy[i].joules,
                          a.frontier[i].name, "frontier"});
    }
    f.fits = {Line(*a.joules_frontier_fit), Line(*a.joules_all_fit)};
    f.markers.push_back({"somatic", std::nullopt, a.somatic.joules_per_second});
    f.markers.push_back({"external", std::nullopt, a.external.joules_per_second});
    for (const auto& c : a.crossings) {
      f.markers.push_back({"crossing " + std::string(to_string(c.subset)) + " " +
                               std::string(to_string(c.baseline.kind)),
                           c.crossing.year, c.baseline.joules_per_second});
    }
    figs.push_back(std::move(f));
  }
  return figs;
}

namespace {

std::string FitText(const TrendFit& f) {
  std::string s = fmt::format("slope {:.6f} log10/yr, intercept {:.6f}, r2 {:.4f}, n {}", f.slope,
                              f.intercept, f.r_squared, f.n_points);
  if (f.slope > 0) s += fmt::format(", doubling {:.3f} yr", doubling_time(f));
  return s;
}

std::string ShortDate(const Date& d) { return format_iso_date(d); }

}  // namespace

std::string render_summary(const DomainAnalysis& a) {
  std::string out;
  auto w = [&out](std::string_view s) {
    out += s;
    out += '\n';
  };
  w(fmt::format("domain: {}", to_string(a.domain)));
  w(fmt::format("records: {}", a.models.size()));
  if (a.models.empty()) {
    w("no records for this domain; nothing analysed");
    return out;
  }

  w("");
  w(fmt::format("frontier selector: {}",
                a.frontier_metric == FrontierMetric::kScore ? "best score per year"
                                                            : "most GFLOPs per year"));
  for (std::size_t i = 0; i < a.frontier.size(); ++i) {
    const ModelRecord& m = a.frontier[i];
    w(fmt::format("  {} {} gflops {} joules {:.4g}", calendar_year(m.release_date), m.name,
                  csv::format_number(m.gflops), a.frontier_energy[i].joules));
  }

  w("");
  w("fits (log10 value vs fractional year)");
  w("  gflops frontier: " + FitText(*a.gflops_frontier_fit));
  w("  gflops all:      " + FitText(*a.gflops_all_fit));
  w("  efficiency:      " + FitText(*a.efficiency_fit));
  if (a.efficiency_fit_without_outlier) {
    w(fmt::format("  efficiency w/o {}: {}", a.options.outlier_gpu,
                  FitText(*a.efficiency_fit_without_outlier)));
  }
  w("  joules frontier: " + FitText(*a.joules_frontier_fit));
  w("  joules all:      " + FitText(*a.joules_all_fit));

  w("");
  w("mean speed-up over FP32");
  for (const auto& s : a.speedups) {
    w(fmt::format("  {} {} x{:.4f} over {} rows (baseline {} FP32)", s.gpu_name,
                  to_string(s.precision), s.mean_speedup, s.sample_count, s.reference_gpu));
  }
  w("");
  w("gpu efficiency table");
  std::istringstream table(adapted_table_csv(a.gpu_table));
  for (std::string line; std::getline(table, line);) w("  " + line);

  w("");
  w("pareto frontier (score vs GFLOPs)");
  for (const auto& p : a.pareto_gflops) {
    w(fmt::format("  {} gflops {} score {}", p.model_name, csv::format_number(p.x),
                  csv::format_number(p.y)));
  }
  w("pareto frontier (score vs Joules)");
  for (const auto& p : a.pareto_joules) {
    w(fmt::format("  {} joules {:.4g} score {}", p.model_name, p.x, csv::format_number(p.y)));
  }

  if (a.equivalence_reference) {
    w("");
    w(fmt::format("models within {:.0f}% of {} ({} GFLOPs)", a.options.equivalence_tolerance * 100,
                  a.options.equivalence_model, csv::format_number(*a.equivalence_reference)));
    for (const auto& m : a.equivalents) {
      w(fmt::format("  {} {} gflops {} score {}", ShortDate(m.release_date), m.name,
                    csv::format_number(m.gflops),
                    m.score ? csv::format_number(*m.score) : std::string("-")));
    }
  }

  w("");
  w(fmt::format("params/GFLOPs pearson correlation (adopted convention: {})",
                to_string(a.options.correlation_convention)));
  for (const auto& c : a.correlations) {
    w(fmt::format("  {} n {} raw {:.4f} log-log {:.4f}", c.subset, c.n, c.raw, c.log_log));
  }

  w("");
  w("yearly mean joules (arithmetic is the default; geometric alongside)");
  for (const auto& y : a.yearly_joules) {
    w(fmt::format("  {} n {} arithmetic {:.4g} geometric {:.4g}", y.year, y.count, y.arithmetic,
                  y.geometric));
  }

  w("");
  w(fmt::format("baselines: somatic {:.2f} J/s, external {:.1f} J/s", a.somatic.joules_per_second,
                a.external.joules_per_second));
  for (const auto& c : a.crossings) {
    w(fmt::format("  joules {} reaches {} at {:.2f}{}{}", to_string(c.subset),
                  to_string(c.baseline.kind), c.crossing.year,
                  c.crossing.date ? " (" + ShortDate(*c.crossing.date) + ")" : std::string(),
                  c.crossing.in_past ? " [past]" : ""));
  }
  return out;
}

std::vector<std::filesystem::path> write_report(const DomainAnalysis& a,
                                                const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;
  auto put = [&written](const std::filesystem::path& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << body;
    if (!f) throw Error(ErrorCode::kIo, "cannot write " + path.string());
    written.push_back(path);
  };
  for (const auto& fig : build_figures(a)) put(dir / (fig.figure_id + ".jsonl"), to_jsonl(fig));
  put(dir / ("summary_" + Lower(a.domain) + ".txt"), render_summary(a));
  return written;
}

}  // namespace infercost
