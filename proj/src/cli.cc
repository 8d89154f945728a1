/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "infercost/cli.h"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <optional>
#include <string>
#include <vector>

#include "infercost/csv.h"
#include "infercost/energy_model.h"
#include "infercost/flops_estimator.h"
#include "infercost/forecaster.h"
#include "infercost/hardware_model.h"
#include "infercost/registry.h"
#include "infercost/report.h"
#include "infercost/trend_engine.h"

namespace infercost {
namespace {

struct GlobalOptions {
  std::string models;
  std::string gpus;
  std::string benchmarks;
  std::string domain;
  std::string out = "report";
  std::string subset = "frontier";
  bool all_generic = false;
};

// Validation failure, already reported.
struct ValidationFailed {};

DatasetBundle Load(const GlobalOptions& g, std::ostream& err) {
  BundlePaths paths = bundle_paths_in(default_data_dir());
  if (!g.models.empty()) paths.models = g.models;
  if (!g.gpus.empty()) paths.gpus = g.gpus;
  if (!g.benchmarks.empty()) paths.benchmarks = g.benchmarks;
  LoadResult r = load_bundle(paths);
  if (!r.ok()) {
    for (const auto& e : r.errors) err << e.to_string() << "\n";
    throw ValidationFailed{};
  }
  return std::move(*r.bundle);
}

std::vector<Domain> Domains(const GlobalOptions& g, bool both_by_default) {
  if (g.domain.empty()) {
    return both_by_default ? std::vector<Domain>{Domain::kCV, Domain::kNLP}
                           : std::vector<Domain>{Domain::kCV};
  }
  return {*parse_domain(g.domain)};
}

ReportOptions Options(const GlobalOptions& g) {
  ReportOptions o;
  if (g.all_generic) o.table.generic_exclusions.clear();
  return o;
}

Subset SubsetOf(const GlobalOptions& g) { return *parse_subset(g.subset); }

std::string Num(double v) { return csv::format_number(round_sig6(v)); }

void PrintFit(std::ostream& out, std::string_view name, const TrendFit& f) {
  out << fmt::format("{} {} {}: slope {} intercept {} r2 {} n {}", name, f.metric_label,
                     to_string(f.subset), Num(f.slope), Num(f.intercept), Num(f.r_squared),
                     f.n_points);
  if (f.slope > 0) out << " doubling_years " << Num(doubling_time(f));
  out << "\n";
}

int CmdValidate(const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const DatasetBundle b = Load(g, err);
  out << fmt::format("ok: {} models, {} gpus, {} benchmarks\n", b.models.size(), b.gpus.size(),
                     b.benchmarks.size());
  return kExitOk;
}

int CmdReport(const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const DatasetBundle b = Load(g, err);
  for (Domain d : Domains(g, true)) {
    const DomainAnalysis a = analyze(b, d, Options(g));
    for (const auto& p : write_report(a, g.out)) out << p.string() << "\n";
  }
  return kExitOk;
}

struct FlopsArgs {
  double base = 0.0;
  double d = 1.0, w = 1.0, r = 1.0;
  std::string res;
  std::string convention = "op";
};

int CmdEstimateFlops(const FlopsArgs& a, std::ostream& out) {
  const FlopsConvention conv =
      a.convention == "madd" ? FlopsConvention::kMaddPairAsOne : FlopsConvention::kOpAsOne;
  const double base = normalize_flops(a.base, conv);
  if (!a.res.empty()) {
    const auto colon = a.res.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "--res expects BASE:TARGET");
    }
    const double from = std::stod(a.res.substr(0, colon));
    const double to = std::stod(a.res.substr(colon + 1));
    const double est = resolution_scale_flops(base, from, to);
    out << fmt::format("base {} GFLOPs, resolution {} -> {} (ratio {}): {} GFLOPs\n", Num(base),
                       Num(from), Num(to), Num(to / from), Num(est));
    return kExitOk;
  }
  const double est = compound_scale_flops(base, {a.d, a.w, a.r});
  out << fmt::format("base {} GFLOPs, d {} w {} r {}: {} GFLOPs\n", Num(base), Num(a.d),
                     Num(a.w), Num(a.r), Num(est));
  return kExitOk;
}

int CmdGpuTable(const GlobalOptions& g, bool theoretical, std::ostream& out, std::ostream& err) {
  const DatasetBundle b = Load(g, err);
  if (theoretical) {
    out << "gpu,precision,tflops,watts,launch_date,type,gflops_per_watt\n";
    for (const auto& p : theoretical_table(b)) {
      out << csv::format_row({p.gpu_name, std::string(to_string(p.precision)),
                              csv::format_number(p.tflops), csv::format_number(p.tdp_watts),
                              format_date(p.launch_date), std::string(to_string(p.deployment)),
                              fmt::format("{:.2f}", round2(p.gflops_per_watt))})
          << "\n";
    }
    return kExitOk;
  }
  const DomainAnalysis cv = analyze(b, Domain::kCV, Options(g));
  const DomainAnalysis nlp = analyze(b, Domain::kNLP, Options(g));
  out << "domain,gpu,precision,mean_speedup,rows,baseline_gpu\n";
  for (const auto* a : {&cv, &nlp}) {
    for (const auto& s : a->speedups) {
      out << csv::format_row({std::string(to_string(s.domain)), s.gpu_name,
                              std::string(to_string(s.precision)),
                              fmt::format("{:.2f}", round2(s.mean_speedup)),
                              std::to_string(s.sample_count), s.reference_gpu})
          << "\n";
    }
  }
  out << "\n" << adapted_table_csv(build_adapted_table(b, Options(g).table));
  return kExitOk;
}

int CmdFit(const GlobalOptions& g, const std::string& metric, std::ostream& out,
           std::ostream& err) {
  const DatasetBundle b = Load(g, err);
  const Subset subset = SubsetOf(g);
  for (Domain d : Domains(g, false)) {
    const DomainAnalysis a = analyze(b, d, Options(g));
    if (a.models.empty()) throw Error(ErrorCode::kTooFewPoints, "no records for domain");
    const std::string name(to_string(d));
    if (metric == "efficiency") {
      PrintFit(out, name, *a.efficiency_fit);
    } else if (metric == "joules") {
      PrintFit(out, name, subset == Subset::kFrontier ? *a.joules_frontier_fit : *a.joules_all_fit);
    } else {
      PrintFit(out, name, subset == Subset::kFrontier ? *a.gflops_frontier_fit : *a.gflops_all_fit);
    }
  }
  return kExitOk;
}

int CmdPareto(const GlobalOptions& g, const std::string& cost, std::ostream& out,
              std::ostream& err) {
  const DatasetBundle b = Load(g, err);
  out << "domain,model,release_date," << cost << ",score\n";
  for (Domain d : Domains(g, false)) {
    const DomainAnalysis a = analyze(b, d, Options(g));
    for (const auto& p : cost == "joules" ? a.pareto_joules : a.pareto_gflops) {
      out << csv::format_row({std::string(to_string(d)), p.model_name, format_date(p.date),
                              Num(p.x), Num(p.y)})
          << "\n";
    }
  }
  return kExitOk;
}

int CmdEnergy(const GlobalOptions& g, bool nearest, std::ostream& out, std::ostream& err) {
  const DatasetBundle b = Load(g, err);
  const Subset subset = SubsetOf(g);
  out << "domain,model,release_date,gflops,gflops_per_watt,joules,source,extrapolated\n";
  for (Domain d : Domains(g, false)) {
    const DomainAnalysis a = analyze(b, d, Options(g));
    const auto& models = subset == Subset::kFrontier ? a.frontier : a.models;
    std::vector<EnergyEstimate> estimates;
    if (nearest) {
      for (const auto& m : models) estimates.push_back(nearest_gpu_energy(m, a.gpu_table));
    } else {
      estimates = subset == Subset::kFrontier ? a.frontier_energy : a.energy;
    }
    for (std::size_t i = 0; i < models.size(); ++i) {
      const EnergyEstimate& e = estimates[i];
      out << csv::format_row({std::string(to_string(d)), e.model_name,
                              format_date(models[i].release_date), Num(e.gflops),
                              Num(e.efficiency_used), Num(e.joules),
                              std::string(to_string(e.source)), e.extrapolated ? "yes" : "no"})
          << "\n";
    }
  }
  return kExitOk;
}

struct ForecastArgs {
  double kcal = kDefaultKcalPerDay;
  double kwh = kDefaultKwhPerYear;
  double rate = 1.0;
  double population = 1.0;
};

int CmdForecast(const GlobalOptions& g, const ForecastArgs& f, std::ostream& out,
                std::ostream& err) {
  const DatasetBundle b = Load(g, err);
  ReportOptions o = Options(g);
  o.kcal_per_day = f.kcal;
  o.kwh_per_year = f.kwh;
  for (Domain d : Domains(g, false)) {
    const DomainAnalysis a = analyze(b, d, o);
    if (a.models.empty()) throw Error(ErrorCode::kTooFewPoints, "no records for domain");
    out << fmt::format("{} baselines: somatic {} J/s, external {} J/s\n", to_string(d),
                       Num(a.somatic.joules_per_second), Num(a.external.joules_per_second));
    for (const auto& c : a.crossings) {
      out << fmt::format("{} joules {} reaches {} at {}{}{}\n", to_string(d),
                         to_string(c.subset), to_string(c.baseline.kind), Num(c.crossing.year),
                         c.crossing.date ? " (" + format_iso_date(*c.crossing.date) + ")" : "",
                         c.crossing.in_past ? " past" : "");
    }
    const ModelRecord& latest = a.frontier.back();
    const double joules = a.frontier_energy.back().joules;
    const PerCapitaPower p = percapita_power(joules, {f.rate, f.population});
    out << fmt::format(
        "{} {} at {}/s per capita: {} W per capita ({}% of somatic), {} W for {} people\n",
        to_string(d), latest.name, Num(f.rate), Num(p.per_capita_watts),
        Num(100.0 * p.per_capita_watts / a.somatic.joules_per_second), Num(p.aggregate_watts),
        Num(f.population));
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inference compute and energy trends of published neural networks", "infercost"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--models", g.models, "Models CSV");
  app.add_option("--gpus", g.gpus, "GPUs CSV");
  app.add_option("--benchmarks", g.benchmarks, "Throughput benchmarks CSV");
  app.add_option("--domain", g.domain, "cv or nlp")->check(CLI::IsMember({"cv", "nlp"}));
  app.add_option("--out", g.out, "Report output directory");
  app.add_option("--subset", g.subset, "frontier or all")
      ->check(CLI::IsMember({"frontier", "all"}));
  app.add_flag("--all-generic", g.all_generic,
               "Keep every FP32 GPU in the generic efficiency set");

  auto* validate = app.add_subcommand("validate", "Load and validate the datasets");
  auto* report = app.add_subcommand("report", "Write figure series and summaries");

  FlopsArgs fa;
  auto* estimate = app.add_subcommand("estimate-flops", "Scale a base model's GFLOPs");
  estimate->add_option("--base", fa.base, "Base GFLOPs")->required();
  auto* d_opt = estimate->add_option("--d", fa.d, "Depth ratio");
  auto* w_opt = estimate->add_option("--w", fa.w, "Width ratio");
  auto* r_opt = estimate->add_option("--r", fa.r, "Resolution ratio");
  estimate->add_option("--res", fa.res, "Resolutions BASE:TARGET")
      ->excludes(d_opt)
      ->excludes(w_opt)
      ->excludes(r_opt);
  estimate->add_option("--convention", fa.convention, "How --base counts a multiply-add")
      ->check(CLI::IsMember({"op", "madd"}));

  bool theoretical = false;
  auto* gpu_table = app.add_subcommand("gpu-table", "Speed-ups and GPU efficiency tables");
  gpu_table->add_flag("--theoretical", theoretical, "Print the spec-sheet table instead");

  std::string metric = "gflops";
  auto* fit = app.add_subcommand("fit", "Log-linear trend fit");
  fit->add_option("--metric", metric, "gflops, joules or efficiency")
      ->check(CLI::IsMember({"gflops", "joules", "efficiency"}));

  std::string cost = "gflops";
  auto* pareto = app.add_subcommand("pareto", "Pareto frontier of score against cost");
  pareto->add_option("--cost", cost, "gflops or joules")
      ->check(CLI::IsMember({"gflops", "joules"}));

  bool nearest = false;
  auto* energy = app.add_subcommand("energy", "Joules per forward pass");
  energy->add_flag("--nearest-gpu", nearest, "Use the latest GPU released before each model");

  ForecastArgs fc;
  auto* forecast = app.add_subcommand("forecast", "Baselines, crossings and per-capita power");
  forecast->add_option("--kcal", fc.kcal, "kcal per person per day");
  forecast->add_option("--kwh", fc.kwh, "kWh per person per year");
  forecast->add_option("--rate", fc.rate, "Inferences per person per second");
  forecast->add_option("--population", fc.population, "People");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*validate) return CmdValidate(g, out, err);
    if (*report) return CmdReport(g, out, err);
    if (*estimate) return CmdEstimateFlops(fa, out);
    if (*gpu_table) return CmdGpuTable(g, theoretical, out, err);
    if (*fit) return CmdFit(g, metric, out, err);
    if (*pareto) return CmdPareto(g, cost, out, err);
    if (*energy) return CmdEnergy(g, nearest, out, err);
    if (*forecast) return CmdForecast(g, fc, out, err);
  } catch (const ValidationFailed&) {
    return kExitValidation;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::kIo ? kExitValidation : kExitAnalysis;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitAnalysis;
  }
  return kExitOk;
}

}  // namespace infercost
