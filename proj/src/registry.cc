/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "infercost/registry.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "infercost/csv.h"

#ifndef INFERCOST_DEFAULT_DATA_DIR
#define INFERCOST_DEFAULT_DATA_DIR "data"
#endif

namespace infercost {

std::string_view to_string(Architecture v) {
  switch (v) {
    case Architecture::kCNN:
      return "CNN";
    case Architecture::kTransformer:
      return "Transformer";
    case Architecture::kHybrid:
      return "Hybrid";
    case Architecture::kRNN:
      return "RNN";
  }
  return "?";
}

std::string_view to_string(FlopsProvenance v) {
  switch (v) {
    case FlopsProvenance::kReported:
      return "reported";
    case FlopsProvenance::kToolMeasured:
      return "tool_measured";
    case FlopsProvenance::kEstimated:
      return "estimated";
  }
  return "?";
}

std::string_view to_string(GpuPrecision v) {
  switch (v) {
    case GpuPrecision::kFP32:
      return "FP32";
    case GpuPrecision::kFP16:
      return "FP16";
    case GpuPrecision::kTF32:
      return "TF32";
    case GpuPrecision::kMixedTensor:
      return "MixedTensor";
  }
  return "?";
}

std::string_view to_string(BenchPrecision v) {
  switch (v) {
    case BenchPrecision::kFP32:
      return "FP32";
    case BenchPrecision::kTF32:
      return "TF32";
    case BenchPrecision::kMixed:
      return "Mixed";
  }
  return "?";
}

std::string_view to_string(Deployment v) {
  switch (v) {
    case Deployment::kDesktop:
      return "Desktop";
    case Deployment::kServer:
      return "Server";
  }
  return "?";
}

std::optional<Architecture> parse_architecture(std::string_view t) {
  if (t == "CNN") return Architecture::kCNN;
  if (t == "Transformer") return Architecture::kTransformer;
  if (t == "Hybrid") return Architecture::kHybrid;
  if (t == "RNN") return Architecture::kRNN;
  return std::nullopt;
}

std::optional<FlopsProvenance> parse_provenance(std::string_view t) {
  if (t == "reported") return FlopsProvenance::kReported;
  if (t == "tool_measured") return FlopsProvenance::kToolMeasured;
  if (t == "estimated") return FlopsProvenance::kEstimated;
  return std::nullopt;
}

std::optional<GpuPrecision> parse_gpu_precision(std::string_view t) {
  if (t == "FP32") return GpuPrecision::kFP32;
  if (t == "FP16") return GpuPrecision::kFP16;
  if (t == "TF32") return GpuPrecision::kTF32;
  if (t == "MixedTensor") return GpuPrecision::kMixedTensor;
  return std::nullopt;
}

std::optional<BenchPrecision> parse_bench_precision(std::string_view t) {
  if (t == "FP32") return BenchPrecision::kFP32;
  if (t == "TF32") return BenchPrecision::kTF32;
  if (t == "Mixed") return BenchPrecision::kMixed;
  return std::nullopt;
}

std::optional<Deployment> parse_deployment(std::string_view t) {
  if (t == "Desktop") return Deployment::kDesktop;
  if (t == "Server") return Deployment::kServer;
  return std::nullopt;
}

std::string_view to_string(LoadErrorKind kind) {
  switch (kind) {
    case LoadErrorKind::kIo:
      return "IoError";
    case LoadErrorKind::kMissingColumn:
      return "MissingColumn";
    case LoadErrorKind::kUnparseableValue:
      return "UnparseableValue";
    case LoadErrorKind::kInvariantViolation:
      return "InvariantViolation";
    case LoadErrorKind::kDanglingReference:
      return "DanglingReference";
  }
  return "?";
}

std::string LoadError::to_string() const {
  std::ostringstream os;
  os << infercost::to_string(kind) << " " << file;
  if (row > 0) os << ":" << row;
  if (!column.empty()) os << " [" << column << "]";
  os << ": " << message;
  return os.str();
}

const GpuRecord* DatasetBundle::find_gpu(std::string_view name, GpuPrecision precision) const {
  for (const auto& g : gpus) {
    if (g.name == name && g.precision == precision) return &g;
  }
  return nullptr;
}

const ModelRecord* DatasetBundle::find_model(std::string_view name) const {
  for (const auto& m : models) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

namespace {

constexpr std::string_view kModelsFile = "models.csv";
constexpr std::string_view kGpusFile = "gpus.csv";
constexpr std::string_view kBenchmarksFile = "benchmarks.csv";

const std::vector<std::string> kModelColumns = {
    "name",  "domain",       "score",        "params_m",     "gflops",
    "input_tokens", "extra_data", "release_date", "architecture", "flops_provenance"};
const std::vector<std::string> kGpuColumns = {"name",     "precision",   "tflops",
                                              "tdp_w",    "launch_date", "deployment"};
const std::vector<std::string> kBenchmarkColumns = {"task_domain", "model",  "framework",
                                                    "batch",       "gpu",    "precision",
                                                    "throughput",  "reference_gpu"};

std::optional<double> ParseDouble(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::optional<int> ParseInt(std::string_view text) {
  if (text.empty()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

// Reads one file's rows with columns resolved by header name.
class RowReader {
 public:
  RowReader(std::string_view file, std::vector<LoadError>& errors)
      : file_(file), errors_(errors) {}

  bool Bind(const csv::Table& table, const std::vector<std::string>& required) {
    bool ok = true;
    for (const auto& col : required) {
      auto it = std::find(table.header.begin(), table.header.end(), col);
      if (it == table.header.end()) {
        errors_.push_back({LoadErrorKind::kMissingColumn, std::string(file_), 0, col,
                           "required column '" + col + "' not found in header"});
        ok = false;
      } else {
        index_[col] = static_cast<std::size_t>(it - table.header.begin());
      }
    }
    width_ = table.header.size();
    return ok;
  }

  bool Start(const csv::Row& row, std::size_t line) {
    row_ = &row;
    line_ = line;
    row_ok_ = true;
    if (row.size() != width_) {
      Fail(LoadErrorKind::kUnparseableValue, "",
           "row has " + std::to_string(row.size()) + " fields, header has " +
               std::to_string(width_));
      return false;
    }
    return true;
  }

  const std::string& Raw(const std::string& col) const { return (*row_)[index_.at(col)]; }

  std::string Text(const std::string& col) {
    const std::string& v = Raw(col);
    if (v.empty()) Fail(LoadErrorKind::kUnparseableValue, col, "value is required");
    return v;
  }

  double Number(const std::string& col) {
    auto v = ParseDouble(Raw(col));
    if (!v) {
      Fail(LoadErrorKind::kUnparseableValue, col, "expected a number, got '" + Raw(col) + "'");
      return 0.0;
    }
    return *v;
  }

  std::optional<double> OptionalNumber(const std::string& col) {
    if (Raw(col).empty()) return std::nullopt;
    auto v = ParseDouble(Raw(col));
    if (!v) Fail(LoadErrorKind::kUnparseableValue, col, "expected a number, got '" + Raw(col) + "'");
    return v;
  }

  std::optional<int> OptionalInt(const std::string& col) {
    if (Raw(col).empty()) return std::nullopt;
    auto v = ParseInt(Raw(col));
    if (!v) Fail(LoadErrorKind::kUnparseableValue, col, "expected an integer, got '" + Raw(col) + "'");
    return v;
  }

  int Int(const std::string& col) {
    auto v = ParseInt(Raw(col));
    if (!v) {
      Fail(LoadErrorKind::kUnparseableValue, col, "expected an integer, got '" + Raw(col) + "'");
      return 0;
    }
    return *v;
  }

  Date DateValue(const std::string& col) {
    auto v = parse_date(Raw(col));
    if (!v) {
      Fail(LoadErrorKind::kUnparseableValue, col,
           "expected DD/MM/YYYY date, got '" + Raw(col) + "'");
      return Date{};
    }
    return *v;
  }

  template <typename Enum, typename Parser>
  Enum EnumValue(const std::string& col, Parser parser, Enum fallback) {
    auto v = parser(Raw(col));
    if (!v) {
      Fail(LoadErrorKind::kUnparseableValue, col, "unknown value '" + Raw(col) + "'");
      return fallback;
    }
    return *v;
  }

  void Violation(const std::string& record, const std::string& rule) {
    Fail(LoadErrorKind::kInvariantViolation, "", "record '" + record + "' violates: " + rule);
  }

  bool row_ok() const { return row_ok_; }
  std::size_t line() const { return line_; }

 private:
  void Fail(LoadErrorKind kind, const std::string& col, const std::string& msg) {
    errors_.push_back({kind, std::string(file_), line_, col, msg});
    row_ok_ = false;
  }

  std::string_view file_;
  std::vector<LoadError>& errors_;
  std::map<std::string, std::size_t> index_;
  std::size_t width_ = 0;
  const csv::Row* row_ = nullptr;
  std::size_t line_ = 0;
  bool row_ok_ = true;
};

bool InWindow(const Date& d, const Date& lo, const Date& hi) { return d >= lo && d <= hi; }

void ParseModels(std::string_view text, const LoadOptions& options, DatasetBundle& bundle,
                 std::vector<LoadError>& errors) {
  const csv::Table table = csv::parse(text);
  RowReader r(kModelsFile, errors);
  if (table.header.empty()) {
    errors.push_back({LoadErrorKind::kMissingColumn, std::string(kModelsFile), 0, "",
                      "missing header row"});
    return;
  }
  if (!r.Bind(table, kModelColumns)) return;

  const Date lo = make_date(2012, 1, 1);
  const Date hi = make_date(2022, 1, 1);
  std::set<std::pair<Domain, std::string>> seen;

  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (!r.Start(table.rows[i], table.line_numbers[i])) continue;
    ModelRecord m;
    m.name = r.Text("name");
    m.domain = r.EnumValue("domain", parse_domain, Domain::kCV);
    m.score = r.OptionalNumber("score");
    m.params_m = r.OptionalNumber("params_m");
    m.gflops = r.Number("gflops");
    m.input_tokens = r.OptionalInt("input_tokens");
    m.extra_data = r.Raw("extra_data").empty() ? std::string(kNoExtraData) : r.Raw("extra_data");
    m.release_date = r.DateValue("release_date");
    m.architecture = r.EnumValue("architecture", parse_architecture, Architecture::kCNN);
    m.flops_provenance =
        r.EnumValue("flops_provenance", parse_provenance, FlopsProvenance::kReported);
    if (!r.row_ok()) continue;

    if (!(m.gflops > 0)) r.Violation(m.name, "gflops > 0");
    if (m.params_m && !(*m.params_m > 0)) r.Violation(m.name, "params_m > 0 when present");
    if (m.score && !(*m.score > 0 && *m.score <= 100)) {
      r.Violation(m.name, "0 < score <= 100 when present");
    }
    if (m.domain == Domain::kNLP && !(m.input_tokens && *m.input_tokens >= 1)) {
      r.Violation(m.name, "NLP records carry input_tokens >= 1");
    }
    if (m.domain == Domain::kCV && m.input_tokens) {
      r.Violation(m.name, "CV records carry no input_tokens");
    }
    if (options.enforce_date_windows && !InWindow(m.release_date, lo, hi)) {
      r.Violation(m.name, "release_date within [2012-01-01, 2022-01-01]");
    }
    if (!seen.emplace(m.domain, m.name).second) {
      r.Violation(m.name, "model names are unique within a domain");
    }
    if (r.row_ok()) bundle.models.push_back(std::move(m));
  }
}

void ParseGpus(std::string_view text, const LoadOptions& options, DatasetBundle& bundle,
               std::vector<LoadError>& errors) {
  const csv::Table table = csv::parse(text);
  RowReader r(kGpusFile, errors);
  if (table.header.empty()) {
    errors.push_back({LoadErrorKind::kMissingColumn, std::string(kGpusFile), 0, "",
                      "missing header row"});
    return;
  }
  if (!r.Bind(table, kGpuColumns)) return;

  const Date lo = make_date(2010, 1, 1);
  const Date hi = make_date(2022, 1, 1);
  std::set<std::pair<std::string, GpuPrecision>> seen;

  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (!r.Start(table.rows[i], table.line_numbers[i])) continue;
    GpuRecord g;
    g.name = r.Text("name");
    g.precision = r.EnumValue("precision", parse_gpu_precision, GpuPrecision::kFP32);
    g.tflops = r.Number("tflops");
    g.tdp_watts = r.Number("tdp_w");
    g.launch_date = r.DateValue("launch_date");
    g.deployment = r.EnumValue("deployment", parse_deployment, Deployment::kDesktop);
    if (!r.row_ok()) continue;

    const std::string label = g.name + " " + std::string(to_string(g.precision));
    if (!(g.tflops > 0)) r.Violation(label, "tflops > 0");
    if (!(g.tdp_watts > 0)) r.Violation(label, "tdp_w > 0");
    if (options.enforce_date_windows && !InWindow(g.launch_date, lo, hi)) {
      r.Violation(label, "launch_date within [2010-01-01, 2022-01-01]");
    }
    if (!seen.emplace(g.name, g.precision).second) {
      r.Violation(label, "no duplicate (name, precision) pairs");
    }
    if (r.row_ok()) bundle.gpus.push_back(std::move(g));
  }
}

void ParseBenchmarks(std::string_view text, DatasetBundle& bundle,
                     std::vector<LoadError>& errors) {
  const csv::Table table = csv::parse(text);
  RowReader r(kBenchmarksFile, errors);
  if (table.header.empty()) {
    errors.push_back({LoadErrorKind::kMissingColumn, std::string(kBenchmarksFile), 0, "",
                      "missing header row"});
    return;
  }
  if (!r.Bind(table, kBenchmarkColumns)) return;

  std::set<std::string> gpu_names;
  for (const auto& g : bundle.gpus) gpu_names.insert(g.name);

  using GroupKey = std::tuple<Domain, std::string, std::string, int, std::string>;
  std::map<GroupKey, int> baselines;
  std::map<GroupKey, std::size_t> first_line;

  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (!r.Start(table.rows[i], table.line_numbers[i])) continue;
    ThroughputBenchmark b;
    b.task_domain = r.EnumValue("task_domain", parse_domain, Domain::kCV);
    b.model_name = r.Text("model");
    b.framework = r.Raw("framework");
    b.batch_size = r.Int("batch");
    b.gpu_name = r.Text("gpu");
    b.precision = r.EnumValue("precision", parse_bench_precision, BenchPrecision::kFP32);
    b.throughput = r.Number("throughput");
    b.reference_gpu = r.Text("reference_gpu");
    if (!r.row_ok()) continue;

    const std::string label = b.model_name + " on " + b.gpu_name;
    if (!(b.throughput > 0)) r.Violation(label, "throughput > 0");
    if (b.batch_size < 1) r.Violation(label, "batch >= 1");
    for (const std::string* ref : {&b.gpu_name, &b.reference_gpu}) {
      if (!gpu_names.count(*ref)) {
        errors.push_back({LoadErrorKind::kDanglingReference, std::string(kBenchmarksFile),
                          r.line(), ref == &b.gpu_name ? "gpu" : "reference_gpu",
                          "benchmark references GPU '" + *ref + "' absent from gpus file"});
      }
    }
    if (!r.row_ok()) continue;

    GroupKey key{b.task_domain, b.model_name, b.framework, b.batch_size, b.reference_gpu};
    first_line.emplace(key, r.line());
    int& count = baselines[key];
    if (b.precision == BenchPrecision::kFP32 && b.gpu_name == b.reference_gpu) ++count;
    bundle.benchmarks.push_back(std::move(b));
  }

  for (const auto& [key, count] : baselines) {
    if (count != 1) {
      const auto& [domain, model, framework, batch, ref] = key;
      errors.push_back({LoadErrorKind::kInvariantViolation, std::string(kBenchmarksFile),
                        first_line[key], "",
                        "group (" + model + ", " + framework + ", batch " +
                            std::to_string(batch) + ", reference " + ref + ") has " +
                            std::to_string(count) + " FP32 baseline rows, expected exactly 1"});
    }
  }
}

std::optional<std::string> ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

std::string OptionalNumber(const std::optional<double>& v) {
  return v ? csv::format_number(*v) : std::string();
}

}  // namespace

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("INFERCOST_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return INFERCOST_DEFAULT_DATA_DIR;
}

BundlePaths bundle_paths_in(const std::filesystem::path& dir) {
  return {dir / kModelsFile, dir / kGpusFile, dir / kBenchmarksFile};
}

LoadResult parse_bundle(std::string_view models_csv, std::string_view gpus_csv,
                        std::string_view benchmarks_csv, const LoadOptions& options) {
  LoadResult result;
  DatasetBundle bundle;
  ParseModels(models_csv, options, bundle, result.errors);
  ParseGpus(gpus_csv, options, bundle, result.errors);
  ParseBenchmarks(benchmarks_csv, bundle, result.errors);
  if (result.errors.empty()) result.bundle = std::move(bundle);
  return result;
}

LoadResult load_bundle(const std::filesystem::path& models_path,
                       const std::filesystem::path& gpus_path,
                       const std::filesystem::path& benchmarks_path, const LoadOptions& options) {
  LoadResult result;
  std::optional<std::string> contents[3];
  const std::filesystem::path* paths[3] = {&models_path, &gpus_path, &benchmarks_path};
  for (int i = 0; i < 3; ++i) {
    contents[i] = ReadFile(*paths[i]);
    if (!contents[i]) {
      result.errors.push_back(
          {LoadErrorKind::kIo, paths[i]->string(), 0, "", "cannot read file"});
    }
  }
  if (!result.errors.empty()) return result;
  return parse_bundle(*contents[0], *contents[1], *contents[2], options);
}

LoadResult load_bundle(const BundlePaths& paths, const LoadOptions& options) {
  return load_bundle(paths.models, paths.gpus, paths.benchmarks, options);
}

std::string models_to_csv(const std::vector<ModelRecord>& models) {
  std::string out = csv::format_row(kModelColumns) + "\n";
  for (const auto& m : models) {
    out += csv::format_row({m.name, std::string(to_string(m.domain)), OptionalNumber(m.score),
                            OptionalNumber(m.params_m), csv::format_number(m.gflops),
                            m.input_tokens ? std::to_string(*m.input_tokens) : std::string(),
                            m.extra_data, format_date(m.release_date),
                            std::string(to_string(m.architecture)),
                            std::string(to_string(m.flops_provenance))});
    out += "\n";
  }
  return out;
}

std::string gpus_to_csv(const std::vector<GpuRecord>& gpus) {
  std::string out = csv::format_row(kGpuColumns) + "\n";
  for (const auto& g : gpus) {
    out += csv::format_row({g.name, std::string(to_string(g.precision)),
                            csv::format_number(g.tflops), csv::format_number(g.tdp_watts),
                            format_date(g.launch_date), std::string(to_string(g.deployment))});
    out += "\n";
  }
  return out;
}

std::string benchmarks_to_csv(const std::vector<ThroughputBenchmark>& benchmarks) {
  std::string out = csv::format_row(kBenchmarkColumns) + "\n";
  for (const auto& b : benchmarks) {
    out += csv::format_row({std::string(to_string(b.task_domain)), b.model_name, b.framework,
                            std::to_string(b.batch_size), b.gpu_name,
                            std::string(to_string(b.precision)), csv::format_number(b.throughput),
                            b.reference_gpu});
    out += "\n";
  }
  return out;
}

void save_bundle(const DatasetBundle& bundle, const BundlePaths& paths) {
  WriteFile(paths.models, models_to_csv(bundle.models));
  WriteFile(paths.gpus, gpus_to_csv(bundle.gpus));
  WriteFile(paths.benchmarks, benchmarks_to_csv(bundle.benchmarks));
}

std::vector<ModelRecord> filter_models(const DatasetBundle& bundle, const ModelFilter& filter) {
  std::vector<ModelRecord> out;
  for (const auto& m : bundle.models) {
    if (m.domain != filter.domain) continue;
    if (filter.years) {
      const int y = calendar_year(m.release_date);
      if (y < filter.years->first || y > filter.years->last) continue;
    }
    if (filter.require_score && !m.score) continue;
    if (filter.extra_data == ExtraDataFilter::kWithExtra && !m.uses_extra_data()) continue;
    if (filter.extra_data == ExtraDataFilter::kWithoutExtra && m.uses_extra_data()) continue;
    out.push_back(m);
  }
  std::stable_sort(out.begin(), out.end(), [](const ModelRecord& a, const ModelRecord& b) {
    if (a.release_date != b.release_date) return a.release_date < b.release_date;
    return a.name < b.name;
  });
  return out;
}

}  // namespace infercost
