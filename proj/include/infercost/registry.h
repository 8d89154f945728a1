/*
 * SPDX-License-Identifier: Apache-2.0
 */

// Record types for published models, GPUs and throughput benchmarks, plus the
// CSV loader that validates them into an immutable DatasetBundle.

#ifndef INFERCOST_REGISTRY_H_
#define INFERCOST_REGISTRY_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infercost/common.h"

namespace infercost {

enum class Architecture { kCNN, kTransformer, kHybrid, kRNN };
enum class FlopsProvenance { kReported, kToolMeasured, kEstimated };
enum class GpuPrecision { kFP32, kFP16, kTF32, kMixedTensor };
enum class BenchPrecision { kFP32, kTF32, kMixed };
enum class Deployment { kDesktop, kServer };

std::string_view to_string(Architecture v);
std::string_view to_string(FlopsProvenance v);
std::string_view to_string(GpuPrecision v);
std::string_view to_string(BenchPrecision v);
std::string_view to_string(Deployment v);

std::optional<Architecture> parse_architecture(std::string_view text);
std::optional<FlopsProvenance> parse_provenance(std::string_view text);
std::optional<GpuPrecision> parse_gpu_precision(std::string_view text);
std::optional<BenchPrecision> parse_bench_precision(std::string_view text);
std::optional<Deployment> parse_deployment(std::string_view text);

inline constexpr std::string_view kNoExtraData = "none";

struct ModelRecord {
  std::string name;
  Domain domain = Domain::kCV;
  // Top-1 accuracy (CV) or GLUE test score (NLP), percent.
  std::optional<double> score;
  // Millions of parameters.
  std::optional<double> params_m;
  // One forward pass, fused multiply-add counted as two operations.
  double gflops = 0.0;
  // NLP only.
  std::optional<int> input_tokens;
  std::string extra_data{kNoExtraData};
  Date release_date{};
  Architecture architecture = Architecture::kCNN;
  FlopsProvenance flops_provenance = FlopsProvenance::kReported;

  bool uses_extra_data() const { return extra_data != kNoExtraData; }
  double release_year() const { return fractional_year(release_date); }

  bool operator==(const ModelRecord&) const = default;
};

struct GpuRecord {
  std::string name;
  GpuPrecision precision = GpuPrecision::kFP32;
  double tflops = 0.0;
  double tdp_watts = 0.0;
  Date launch_date{};
  Deployment deployment = Deployment::kDesktop;

  bool operator==(const GpuRecord&) const = default;
};

struct ThroughputBenchmark {
  Domain task_domain = Domain::kCV;
  std::string model_name;
  std::string framework;
  int batch_size = 1;
  std::string gpu_name;
  BenchPrecision precision = BenchPrecision::kFP32;
  // Items per second.
  double throughput = 0.0;
  // GPU whose FP32 run in the same group is the speed-up baseline.
  std::string reference_gpu;

  bool operator==(const ThroughputBenchmark&) const = default;
};

struct DatasetBundle {
  std::vector<ModelRecord> models;
  std::vector<GpuRecord> gpus;
  std::vector<ThroughputBenchmark> benchmarks;
  std::string schema_version{"1"};

  const GpuRecord* find_gpu(std::string_view name, GpuPrecision precision) const;
  const ModelRecord* find_model(std::string_view name) const;

  bool operator==(const DatasetBundle&) const = default;
};

enum class LoadErrorKind {
  kIo,
  kMissingColumn,
  kUnparseableValue,
  kInvariantViolation,
  kDanglingReference,
};

std::string_view to_string(LoadErrorKind kind);

struct LoadError {
  LoadErrorKind kind;
  std::string file;
  // 1-based line in the file; 0 for file-level problems.
  std::size_t row = 0;
  std::string column;
  std::string message;

  std::string to_string() const;
};

struct LoadResult {
  std::optional<DatasetBundle> bundle;
  std::vector<LoadError> errors;

  bool ok() const { return bundle.has_value() && errors.empty(); }
};

struct LoadOptions {
  // Date windows that hold for the bundled tables.  Disable for datasets
  // that reach outside them.
  bool enforce_date_windows = true;
};

struct BundlePaths {
  std::filesystem::path models;
  std::filesystem::path gpus;
  std::filesystem::path benchmarks;
};

// $INFERCOST_DATA_DIR if set, else the data directory the build was
// configured with.
std::filesystem::path default_data_dir();
BundlePaths bundle_paths_in(const std::filesystem::path& dir);

LoadResult load_bundle(const std::filesystem::path& models_path,
                       const std::filesystem::path& gpus_path,
                       const std::filesystem::path& benchmarks_path,
                       const LoadOptions& options = {});
LoadResult load_bundle(const BundlePaths& paths, const LoadOptions& options = {});

// Same as load_bundle but over in-memory file contents.
LoadResult parse_bundle(std::string_view models_csv, std::string_view gpus_csv,
                        std::string_view benchmarks_csv, const LoadOptions& options = {});

std::string models_to_csv(const std::vector<ModelRecord>& models);
std::string gpus_to_csv(const std::vector<GpuRecord>& gpus);
std::string benchmarks_to_csv(const std::vector<ThroughputBenchmark>& benchmarks);
void save_bundle(const DatasetBundle& bundle, const BundlePaths& paths);

enum class ExtraDataFilter { kAny, kWithExtra, kWithoutExtra };

// Inclusive calendar-year range; first > last selects nothing.
struct YearRange {
  int first = 0;
  int last = 0;
};

struct ModelFilter {
  Domain domain = Domain::kCV;
  std::optional<YearRange> years;
  bool require_score = false;
  ExtraDataFilter extra_data = ExtraDataFilter::kAny;
};

// Matching records ordered by release date, ties by name.
std::vector<ModelRecord> filter_models(const DatasetBundle& bundle, const ModelFilter& filter);

}  // namespace infercost

#endif  // INFERCOST_REGISTRY_H_
