/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "infercost/report.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixture.h"

namespace infercost {
namespace {

using testing_support::Bundle;

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

TEST(Report, RoundSig6) {
  EXPECT_DOUBLE_EQ(round_sig6(96.851851), 96.8519);
  EXPECT_DOUBLE_EQ(round_sig6(2012.41752), 2012.42);
  EXPECT_DOUBLE_EQ(round_sig6(0.0), 0.0);
  EXPECT_DOUBLE_EQ(round_sig6(-1.23456789e-5), -1.23457e-5);
}

TEST(Report, JsonlRoundTrip) {
  FigureSeries s;
  s.figure_id = "demo";
  s.x_axis = {"release date", "year", false};
  s.y_axis = {"forward pass", "GFLOPs", true};
  s.points = {{2012.5, 1.42, "AlexNet", "frontier"}, {2014.0, 39.3, "VGG, \"19\"", ""}};
  s.fits = {{"GFLOPs frontier", Subset::kFrontier, 0.371, -746.5, 0.927, 10}};
  s.markers = {{"somatic", std::nullopt, 96.8519}, {"crossing", 2024.02, 96.8519}};
  const std::string text = to_jsonl(s);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 6);
  EXPECT_EQ(from_jsonl(text), s);
}

TEST(Report, CvAnalysis) {
  const DomainAnalysis a = analyze(Bundle(), Domain::kCV);
  EXPECT_EQ(a.models.size(), 94u);
  EXPECT_EQ(a.frontier.size(), 10u);
  EXPECT_EQ(a.energy.size(), a.models.size());
  EXPECT_EQ(a.speedups.size(), 4u);
  EXPECT_GT(a.gflops_frontier_fit->slope, 0);
  EXPECT_GE(a.gflops_frontier_fit->r_squared, 0.7);
  EXPECT_LT(a.joules_all_fit->slope, a.joules_frontier_fit->slope);
  ASSERT_TRUE(a.equivalence_reference);
  EXPECT_DOUBLE_EQ(*a.equivalence_reference, 1.42);
  EXPECT_EQ(a.crossings.size(), 4u);
  ASSERT_EQ(a.correlations.size(), 3u);
  EXPECT_EQ(a.correlations[0].subset, "Transformer");
}

TEST(Report, NlpAnalysis) {
  const DomainAnalysis a = analyze(Bundle(), Domain::kNLP);
  EXPECT_EQ(a.models.size(), 19u);
  EXPECT_EQ(a.frontier_metric, FrontierMetric::kGflops);
  EXPECT_GT(a.gflops_frontier_fit->slope, 0);
  EXPECT_GE(a.gflops_frontier_fit->r_squared, 0.7);
  EXPECT_LT(a.joules_all_fit->slope, a.joules_frontier_fit->slope);
  EXPECT_FALSE(a.equivalence_reference);
}

TEST(Report, FigureCounts) {
  EXPECT_EQ(build_figures(analyze(Bundle(), Domain::kCV)).size(), 7u);
  EXPECT_EQ(build_figures(analyze(Bundle(), Domain::kNLP)).size(), 5u);
}

TEST(Report, LogAxesArePositive) {
  for (Domain d : {Domain::kCV, Domain::kNLP}) {
    for (const auto& f : build_figures(analyze(Bundle(), d))) {
      ASSERT_FALSE(f.points.empty()) << f.figure_id;
      for (const auto& p : f.points) {
        if (f.x_axis.log_scale) {
          EXPECT_GT(p.x, 0) << f.figure_id;
        }
        if (f.y_axis.log_scale) {
          EXPECT_GT(p.y, 0) << f.figure_id;
        }
      }
    }
  }
}

TEST(Report, WrittenFilesAreDeterministicAndReloadable) {
  const auto base = std::filesystem::temp_directory_path() / "infercost_report_test";
  std::filesystem::remove_all(base);
  const DomainAnalysis a = analyze(Bundle(), Domain::kCV);
  const auto first = write_report(a, base / "one");
  const auto second = write_report(analyze(Bundle(), Domain::kCV), base / "two");
  ASSERT_EQ(first.size(), 8u);
  ASSERT_EQ(second.size(), first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(Slurp(first[i]), Slurp(second[i])) << first[i];
    if (first[i].extension() == ".jsonl") {
      const FigureSeries s = from_jsonl(Slurp(first[i]));
      EXPECT_EQ(s.figure_id + ".jsonl", first[i].filename().string());
    }
  }
  std::filesystem::remove_all(base);
}

TEST(Report, SummaryContents) {
  const std::string s = render_summary(analyze(Bundle(), Domain::kCV));
  for (const char* needle :
       {"gflops frontier:", "joules all:", "doubling", "pareto frontier (score vs GFLOPs)",
        "models within 120% of AlexNet", "adopted convention: raw", "For CNN,T4,Mixed,21.85",
        "somatic 96.85 J/s", "yearly mean joules", "efficiency w/o T4"}) {
    EXPECT_NE(s.find(needle), std::string::npos) << needle;
  }
}

TEST(Report, EmptyBundle) {
  DatasetBundle empty;
  const DomainAnalysis a = analyze(empty, Domain::kCV);
  EXPECT_TRUE(build_figures(a).empty());
  EXPECT_NE(render_summary(a).find("records: 0"), std::string::npos);
  const auto dir = std::filesystem::temp_directory_path() / "infercost_report_empty";
  std::filesystem::remove_all(dir);
  const auto files = write_report(a, dir);
  ASSERT_EQ(files.size(), 1u);
  EXPECT_EQ(files[0].filename(), "summary_cv.txt");
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace infercost
