/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "infercost/flops_estimator.h"

#include <cmath>
#include <vector>

#include "infercost/common.h"

namespace infercost {
namespace {

void RequirePositive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) {
    throw Error(ErrorCode::kNonPositiveInput, std::string(what) + " must be positive and finite");
  }
}

void RequireFactors(const ScaleFactors& f) {
  RequirePositive(f.depth, "depth ratio");
  RequirePositive(f.width, "width ratio");
  RequirePositive(f.resolution, "resolution ratio");
}

}  // namespace

ScaleFactors ScaleFactors::then(const ScaleFactors& next) const {
  return {depth * next.depth, width * next.width, resolution * next.resolution};
}

double normalize_flops(double reported_gflops, FlopsConvention convention) {
  RequirePositive(reported_gflops, "reported GFLOPs");
  return convention == FlopsConvention::kMaddPairAsOne ? 2.0 * reported_gflops : reported_gflops;
}

ScaleFactors scale_factors(const ArchSpec& base, const ArchSpec& target) {
  if (!(base.width_coeff > 0) || !(base.depth_coeff > 0) || !(base.test_resolution > 0)) {
    throw Error(ErrorCode::kZeroBase, "base architecture coefficients must be positive");
  }
  ScaleFactors f{target.depth_coeff / base.depth_coeff, target.width_coeff / base.width_coeff,
                 target.test_resolution / base.test_resolution};
  RequireFactors(f);
  return f;
}

double compound_scale_flops(double base_gflops, const ScaleFactors& f) {
  RequirePositive(base_gflops, "base GFLOPs");
  RequireFactors(f);
  return base_gflops * f.depth * f.width * f.width * f.resolution * f.resolution;
}

double resolution_scale_flops(double base_gflops, double base_res, double target_res) {
  RequirePositive(base_gflops, "base GFLOPs");
  RequirePositive(base_res, "base resolution");
  RequirePositive(target_res, "target resolution");
  const double ratio = target_res / base_res;
  return base_gflops * ratio * ratio;
}

double resolution_exponent(double flops_a, double flops_b, double res_a, double res_b) {
  RequirePositive(flops_a, "flops_a");
  RequirePositive(flops_b, "flops_b");
  RequirePositive(res_a, "res_a");
  RequirePositive(res_b, "res_b");
  if (res_a == res_b) {
    throw Error(ErrorCode::kDegenerateResolutions, "resolutions must differ");
  }
  return std::log(flops_b / flops_a) / std::log(res_b / res_a);
}

bool is_quadratic_scaling(double exponent, double tolerance) {
  return std::abs(exponent - 2.0) <= tolerance;
}

double display_gflops(double gflops) {
  if (gflops >= 10.0) return std::round(gflops);
  return std::round(gflops * 10.0) / 10.0;
}

double EstimationRecipe::estimate() const {
  if (kind == Kind::kResolution) {
    return resolution_scale_flops(base_gflops, base.test_resolution, target.test_resolution);
  }
  return compound_scale_flops(base_gflops, scale_factors(base, target));
}

ArchSpec efficientnet_b7_spec() { return {2.0, 3.1, 600.0}; }
ArchSpec efficientnet_l2_spec() { return {4.3, 5.3, 800.0}; }

std::span<const EstimationRecipe> bundled_estimation_recipes() {
  using Kind = EstimationRecipe::Kind;
  static const std::vector<EstimationRecipe> recipes = [] {
    const ArchSpec b7 = efficientnet_b7_spec();
    const ArchSpec l2 = efficientnet_l2_spec();
    ArchSpec l2_at_600 = l2;
    l2_at_600.test_resolution = 600.0;
    ArchSpec b7_at_632 = b7;
    b7_at_632.test_resolution = 632.0;
    const ArchSpec b0{1.0, 1.0, 224.0};
    ArchSpec b0_at_320 = b0;
    b0_at_320.test_resolution = 320.0;
    return std::vector<EstimationRecipe>{
        {"NoisyStudent-L2", "EfficientNet-B7", 74.0, Kind::kCompound, b7, l2},
        // Same network as NoisyStudent-L2, different training.
        {"Meta Pseudo Labels L2", "EfficientNet-B7", 74.0, Kind::kCompound, b7, l2},
        {"FixEfficientNet-L2", "EfficientNet-B7", 74.0, Kind::kCompound, b7, l2_at_600},
        {"FixEfficientNet-B7", "EfficientNet-B7", 74.0, Kind::kResolution, b7, b7_at_632},
        {"FixEfficientNet-B0", "EfficientNet-B0", 0.78, Kind::kResolution, b0, b0_at_320},
        // Transformer: quadratic in resolution, checked against the 224/384
        // measurements (965.3 and 2859.9 GFLOPs).
        {"ViT-G/14", "ViT-G/14@384", 2859.9, Kind::kResolution, {1.0, 1.0, 384.0},
         {1.0, 1.0, 518.0}},
    };
  }();
  return recipes;
}

}  // namespace infercost
