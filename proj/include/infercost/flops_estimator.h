/*
 * SPDX-License-Identifier: Apache-2.0
 */

// FLOPs counting-convention normalisation and the scaling estimators used to
// fill in forward-pass FLOPs that a model's authors did not report.

#ifndef INFERCOST_FLOPS_ESTIMATOR_H_
#define INFERCOST_FLOPS_ESTIMATOR_H_

#include <span>
#include <string>

namespace infercost {

enum class FlopsConvention {
  // One fused multiply-add reported as one operation (typical of CV papers).
  kMaddPairAsOne,
  // Every arithmetic operation counted (typical of NLP papers).
  kOpAsOne,
};

// Ratios target/base of network depth, width and input resolution.
struct ScaleFactors {
  double depth = 1.0;
  double width = 1.0;
  double resolution = 1.0;

  // Component-wise product: applying `*this` then `next`.
  ScaleFactors then(const ScaleFactors& next) const;
};

struct ArchSpec {
  double width_coeff = 1.0;
  double depth_coeff = 1.0;
  // Pixels per side at test time.
  double test_resolution = 1.0;
};

// GFLOPs in the internal convention (multiply-add = 2 operations).
double normalize_flops(double reported_gflops, FlopsConvention convention);

ScaleFactors scale_factors(const ArchSpec& base, const ArchSpec& target);

// base * d * w^2 * r^2
double compound_scale_flops(double base_gflops, const ScaleFactors& factors);

// base * (target_res / base_res)^2
double resolution_scale_flops(double base_gflops, double base_res, double target_res);

// Empirical exponent k of flops ~ res^k from two measurements.
double resolution_exponent(double flops_a, double flops_b, double res_a, double res_b);

// resolution_scale_flops is only trusted when the measured exponent is near 2.
bool is_quadratic_scaling(double exponent, double tolerance = 0.1);

// Printed precision: integers from 10 GFLOPs up, one decimal below.
double display_gflops(double gflops);

// How a stored "estimated" GFLOPs value was derived.
struct EstimationRecipe {
  enum class Kind { kCompound, kResolution };

  std::string model;
  std::string base_model;
  double base_gflops = 0.0;
  Kind kind = Kind::kCompound;
  ArchSpec base;
  ArchSpec target;

  double estimate() const;
};

// Recipes behind every estimated CV record in the bundled models table.
std::span<const EstimationRecipe> bundled_estimation_recipes();

// Architecture specs of the EfficientNet family members used above.
ArchSpec efficientnet_b7_spec();
ArchSpec efficientnet_l2_spec();

}  // namespace infercost

#endif  // INFERCOST_FLOPS_ESTIMATOR_H_
