/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "infercost/forecaster.h"

#include <cmath>

namespace infercost {

std::string_view to_string(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::kSomatic:
      return "somatic";
    case BaselineKind::kExternal:
      return "external";
    case BaselineKind::kCustom:
      return "custom";
  }
  return "?";
}

namespace {

void RequirePositive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) {
    throw Error(ErrorCode::kNonPositiveInput, std::string(what) + " must be positive");
  }
}

}  // namespace

Baseline somatic_baseline(double kcal_per_day, const EnergyConstants& c) {
  RequirePositive(kcal_per_day, "kcal per day");
  return {BaselineKind::kSomatic, kcal_per_day * c.joules_per_kcal / c.seconds_per_day};
}

Baseline external_baseline(double kwh_per_year, const EnergyConstants& c) {
  RequirePositive(kwh_per_year, "kWh per year");
  return {BaselineKind::kExternal, kwh_per_year * c.joules_per_kwh / c.seconds_per_year};
}

Baseline custom_baseline(double joules_per_second) {
  RequirePositive(joules_per_second, "baseline power");
  return {BaselineKind::kCustom, joules_per_second};
}

Crossing crossing_date(const TrendFit& fit, const Baseline& baseline, double as_of_year) {
  if (fit.slope == 0.0) throw Error(ErrorCode::kZeroSlope, "flat trend never crosses");
  RequirePositive(baseline.joules_per_second, "baseline power");
  Crossing c;
  c.year = (std::log10(baseline.joules_per_second) - fit.intercept) / fit.slope;
  c.in_past = c.year < as_of_year;
  if (std::isfinite(c.year) && c.year > -10000.0 && c.year < 10000.0) {
    c.date = date_from_fractional_year(c.year);
  }
  return c;
}

PerCapitaPower percapita_power(double joules_per_inference, const Scenario& scenario) {
  RequirePositive(joules_per_inference, "Joules per inference");
  if (!(scenario.inferences_per_capita_per_second >= 0) ||
      !std::isfinite(scenario.inferences_per_capita_per_second)) {
    throw Error(ErrorCode::kInvalidArgument, "inference rate must be finite and >= 0");
  }
  if (!(scenario.population >= 1)) {
    throw Error(ErrorCode::kInvalidArgument, "population must be >= 1");
  }
  const double w = joules_per_inference * scenario.inferences_per_capita_per_second;
  return {w, w * scenario.population};
}

}  // namespace infercost
