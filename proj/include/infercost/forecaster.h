/*
 * SPDX-License-Identifier: Apache-2.0
 */

// Human energy baselines (metabolic and total per-capita consumption), the
// dates at which fitted Joules trends reach them, and per-capita scenarios.

#ifndef INFERCOST_FORECASTER_H_
#define INFERCOST_FORECASTER_H_

#include <optional>
#include <string_view>

#include "infercost/trend_engine.h"

namespace infercost {

struct EnergyConstants {
  double joules_per_kcal = 4184.0;
  double seconds_per_day = 86400.0;
  double joules_per_kwh = 3.6e6;
  // Julian year.
  double seconds_per_year = 31557600.0;
};

enum class BaselineKind { kSomatic, kExternal, kCustom };

std::string_view to_string(BaselineKind kind);

struct Baseline {
  BaselineKind kind = BaselineKind::kCustom;
  double joules_per_second = 0.0;
};

inline constexpr double kDefaultKcalPerDay = 2000.0;
inline constexpr double kDefaultKwhPerYear = 79897.0;

Baseline somatic_baseline(double kcal_per_day, const EnergyConstants& c = {});
Baseline external_baseline(double kwh_per_year, const EnergyConstants& c = {});
Baseline custom_baseline(double joules_per_second);

struct Crossing {
  double year = 0.0;
  // Absent when the year is too far out to be a calendar date.
  std::optional<Date> date;
  bool in_past = false;
};

// Year t with predict(fit, t) == baseline: (log10 b - intercept) / slope.
// `as_of_year` decides in_past.
Crossing crossing_date(const TrendFit& fit, const Baseline& baseline, double as_of_year);

struct Scenario {
  double inferences_per_capita_per_second = 1.0;
  double population = 1.0;
};

struct PerCapitaPower {
  double per_capita_watts = 0.0;
  double aggregate_watts = 0.0;
};

PerCapitaPower percapita_power(double joules_per_inference, const Scenario& scenario);

}  // namespace infercost

#endif  // INFERCOST_FORECASTER_H_
