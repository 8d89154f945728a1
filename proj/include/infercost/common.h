/*
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef INFERCOST_COMMON_H_
#define INFERCOST_COMMON_H_

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace infercost {

enum class Domain { kCV, kNLP };

std::string_view to_string(Domain domain);
std::optional<Domain> parse_domain(std::string_view text);

enum class ErrorCode {
  kNonPositiveInput,
  kInvalidArgument,
  kZeroBase,
  kDegenerateResolutions,
  kTooFewPoints,
  kNonPositiveValue,
  kDegenerateDates,
  kNonPositiveSlope,
  kZeroSlope,
  kLengthMismatch,
  kZeroVariance,
  kGroupMismatch,
  kNonFp32Baseline,
  kEmptyGroup,
  kIo,
};

std::string_view to_string(ErrorCode code);

// Precondition failure raised by the analysis operations.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Calendar dates.  Tables print DD/MM/YYYY; ISO YYYY-MM-DD is accepted too.
using Date = std::chrono::year_month_day;

std::optional<Date> parse_date(std::string_view text);
std::string format_date(const Date& date);            // DD/MM/YYYY
std::string format_iso_date(const Date& date);        // YYYY-MM-DD
Date make_date(int year, unsigned month, unsigned day);

// Continuous time axis used by every regression: 1970 + days / 365.25.
double fractional_year(const Date& date);
Date date_from_fractional_year(double year);
int calendar_year(const Date& date);

inline constexpr double kDaysPerYear = 365.25;
inline constexpr int kEpochYear = 1970;

}  // namespace infercost

#endif  // INFERCOST_COMMON_H_
