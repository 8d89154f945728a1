/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "infercost/common.h"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace infercost {

std::string_view to_string(Domain domain) {
  switch (domain) {
    case Domain::kCV:
      return "CV";
    case Domain::kNLP:
      return "NLP";
  }
  return "?";
}

std::optional<Domain> parse_domain(std::string_view text) {
  if (text == "CV" || text == "cv") return Domain::kCV;
  if (text == "NLP" || text == "nlp") return Domain::kNLP;
  return std::nullopt;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPositiveInput:
      return "NonPositiveInput";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kZeroBase:
      return "ZeroBase";
    case ErrorCode::kDegenerateResolutions:
      return "DegenerateResolutions";
    case ErrorCode::kTooFewPoints:
      return "TooFewPoints";
    case ErrorCode::kNonPositiveValue:
      return "NonPositiveValue";
    case ErrorCode::kDegenerateDates:
      return "DegenerateDates";
    case ErrorCode::kNonPositiveSlope:
      return "NonPositiveSlope";
    case ErrorCode::kZeroSlope:
      return "ZeroSlope";
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kZeroVariance:
      return "ZeroVariance";
    case ErrorCode::kGroupMismatch:
      return "GroupMismatch";
    case ErrorCode::kNonFp32Baseline:
      return "NonFp32Baseline";
    case ErrorCode::kEmptyGroup:
      return "EmptyGroup";
    case ErrorCode::kIo:
      return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

namespace {

bool parse_int(std::string_view text, int& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

std::optional<Date> parse_date(std::string_view text) {
  int a = 0, b = 0, c = 0;
  if (text.size() == 10 && text[2] == '/' && text[5] == '/') {
    if (!parse_int(text.substr(0, 2), a) || !parse_int(text.substr(3, 2), b) ||
        !parse_int(text.substr(6, 4), c)) {
      return std::nullopt;
    }
    Date d = make_date(c, static_cast<unsigned>(b), static_cast<unsigned>(a));
    if (!d.ok()) return std::nullopt;
    return d;
  }
  if (text.size() == 10 && text[4] == '-' && text[7] == '-') {
    if (!parse_int(text.substr(0, 4), a) || !parse_int(text.substr(5, 2), b) ||
        !parse_int(text.substr(8, 2), c)) {
      return std::nullopt;
    }
    Date d = make_date(a, static_cast<unsigned>(b), static_cast<unsigned>(c));
    if (!d.ok()) return std::nullopt;
    return d;
  }
  return std::nullopt;
}

std::string format_date(const Date& date) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%02u/%02u/%04d", static_cast<unsigned>(date.day()),
                static_cast<unsigned>(date.month()), static_cast<int>(date.year()));
  return buf;
}

std::string format_iso_date(const Date& date) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
  return buf;
}

Date make_date(int year, unsigned month, unsigned day) {
  return Date{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
}

double fractional_year(const Date& date) {
  const auto days = std::chrono::sys_days{date}.time_since_epoch().count();
  return kEpochYear + static_cast<double>(days) / kDaysPerYear;
}

Date date_from_fractional_year(double year) {
  const double days = std::floor((year - kEpochYear) * kDaysPerYear + 1e-9);
  return Date{std::chrono::sys_days{std::chrono::days{static_cast<long>(days)}}};
}

int calendar_year(const Date& date) { return static_cast<int>(date.year()); }

}  // namespace infercost
