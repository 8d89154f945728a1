/*
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef INFERCOST_CSV_H_
#define INFERCOST_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace infercost::csv {

using Row = std::vector<std::string>;

struct Table {
  Row header;
  std::vector<Row> rows;
  // 1-based physical line number of each row, for error messages.
  std::vector<std::size_t> line_numbers;
};

// RFC 4180 style: comma separated, double-quote quoting with "" escapes,
// LF or CRLF line endings.  Blank lines are skipped.  A UTF-8 BOM is dropped.
Table parse(std::string_view text);

std::string escape_field(std::string_view field);
std::string format_row(const Row& row);

// Shortest decimal that round-trips to the same double.
std::string format_number(double value);

}  // namespace infercost::csv

#endif  // INFERCOST_CSV_H_
