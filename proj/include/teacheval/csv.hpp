#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace teacheval::csv {

struct Row {
  std::size_t line = 0;  // 1-based line where the row starts
  std::vector<std::string> fields;
};

// Minimal RFC 4180 reader: comma separated, double-quote escaping, CRLF or LF
// line ends, optional UTF-8 BOM. Blank lines are skipped.
std::vector<Row> parse(std::string_view text);

// Parses `text`, checks the first row against `header` (whitespace-trimmed,
// exact names and order) and returns the data rows. Throws Error on mismatch
// or ragged rows.
std::vector<Row> parse_with_header(std::string_view text,
                                   const std::vector<std::string>& header,
                                   std::string_view what);

std::string trim(std::string_view s);

// Quotes a field if it contains a comma, quote or newline.
std::string escape(std::string_view field);

}  // namespace teacheval::csv
