#include "teacheval/csv.hpp"

#include "teacheval/error.hpp"

namespace teacheval::csv {

std::vector<Row> parse(std::string_view text) {
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<Row> rows;
  Row row;
  std::string field;
  bool in_quotes = false;
  bool row_has_content = false;
  std::size_t line = 1;
  row.line = 1;

  auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    if (row_has_content) rows.push_back(std::move(row));
    row = Row{};
    row_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        row_has_content = true;
        break;
      case ',':
        end_field();
        row_has_content = true;
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        ++line;
        row.line = line;
        break;
      default:
        if (c != ' ' && c != '\t') row_has_content = true;
        field += c;
    }
  }
  if (in_quotes)
    throw Error(ErrorCode::unreadable_document, "line " + std::to_string(row.line),
                "unterminated quoted field");
  end_row();
  return rows;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<Row> parse_with_header(std::string_view text,
                                   const std::vector<std::string>& header,
                                   std::string_view what) {
  auto rows = parse(text);
  if (rows.empty())
    throw Error(ErrorCode::unreadable_document, std::string(what), "empty document");

  std::string expected;
  for (const auto& h : header) expected += (expected.empty() ? "" : ",") + h;

  const auto& head = rows.front();
  bool ok = head.fields.size() == header.size();
  for (std::size_t i = 0; ok && i < header.size(); ++i)
    ok = trim(head.fields[i]) == header[i];
  if (!ok)
    throw Error(ErrorCode::unreadable_document,
                std::string(what) + " line " + std::to_string(head.line),
                "expected header " + expected);

  rows.erase(rows.begin());
  for (auto& r : rows) {
    if (r.fields.size() != header.size())
      throw Error(ErrorCode::unreadable_document,
                  std::string(what) + " line " + std::to_string(r.line),
                  "expected " + std::to_string(header.size()) + " fields, got " +
                      std::to_string(r.fields.size()));
    for (auto& f : r.fields) f = trim(f);
  }
  return rows;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace teacheval::csv
