#ifndef ZRISK_CSV_HPP_
#define ZRISK_CSV_HPP_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "zrisk/errors.hpp"

namespace zrisk {

/// Parsed CSV file: mandatory header row plus data rows with their original
/// 1-based line numbers for error reporting.
struct CsvTable {
  std::string source;  // path or synthetic name
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;
};

namespace detail {

// One record per call; handles quoted fields, escaped quotes and embedded
// newlines. `line` tracks the physical line of the record's first byte.
inline bool next_record(std::string_view text, std::size_t& pos, std::size_t& line,
                        std::vector<std::string>& fields, const std::string& source) {
  fields.clear();
  if (pos >= text.size()) return false;

  std::string field;
  bool quoted = false;
  const std::size_t record_line = line;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (quoted) {
      if (ch == '"') {
        if (pos + 1 < text.size() && text[pos + 1] == '"') {
          field.push_back('"');
          pos += 2;
        } else {
          quoted = false;
          ++pos;
        }
      } else {
        if (ch == '\n') ++line;
        field.push_back(ch);
        ++pos;
      }
      continue;
    }
    if (ch == '"') {
      if (!field.empty()) {
        std::ostringstream out;
        out << source << ":" << line << ": unexpected quote inside an unquoted field";
        throw validation_error(out.str());
      }
      quoted = true;
      ++pos;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
      ++pos;
    } else if (ch == '\r') {
      ++pos;  // swallow; newline handling follows
    } else if (ch == '\n') {
      ++pos;
      ++line;
      fields.push_back(std::move(field));
      return true;
    } else {
      field.push_back(ch);
      ++pos;
    }
  }
  if (quoted) {
    std::ostringstream out;
    out << source << ":" << record_line << ": unterminated quoted field";
    throw validation_error(out.str());
  }
  fields.push_back(std::move(field));
  return true;
}

}  // namespace detail

/// Parse CSV text. Throws validation_error with source:line context on
/// malformed input (including rows whose width differs from the header's).
[[nodiscard]] inline CsvTable parse_csv(std::string_view text, const std::string& source) {
  CsvTable table;
  table.source = source;

  std::size_t pos = 0;
  std::size_t line = 1;
  std::vector<std::string> fields;
  if (!detail::next_record(text, pos, line, fields, source)) {
    throw validation_error(source + ": empty file; a header row is mandatory");
  }
  table.header = fields;

  std::size_t record_line = line;
  while (detail::next_record(text, pos, line, fields, source)) {
    if (fields.size() == 1 && fields[0].empty()) {
      record_line = line;
      continue;  // blank line
    }
    if (fields.size() != table.header.size()) {
      std::ostringstream out;
      out << source << ":" << record_line << ": expected " << table.header.size()
          << " fields, got " << fields.size();
      throw validation_error(out.str());
    }
    table.rows.push_back(fields);
    table.line_numbers.push_back(record_line);
    record_line = line;
  }
  return table;
}

[[nodiscard]] inline CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw validation_error("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str(), path.string());
}

/// Quote a field if it contains a delimiter, quote or newline.
[[nodiscard]] inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out.push_back(ch);
  }
  out += "\"";
  return out;
}

[[nodiscard]] inline std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += csv_escape(fields[i]);
  }
  out.push_back('\n');
  return out;
}

}  // namespace zrisk

#endif  // ZRISK_CSV_HPP_
