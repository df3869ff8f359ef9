#pragma once

// Tabular command output with plain, CSV and JSON encodings.

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace rigidchain::cli {

using Cell = std::variant<std::int64_t, std::string>;
using Row = std::vector<Cell>;

inline constexpr const char* kSchemaVersion = "1";

struct OutputRecord {
  std::string schema_version = kSchemaVersion;
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<std::string> columns;
  std::vector<Row> rows;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

inline nlohmann::ordered_json to_json(const OutputRecord& record) {
  nlohmann::ordered_json j;
  j["schema_version"] = record.schema_version;
  j["command"] = record.command;
  j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : record.parameters) j["parameters"][k] = v;
  j["columns"] = record.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : record.rows) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& c : row) {
      if (const auto* i = std::get_if<std::int64_t>(&c)) {
        out.push_back(*i);
      } else {
        out.push_back(std::get<std::string>(c));
      }
    }
    j["rows"].push_back(std::move(out));
  }
  return j;
}

inline OutputRecord from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  OutputRecord record;
  record.schema_version = j.at("schema_version").get<std::string>();
  record.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("parameters").items()) record.parameters[k] = v.get<std::string>();
  record.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& row : j.at("rows")) {
    Row out;
    for (const auto& c : row) {
      if (c.is_number_integer()) {
        out.emplace_back(c.get<std::int64_t>());
      } else {
        out.emplace_back(c.get<std::string>());
      }
    }
    record.rows.push_back(std::move(out));
  }
  return record;
}

namespace detail {

inline std::string csv_field(const Cell& c) {
  std::string text = cell_text(c);
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

inline Cell csv_cell(std::string text, bool was_quoted) {
  if (!was_quoted && !text.empty()) {
    std::size_t start = text[0] == '-' ? 1 : 0;
    bool digits = start < text.size();
    for (std::size_t k = start; k < text.size(); ++k) digits = digits && text[k] >= '0' && text[k] <= '9';
    if (digits) return static_cast<std::int64_t>(std::stoll(text));
  }
  return text;
}

}  // namespace detail

/// Header row, then one line per row; LF line endings.
inline std::string to_csv(const OutputRecord& record) {
  std::string out;
  for (std::size_t k = 0; k < record.columns.size(); ++k) {
    if (k > 0) out += ',';
    out += detail::csv_field(record.columns[k]);
  }
  out += '\n';
  for (const auto& row : record.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out += ',';
      out += detail::csv_field(row[k]);
    }
    out += '\n';
  }
  return out;
}

/// Parses CSV written by to_csv back into columns and rows. Unquoted integer
/// fields decode as integers.
inline OutputRecord from_csv(std::string_view text) {
  std::vector<std::vector<Cell>> lines;
  std::vector<Cell> current;
  std::string field;
  bool quoted = false, in_quotes = false, any = false;
  auto end_field = [&] {
    current.push_back(detail::csv_cell(field, quoted));
    field.clear();
    quoted = false;
  };
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char ch = text[k];
    any = true;
    if (in_quotes) {
      if (ch == '"' && k + 1 < text.size() && text[k + 1] == '"') {
        field += '"';
        ++k;
      } else if (ch == '"') {
        in_quotes = false;
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      in_quotes = quoted = true;
    } else if (ch == ',') {
      end_field();
    } else if (ch == '\n') {
      end_field();
      lines.push_back(std::move(current));
      current.clear();
      any = false;
    } else {
      field += ch;
    }
  }
  if (in_quotes) throw std::invalid_argument("unterminated quoted CSV field");
  if (any) {
    end_field();
    lines.push_back(std::move(current));
  }
  if (lines.empty()) throw std::invalid_argument("CSV has no header row");
  OutputRecord record;
  for (const auto& c : lines.front()) record.columns.push_back(cell_text(c));
  record.rows.assign(lines.begin() + 1, lines.end());
  return record;
}

}  // namespace rigidchain::cli
