/**
 * @file csv.hpp
 * @brief Minimal RFC 4180 reading and writing (quoted fields, doubled quotes,
 * embedded commas and newlines).
 */
#pragma once

#include "vogel/exact/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace vogel::csv {

using Record = std::vector<std::string>;

inline std::string quote(std::string_view field) {
  const bool needs = field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string format_record(const Record& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += ',';
    line += quote(fields[i]);
  }
  return line;
}

/// Parses a whole document. Blank lines are skipped; CRLF is accepted.
inline std::vector<Record> parse(std::string_view text) {
  std::vector<Record> records;
  Record current;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  const auto end_field = [&] {
    current.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  const auto end_record = [&] {
    if (!(current.empty() && !field_started && field.empty())) {
      end_field();
      records.push_back(std::move(current));
    }
    current.clear();
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
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) throw ParseError("csv: quote inside unquoted field");
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        field_started = true;
        end_field();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (in_quotes) throw ParseError("csv: unterminated quoted field");
  end_record();
  return records;
}

}  // namespace vogel::csv
