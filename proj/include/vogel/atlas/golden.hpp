/**
 * @file golden.hpp
 * @brief Golden table assets: one CSV per reference table.
 *
 * Header: table,pattern,k,n,m,alpha,beta,gamma,dim,rank,label,lines,notes.
 * Cells hold the values as printed. The notes cell is a '|'-separated list;
 * items of the form "erratum:<field>=<value>" replace a printed value that
 * is known to be wrong, everything else is commentary.
 */
#pragma once

#include "vogel/atlas/csv.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace vogel {

class MissingAsset : public Error {
 public:
  explicit MissingAsset(const std::string& what) : Error(what) {}
};

inline const std::vector<std::string>& golden_columns() {
  static const std::vector<std::string> cols = {"table", "pattern", "k",    "n",     "m",     "alpha", "beta",
                                                "gamma", "dim",     "rank", "label", "lines", "notes"};
  return cols;
}

/// The thirteen reference tables, in report order.
inline const std::vector<std::string>& golden_table_names() {
  static const std::vector<std::string> names = {
      "isolated-1aaa", "isolated-2aab", "isolated-3aag", "isolated-4abg", "isolated-5agb",
      "isolated-6baa", "isolated-7bga", "series",        "physical",      "dimensions",
      "diophantine",   "rmatrix-su",    "rmatrix-g2"};
  return names;
}

struct Erratum {
  std::string field;
  std::string printed;
  std::string corrected;
};

struct GoldenRow {
  std::map<std::string, std::string> cells;  ///< after errata
  std::vector<Erratum> errata;
  std::size_t line = 0;                      ///< 1-based line in the asset

  const std::string& operator[](const std::string& col) const { return cells.at(col); }
};

struct GoldenTable {
  std::string name;
  std::string source;  ///< asset path
  std::vector<GoldenRow> rows;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

inline void apply_errata(GoldenRow& row) {
  const auto it = row.cells.find("notes");
  if (it == row.cells.end() || it->second.empty()) return;
  for (const auto& item : split(it->second, '|')) {
    constexpr std::string_view kPrefix = "erratum:";
    if (item.rfind(kPrefix, 0) != 0) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("malformed erratum '" + item + "'");
    const std::string field = item.substr(kPrefix.size(), eq - kPrefix.size());
    if (field == "table" || field == "notes" || row.cells.count(field) == 0) {
      throw ParseError("erratum names unknown field '" + field + "'");
    }
    Erratum e{field, row.cells[field], item.substr(eq + 1)};
    row.cells[field] = e.corrected;
    row.errata.push_back(std::move(e));
  }
}

}  // namespace detail

inline GoldenTable parse_golden(const std::string& name, std::string_view text, const std::string& source = {}) {
  const auto records = csv::parse(text);
  if (records.empty() || records.front() != golden_columns()) {
    throw ParseError(source + ": unexpected golden header");
  }
  GoldenTable table{name, source, {}};
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (rec.size() != golden_columns().size()) {
      throw ParseError(source + ":" + std::to_string(i + 1) + ": expected 13 fields");
    }
    GoldenRow row;
    row.line = i + 1;
    for (std::size_t c = 0; c < rec.size(); ++c) row.cells[golden_columns()[c]] = rec[c];
    if (row.cells["table"] != name) {
      throw ParseError(source + ":" + std::to_string(i + 1) + ": row belongs to table '" +
                       row.cells["table"] + "'");
    }
    detail::apply_errata(row);
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline GoldenTable load_golden_table(const std::filesystem::path& dir, const std::string& name) {
  const auto path = dir / (name + ".csv");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingAsset("missing golden asset " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_golden(name, buf.str(), path.string());
}

inline std::map<std::string, GoldenTable> load_golden(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw MissingAsset("golden data directory not found: " + dir.string());
  std::map<std::string, GoldenTable> tables;
  for (const auto& name : golden_table_names()) tables.emplace(name, load_golden_table(dir, name));
  return tables;
}

/// Drops the occurrence suffix the tables use to tell repeated labels apart:
/// "E8(1)" -> "E8", "Y21(2)" -> "Y21", "SU(2)(1)" -> "SU(2)". The argument
/// of SU(...) and SO(...) is kept.
inline std::string normalize_label(const std::string& label) {
  std::string base = label;
  std::size_t keep = 0;
  if (base.rfind("SU(", 0) == 0 || base.rfind("SO(", 0) == 0) {
    keep = base.find(')');
    if (keep == std::string::npos) return base;
    ++keep;
  }
  const auto open = base.find('(', keep);
  if (open != std::string::npos && base.back() == ')') base.erase(open);
  return base;
}

}  // namespace vogel
