/**
 * @file report.hpp
 * @brief Flat report rows for solver output, with CSV, JSON and Markdown
 * serialization. Rationals travel as "p/q" strings, never decimals.
 */
#pragma once

#include "vogel/atlas/csv.hpp"
#include "vogel/solver/solver.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace vogel {

struct ReportRow {
  std::string pattern;
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::optional<std::string> alpha;  ///< primitive integer point, absent for families
  std::optional<std::string> beta;
  std::optional<std::string> gamma;
  std::optional<std::string> dim;
  std::optional<std::string> rank;
  std::string label;
  std::string lines;
  std::string classification;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

inline const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols = {"pattern", "k",   "n",    "m",     "alpha", "beta",
                                                "gamma",   "dim", "rank", "label", "lines", "classification"};
  return cols;
}

inline ReportRow to_report_row(const Solution& s) {
  ReportRow r;
  r.pattern = std::string(pattern_name(s.pattern));
  r.k = s.triple.k;
  r.n = s.triple.n;
  r.m = s.triple.m;
  if (s.point) {
    r.alpha = (*s.point)[0].str();
    r.beta = (*s.point)[1].str();
    r.gamma = (*s.point)[2].str();
    r.label = s.label.to_string();
    r.lines = format_lines(s.lines);
  }
  if (s.dim) r.dim = to_string(*s.dim);
  if (s.rank) r.rank = s.rank->str();
  r.classification = s.classification_text();
  return r;
}

namespace detail {

inline std::string opt_text(const std::optional<std::string>& v) { return v.value_or(""); }

inline std::optional<std::string> text_opt(const std::string& v) {
  return v.empty() ? std::nullopt : std::optional<std::string>(v);
}

inline std::int64_t parse_int64(const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw ParseError("not an integer: '" + text + "'");
  return v;
}

inline csv::Record to_record(const ReportRow& r) {
  return {r.pattern,         std::to_string(r.k), std::to_string(r.n), std::to_string(r.m),
          opt_text(r.alpha), opt_text(r.beta),    opt_text(r.gamma),   opt_text(r.dim),
          opt_text(r.rank),  r.label,             r.lines,             r.classification};
}

}  // namespace detail

inline std::string rows_to_csv(const std::vector<ReportRow>& rows) {
  std::string out = csv::format_record(report_columns()) + "\n";
  for (const auto& r : rows) out += csv::format_record(detail::to_record(r)) + "\n";
  return out;
}

inline std::vector<ReportRow> rows_from_csv(std::string_view text) {
  const auto records = csv::parse(text);
  if (records.empty() || records.front() != report_columns()) {
    throw ParseError("report csv: unexpected header");
  }
  std::vector<ReportRow> rows;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& f = records[i];
    if (f.size() != report_columns().size()) throw ParseError("report csv: wrong field count");
    ReportRow r;
    r.pattern = f[0];
    r.k = detail::parse_int64(f[1]);
    r.n = detail::parse_int64(f[2]);
    r.m = detail::parse_int64(f[3]);
    r.alpha = detail::text_opt(f[4]);
    r.beta = detail::text_opt(f[5]);
    r.gamma = detail::text_opt(f[6]);
    r.dim = detail::text_opt(f[7]);
    r.rank = detail::text_opt(f[8]);
    r.label = f[9];
    r.lines = f[10];
    r.classification = f[11];
    rows.push_back(std::move(r));
  }
  return rows;
}

inline nlohmann::ordered_json row_to_json(const ReportRow& r) {
  const auto opt = [](const std::optional<std::string>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  nlohmann::ordered_json j;
  j["pattern"] = r.pattern;
  j["k"] = r.k;
  j["n"] = r.n;
  j["m"] = r.m;
  j["alpha"] = opt(r.alpha);
  j["beta"] = opt(r.beta);
  j["gamma"] = opt(r.gamma);
  j["dim"] = opt(r.dim);
  j["rank"] = opt(r.rank);
  j["label"] = r.label;
  j["lines"] = r.lines;
  j["classification"] = r.classification;
  return j;
}

inline std::string rows_to_json(const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) arr.push_back(row_to_json(r));
  return arr.dump(2) + "\n";
}

inline std::vector<ReportRow> rows_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report json: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("report json: expected an array");
  const auto opt = [](const nlohmann::json& v) -> std::optional<std::string> {
    if (v.is_null()) return std::nullopt;
    return v.get<std::string>();
  };
  std::vector<ReportRow> rows;
  try {
    for (const auto& j : doc) {
      ReportRow r;
      r.pattern = j.at("pattern").get<std::string>();
      r.k = j.at("k").get<std::int64_t>();
      r.n = j.at("n").get<std::int64_t>();
      r.m = j.at("m").get<std::int64_t>();
      r.alpha = opt(j.at("alpha"));
      r.beta = opt(j.at("beta"));
      r.gamma = opt(j.at("gamma"));
      r.dim = opt(j.at("dim"));
      r.rank = opt(j.at("rank"));
      r.label = j.at("label").get<std::string>();
      r.lines = j.at("lines").get<std::string>();
      r.classification = j.at("classification").get<std::string>();
      rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report json: ") + e.what());
  }
  return rows;
}

inline std::string rows_to_markdown(const std::vector<ReportRow>& rows) {
  const auto& cols = report_columns();
  std::string out = "|";
  for (const auto& c : cols) out += " " + c + " |";
  out += "\n|";
  for (std::size_t i = 0; i < cols.size(); ++i) out += "---|";
  out += "\n";
  for (const auto& r : rows) {
    out += "|";
    for (const auto& f : detail::to_record(r)) out += " " + f + " |";
    out += "\n";
  }
  return out;
}

}  // namespace vogel
