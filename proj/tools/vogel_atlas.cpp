// vogel_atlas: regenerate the Vogel-plane tables, query points, diff against
// the golden assets.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

#include "vogel/atlas/report.hpp"
#include "vogel/atlas/verify.hpp"
#include "vogel/character/character.hpp"
#include "vogel/core/identify.hpp"
#include "vogel/patterns/pattern.hpp"
#include "vogel/solver/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#ifndef VOGEL_ATLAS_DEFAULT_DATA
#define VOGEL_ATLAS_DEFAULT_DATA "data/golden"
#endif

namespace {

using namespace vogel;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct GlobalOptions {
  std::string format;  // empty: subcommand default
  std::int64_t bound = 60;
  unsigned jobs = 1;
  std::string data;
};

/// Key/value listing used by `point` and `equations`.
using Fields = std::vector<std::pair<std::string, std::string>>;

std::string data_dir(const GlobalOptions& g) {
  if (!g.data.empty()) return g.data;
  if (const char* env = std::getenv("VOGEL_ATLAS_DATA"); env != nullptr && *env != '\0') return env;
  return VOGEL_ATLAS_DEFAULT_DATA;
}

void print_rows(const std::vector<ReportRow>& rows, const std::string& format) {
  if (format == "json") {
    std::cout << rows_to_json(rows);
  } else if (format == "md") {
    std::cout << rows_to_markdown(rows);
  } else {
    std::cout << rows_to_csv(rows);
  }
}

/// Tables of uniform records (one per pattern for `equations`).
void print_records(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& records,
                   const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
      nlohmann::ordered_json j;
      for (std::size_t i = 0; i < header.size(); ++i) j[header[i]] = r[i];
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump(2) << "\n";
  } else if (format == "md") {
    std::cout << "|";
    for (const auto& h : header) std::cout << " " << h << " |";
    std::cout << "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) std::cout << "---|";
    std::cout << "\n";
    for (const auto& r : records) {
      std::cout << "|";
      for (const auto& f : r) std::cout << " " << f << " |";
      std::cout << "\n";
    }
  } else if (format == "csv") {
    std::cout << csv::format_record(header) << "\n";
    for (const auto& r : records) std::cout << csv::format_record(r) << "\n";
  } else {
    for (const auto& r : records) {
      for (std::size_t i = 0; i < header.size(); ++i) std::cout << header[i] << ": " << r[i] << "\n";
      std::cout << "\n";
    }
  }
}

void print_fields(const Fields& fields, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : fields) j[k] = v;
    std::cout << j.dump(2) << "\n";
  } else if (format == "md") {
    std::cout << "| field | value |\n|---|---|\n";
    for (const auto& [k, v] : fields) std::cout << "| " << k << " | " << v << " |\n";
  } else if (format == "csv") {
    std::cout << "field,value\n";
    for (const auto& [k, v] : fields) std::cout << csv::quote(k) << "," << csv::quote(v) << "\n";
  } else {
    for (const auto& [k, v] : fields) std::cout << k << ": " << v << "\n";
  }
}

int cmd_solve(const GlobalOptions& g, const std::string& which, bool include_series) {
  std::vector<Pattern> patterns;
  if (which == "all") {
    patterns.assign(kAllPatterns.begin(), kAllPatterns.end());
  } else if (const auto p = pattern_from_name(which)) {
    patterns.push_back(*p);
  } else {
    std::cerr << "unknown pattern '" << which << "' (expected 1aaa..7bga or all)\n";
    return kUsage;
  }
  const auto results = enumerate_patterns(patterns, EnumerateOptions{g.bound, true, g.jobs});
  std::vector<ReportRow> rows;
  for (Pattern p : patterns) {
    for (const auto& s : results.at(p)) {
      if (include_series || s.classification == Classification::Isolated) rows.push_back(to_report_row(s));
    }
  }
  print_rows(rows, g.format.empty() ? "csv" : g.format);
  return kOk;
}

std::string join_values(const std::vector<std::string>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

int cmd_point(const GlobalOptions& g, const std::vector<std::string>& args, bool with_char, bool with_y2,
              bool with_rmatrix) {
  if (args.size() != 3) {
    std::cerr << "point expects exactly three parameters\n";
    return kUsage;
  }
  std::optional<VogelPoint> parsed;
  try {
    parsed = VogelPoint(parse_rational(args[0]), parse_rational(args[1]), parse_rational(args[2]));
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  const VogelPoint& p = *parsed;
  Fields f;
  f.emplace_back("point", to_string(p.alpha()) + "," + to_string(p.beta()) + "," + to_string(p.gamma()));
  f.emplace_back("canonical", canonicalize(p).to_string());
  f.emplace_back("t", to_string(p.t()));
  f.emplace_back("dim", p.has_zero_coordinate() ? "undefined (zero parameter)" : to_string(dimension(p)));
  const CharacterResult ch = character(p);
  f.emplace_back("character", case_label(ch));
  f.emplace_back("rank", is_regular(ch) ? rank(ch).str() : "undefined");
  f.emplace_back("label", identify(p).to_string());
  f.emplace_back("lines", format_lines(line_membership(p)));
  f.emplace_back("semiplane", is_physical(p) ? "physical" : (is_unphysical(p) ? "unphysical" : "boundary"));
  if (with_char) {
    if (const auto* r = std::get_if<RegularPoly>(&ch)) {
      f.emplace_back("expansion", r->poly.to_string());
      std::vector<std::string> coeffs;
      for (const auto& [e, c] : r->poly.terms()) coeffs.push_back(std::to_string(e) + ":" + c.str());
      f.emplace_back("coefficients", join_values(coeffs, " "));
    } else if (std::holds_alternative<IdenticallyZero>(ch)) {
      f.emplace_back("expansion", "0");
    } else {
      f.emplace_back("expansion", "none (" + case_label(ch) + ")");
    }
  }
  if (with_y2) {
    for (Slot s : {Slot::Alpha, Slot::Beta, Slot::Gamma}) {
      std::string value;
      try {
        value = to_string(dim_y2(p, s));
      } catch (const DenominatorZero& e) {
        value = std::string("undefined: ") + e.what();
      }
      f.emplace_back(std::string("y2_") + slot_name(s), value);
    }
  }
  if (with_rmatrix) {
    if (p.has_zero_coordinate()) {
      f.emplace_back("rmatrix", "undefined (zero parameter)");
    } else {
      const RMatrix r = r_matrix(p);
      for (Slot s : {Slot::Alpha, Slot::Beta, Slot::Gamma}) {
        std::vector<std::string> row;
        for (const auto& q : r.row(s)) row.push_back(to_string(q));
        f.emplace_back(std::string("r_") + slot_name(s), join_values(row));
      }
    }
  }
  print_fields(f, g.format);
  return kOk;
}

int cmd_verify(const GlobalOptions& g) {
  std::map<std::string, GoldenTable> golden;
  try {
    golden = load_golden(data_dir(g));
  } catch (const MissingAsset& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "malformed golden data: " << e.what() << "\n";
    return kUsage;
  }
  const auto results = enumerate_all(g.bound, g.jobs);
  const VerifyReport report = verify_tables(golden, results);
  std::cout << report.render();
  return report.ok() ? kOk : kMismatch;
}

int cmd_equations(const GlobalOptions& g) {
  const std::vector<std::string> header = {"pattern", "initial", "shift", "normalized", "dim"};
  std::vector<std::vector<std::string>> records;
  for (Pattern p : kAllPatterns) {
    const CubicPoly cubic = diophantine_cubic(p);
    const NormalizedCubic norm = normalized_cubic(p);
    const Triple& s = norm.shift;
    records.push_back({std::string(pattern_name(p)), "knm = " + cubic.rhs_string(),
                       "(" + s.to_string() + ")", "knm = " + norm.normalized.rhs_string(),
                       dim_polynomial(p).to_string()});
  }
  print_records(header, records, g.format);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer points of the Vogel plane: enumeration, identification and table checks"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json", "md"}));
  app.add_option("--bound", g.bound, "Search bound on |k|, |n|, |m|")->check(CLI::PositiveNumber);
  app.add_option("--jobs", g.jobs, "Worker threads (0: one per core)");
  app.add_option("--data", g.data, "Golden data directory (else $VOGEL_ATLAS_DATA, else built-in)");

  std::string pattern;
  bool include_series = false;
  auto* solve = app.add_subcommand("solve", "Enumerate solutions of one pattern or all of them");
  solve->add_option("pattern", pattern, "1aaa, 2aab, 3aag, 4abg, 5agb, 6baa, 7bga or all")->required();
  solve->add_flag("--include-series", include_series, "Also emit series, degenerate, 0d and 0/0 triples");

  std::vector<std::string> coords;
  bool with_char = false;
  bool with_y2 = false;
  bool with_rmatrix = false;
  auto* point = app.add_subcommand("point", "Describe one point (alpha beta gamma, integers or p/q)");
  point->add_option("params", coords, "alpha beta gamma")->required()->expected(3);
  point->add_flag("--char", with_char, "Print the character expansion in z = exp(x/4)");
  point->add_flag("--y2", with_y2, "Print the three Y2 dimensions");
  point->add_flag("--rmatrix", with_rmatrix, "Print the ratio matrix (2t - kappa) / sigma");

  auto* verify = app.add_subcommand("verify-tables", "Regenerate every table and diff against golden data");
  auto* equations = app.add_subcommand("equations", "Print each pattern's cubic, shift and dimension polynomial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return cmd_solve(g, pattern, include_series);
    if (*point) return cmd_point(g, coords, with_char, with_y2, with_rmatrix);
    if (*verify) return cmd_verify(g);
    if (*equations) return cmd_equations(g);
  } catch (const AllZero& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
