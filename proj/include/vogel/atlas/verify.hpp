/**
 * @file verify.hpp
 * @brief Regenerates every reference table and diffs it against the golden
 * assets.
 */
#pragma once

#include "vogel/atlas/expression.hpp"
#include "vogel/atlas/golden.hpp"
#include "vogel/solver/solver.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace vogel {

struct TableDiff {
  enum class Kind { Missing, Extra, Mismatch };
  Kind kind;
  std::string key;
  std::string detail;
};

inline std::string diff_kind_name(TableDiff::Kind k) {
  switch (k) {
    case TableDiff::Kind::Missing: return "missing";
    case TableDiff::Kind::Extra: return "extra";
    case TableDiff::Kind::Mismatch: return "mismatch";
  }
  return "?";
}

struct TableReport {
  std::string name;
  std::size_t golden_rows = 0;
  std::vector<TableDiff> diffs;
  std::vector<std::string> errata;  ///< corrections applied from the notes

  bool ok() const { return diffs.empty(); }
};

struct VerifyReport {
  std::vector<TableReport> tables;

  bool ok() const {
    return std::all_of(tables.begin(), tables.end(), [](const TableReport& t) { return t.ok(); });
  }

  std::string render() const {
    std::string out;
    std::size_t failed = 0;
    for (const auto& t : tables) {
      if (t.ok()) {
        out += t.name + ": ok (" + std::to_string(t.golden_rows) + " rows)\n";
      } else {
        ++failed;
        out += t.name + ": " + std::to_string(t.diffs.size()) + " difference(s)\n";
        for (const auto& d : t.diffs) {
          out += "  " + diff_kind_name(d.kind) + " " + d.key;
          if (!d.detail.empty()) out += ": " + d.detail;
          out += "\n";
        }
      }
      for (const auto& e : t.errata) out += "  erratum " + e + "\n";
    }
    if (failed == 0) {
      out += std::to_string(tables.size()) + " tables verified\n";
    } else {
      out += std::to_string(failed) + " of " + std::to_string(tables.size()) + " tables differ\n";
    }
    return out;
  }
};

namespace detail {

inline std::string errata_text(const GoldenTable& table, const GoldenRow& row) {
  std::string out;
  for (const auto& e : row.errata) {
    if (!out.empty()) out += "; ";
    out += table.name + " line " + std::to_string(row.line) + ": " + e.field + " printed '" + e.printed +
           "', using '" + e.corrected + "'";
  }
  return out;
}

inline void collect_errata(const GoldenTable& table, TableReport& report) {
  for (const auto& row : table.rows) {
    if (!row.errata.empty()) report.errata.push_back(errata_text(table, row));
  }
}

inline Integer parse_integer(const std::string& s) {
  const Rational q = parse_rational(s);
  if (!is_integer(q)) throw ParseError("expected an integer, got '" + s + "'");
  return numerator_of(q);
}

inline Triple parse_triple(const GoldenRow& row) {
  return {to_int64(parse_integer(row["k"])), to_int64(parse_integer(row["n"])),
          to_int64(parse_integer(row["m"]))};
}

inline std::string lines_text(const std::set<LineId>& lines) {
  const std::string s = format_lines(lines, false);
  return s.empty() ? "(none)" : s;
}

/// Field-by-field comparison of a golden solution row with a computed one.
inline std::vector<std::string> compare_solution(const GoldenRow& row, const Solution& s) {
  std::vector<std::string> problems;
  const VogelPoint printed(parse_rational(row["alpha"]), parse_rational(row["beta"]),
                           parse_rational(row["gamma"]));
  if (!s.canonical || canonicalize(printed) != *s.canonical) {
    problems.push_back("point " + printed.to_string() + " vs computed " +
                       (s.point ? s.vogel().to_string() : std::string("(none)")));
  }
  const Rational dim = parse_rational(row["dim"]);
  if (!s.dim || *s.dim != dim) {
    problems.push_back("dim " + row["dim"] + " vs " + (s.dim ? to_string(*s.dim) : std::string("undefined")));
  }
  const Rational rk = parse_rational(row["rank"]);
  if (!s.rank || Rational(*s.rank) != rk) {
    problems.push_back("rank " + row["rank"] + " vs " + (s.rank ? s.rank->str() : std::string("undefined")));
  }
  const std::string label = normalize_label(row["label"]);
  if (label != s.label.to_string()) problems.push_back("label " + label + " vs " + s.label.to_string());
  std::set<LineId> computed_lines = s.lines;
  computed_lines.erase(LineId::SU);
  const auto printed_lines = parse_lines(row["lines"]);
  if (printed_lines != computed_lines) {
    problems.push_back("lines " + lines_text(printed_lines) + " vs " + lines_text(computed_lines));
  }
  return problems;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

/// Diffs keyed solution sets.
template <class Key>
void diff_solution_rows(const std::map<Key, const GoldenRow*>& golden, const std::map<Key, const Solution*>& computed,
                        const std::function<std::string(const Key&)>& key_text, TableReport& report) {
  for (const auto& [key, row] : golden) {
    const auto it = computed.find(key);
    if (it == computed.end()) {
      report.diffs.push_back({TableDiff::Kind::Missing, key_text(key), "line " + std::to_string(row->line)});
      continue;
    }
    const auto problems = compare_solution(*row, *it->second);
    if (!problems.empty()) {
      report.diffs.push_back({TableDiff::Kind::Mismatch, key_text(key), join(problems, "; ")});
    }
  }
  for (const auto& [key, s] : computed) {
    if (golden.count(key) == 0) {
      report.diffs.push_back({TableDiff::Kind::Extra, key_text(key),
                              s->label.to_string() + " dim " + (s->dim ? to_string(*s->dim) : std::string("?"))});
    }
  }
}

inline TableReport verify_isolated(const GoldenTable& table, Pattern pat, const std::vector<Solution>& solutions) {
  TableReport report{table.name, table.rows.size(), {}, {}};
  collect_errata(table, report);
  std::map<Triple, const GoldenRow*> golden;
  for (const auto& row : table.rows) {
    if (row["pattern"] != pattern_name(pat)) {
      report.diffs.push_back({TableDiff::Kind::Mismatch, "line " + std::to_string(row.line),
                              "pattern " + row["pattern"]});
      continue;
    }
    // Printed triples follow per-table conventions (e.g. |k| >= |n| >= |m|
    // for 4abg); compare through the orbit representative.
    if (!golden.emplace(orbit_representative(pat, parse_triple(row)), &row).second) {
      report.diffs.push_back({TableDiff::Kind::Mismatch, row["k"] + "," + row["n"] + "," + row["m"],
                              "duplicate golden row"});
    }
  }
  std::map<Triple, const Solution*> computed;
  for (const auto& s : solutions) {
    if (s.classification == Classification::Isolated) computed.emplace(s.triple, &s);
  }
  diff_solution_rows<Triple>(golden, computed, [](const Triple& t) { return t.to_string(); }, report);
  return report;
}

using PatternTriple = std::pair<std::string, Triple>;

inline TableReport verify_physical(const GoldenTable& table,
                                   const std::map<Pattern, std::vector<Solution>>& results) {
  TableReport report{table.name, table.rows.size(), {}, {}};
  collect_errata(table, report);
  std::map<PatternTriple, const GoldenRow*> golden;
  for (const auto& row : table.rows) {
    const auto pat = pattern_from_name(row["pattern"]);
    if (!pat) {
      report.diffs.push_back({TableDiff::Kind::Extra, "line " + std::to_string(row.line), "unknown pattern"});
      continue;
    }
    golden.emplace(PatternTriple{row["pattern"], orbit_representative(*pat, parse_triple(row))}, &row);
  }
  std::map<PatternTriple, const Solution*> computed;
  for (const auto& [pat, list] : results) {
    for (const auto& s : list) {
      if (s.classification != Classification::Isolated || !s.dim || *s.dim == 0) continue;
      if (!is_physical(s.vogel())) continue;
      computed.emplace(PatternTriple{std::string(pattern_name(pat)), s.triple}, &s);
    }
  }
  diff_solution_rows<PatternTriple>(
      golden, computed, [](const PatternTriple& k) { return k.first + " " + k.second.to_string(); }, report);
  return report;
}

/// Values of f and g agree on the grid {-2..2}^3, which pins down any
/// polynomial of degree at most 4 in each variable.
inline bool agree_on_grid(const std::function<Rational(std::int64_t, std::int64_t, std::int64_t)>& f,
                          const std::function<Rational(std::int64_t, std::int64_t, std::int64_t)>& g) {
  for (std::int64_t k = -2; k <= 2; ++k) {
    for (std::int64_t n = -2; n <= 2; ++n) {
      for (std::int64_t m = -2; m <= 2; ++m) {
        if (f(k, n, m) != g(k, n, m)) return false;
      }
    }
  }
  return true;
}

inline Bindings knm_bindings(std::int64_t k, std::int64_t n, std::int64_t m) {
  return {{"k", Rational(k)}, {"n", Rational(n)}, {"m", Rational(m)}};
}

inline std::function<Rational(std::int64_t, std::int64_t, std::int64_t)> as_function(const CubicPoly& p) {
  return [p](std::int64_t k, std::int64_t n, std::int64_t m) { return Rational(p.eval(Triple{k, n, m})); };
}

inline std::function<Rational(std::int64_t, std::int64_t, std::int64_t)> knm_minus(const std::string& rhs) {
  return [rhs](std::int64_t k, std::int64_t n, std::int64_t m) {
    return Rational(k * n * m) - evaluate(rhs, knm_bindings(k, n, m));
  };
}

template <class Check>
TableReport verify_per_pattern(const GoldenTable& table, Check check) {
  TableReport report{table.name, table.rows.size(), {}, {}};
  collect_errata(table, report);
  std::set<Pattern> seen;
  for (const auto& row : table.rows) {
    const auto pat = pattern_from_name(row["pattern"]);
    if (!pat) {
      report.diffs.push_back({TableDiff::Kind::Extra, row["pattern"], "unknown pattern"});
      continue;
    }
    if (!seen.insert(*pat).second) {
      report.diffs.push_back({TableDiff::Kind::Extra, row["pattern"], "duplicate row"});
      continue;
    }
    const std::string problem = check(*pat, row);
    if (!problem.empty()) report.diffs.push_back({TableDiff::Kind::Mismatch, row["pattern"], problem});
  }
  for (Pattern p : kAllPatterns) {
    if (seen.count(p) == 0) report.diffs.push_back({TableDiff::Kind::Missing, std::string(pattern_name(p)), ""});
  }
  return report;
}

/// On-cubic triples in the box with a unique point and nonzero parameters.
inline std::vector<std::pair<Triple, VogelPoint>> solution_points(Pattern p, std::int64_t bound) {
  std::vector<std::pair<Triple, VogelPoint>> out;
  const CubicPoly cubic = diophantine_cubic(p);
  for (std::int64_t k = -bound; k <= bound; ++k) {
    for (const Triple& t : cubic_slice(cubic, k, bound)) {
      const auto r = solve_linear(p, t);
      const auto* u = std::get_if<UniquePoint>(&r);
      if (u != nullptr && !u->vogel().has_zero_coordinate()) out.emplace_back(t, u->vogel());
    }
  }
  return out;
}

/// A dimension polynomial only has to be right on the solution set, so both
/// the golden and the computed one are checked against the universal
/// dimension there.
inline TableReport verify_dimensions(const GoldenTable& table) {
  return verify_per_pattern(table, [](Pattern p, const GoldenRow& row) -> std::string {
    const std::string expr = row["dim"];
    const CubicPoly computed = dim_polynomial(p);
    for (const auto& [t, point] : solution_points(p, 12)) {
      const Rational dim = dimension(point);
      const Rational golden = evaluate(expr, knm_bindings(t.k, t.n, t.m));
      if (golden != dim) {
        return "'" + expr + "' gives " + to_string(golden) + " at " + t.to_string() + ", dimension is " +
               to_string(dim);
      }
      if (Rational(computed.eval(t)) != dim) {
        return "computed " + computed.to_string() + " is off at " + t.to_string();
      }
    }
    return {};
  });
}

inline TableReport verify_diophantine(const GoldenTable& table) {
  return verify_per_pattern(table, [](Pattern p, const GoldenRow& row) -> std::string {
    std::vector<std::string> problems;
    const NormalizedCubic nc = normalized_cubic(p);
    if (parse_triple(row) != nc.shift) {
      problems.push_back("shift " + row["k"] + "," + row["n"] + "," + row["m"] + " vs " + nc.shift.to_string());
    }
    if (!agree_on_grid(knm_minus(row["alpha"]), as_function(diophantine_cubic(p)))) {
      problems.push_back("initial knm=" + row["alpha"] + " vs knm=" + diophantine_cubic(p).rhs_string());
    }
    if (!agree_on_grid(knm_minus(row["beta"]), as_function(nc.normalized))) {
      problems.push_back("normalized knm=" + row["beta"] + " vs knm=" + nc.normalized.rhs_string());
    }
    return join(problems, "; ");
  });
}

inline std::optional<Slot> slot_from_name(const std::string& name) {
  if (name == "alpha") return Slot::Alpha;
  if (name == "beta") return Slot::Beta;
  if (name == "gamma") return Slot::Gamma;
  return std::nullopt;
}

/// Rows are keyed by the divisor sigma (label column); columns are the
/// numerator parameter kappa.
inline TableReport verify_rmatrix(const GoldenTable& table, const std::vector<std::int64_t>& samples,
                                  const std::function<VogelPoint(std::int64_t)>& point_at) {
  TableReport report{table.name, table.rows.size(), {}, {}};
  collect_errata(table, report);
  std::set<Slot> seen;
  static const std::array<std::string, 3> kCols = {"alpha", "beta", "gamma"};
  for (const auto& row : table.rows) {
    const auto sigma = slot_from_name(row["label"]);
    if (!sigma || !seen.insert(*sigma).second) {
      report.diffs.push_back({TableDiff::Kind::Extra, row["label"], "unexpected row"});
      continue;
    }
    std::vector<std::string> problems;
    for (std::int64_t v : samples) {
      const RMatrix r = r_matrix(point_at(v));
      for (std::size_t kappa = 0; kappa < 3; ++kappa) {
        const Rational printed = evaluate(row[kCols[kappa]], {{"N", Rational(v)}});
        const Rational& computed = r.row(*sigma)[kappa];
        if (printed != computed) {
          problems.push_back(kCols[kappa] + " " + row[kCols[kappa]] + " = " + to_string(printed) + " vs " +
                             to_string(computed) + (samples.size() > 1 ? " at N=" + std::to_string(v) : ""));
        }
      }
    }
    if (!problems.empty()) report.diffs.push_back({TableDiff::Kind::Mismatch, row["label"], join(problems, "; ")});
  }
  for (std::size_t s = 0; s < 3; ++s) {
    if (seen.count(static_cast<Slot>(s)) == 0) {
      report.diffs.push_back({TableDiff::Kind::Missing, kCols[s], ""});
    }
  }
  return report;
}

/// Checks the printed dim and rank of a series row at a regular point.
inline void check_dim_rank(const VogelPoint& p, const std::string& dim_expr, const std::string& rank_expr,
                           const Bindings& vars, std::vector<std::string>& problems, const std::string& where) {
  const Rational dim = dimension(p);
  const Rational printed_dim = evaluate(dim_expr, vars);
  if (dim != printed_dim) {
    problems.push_back("dim " + to_string(printed_dim) + " vs " + to_string(dim) + where);
  }
  const CharacterResult ch = character(p);
  if (!is_regular(ch)) {
    problems.push_back("character " + case_label(ch) + where);
    return;
  }
  const Rational printed_rank = evaluate(rank_expr, vars);
  if (Rational(rank(ch)) != printed_rank) {
    problems.push_back("rank " + to_string(printed_rank) + " vs " + rank(ch).str() + where);
  }
}

inline bool equation_holds_up_to_permutation(const std::string& eq, const VogelPoint& p) {
  for (const auto& o : permutations3()) {
    const VogelPoint q = p.permuted(o);
    const Bindings vars = {{"alpha", q.alpha()}, {"beta", q.beta()}, {"gamma", q.gamma()}};
    if (equation_residual(eq, vars) == 0) return true;
  }
  return false;
}

/// A series row either has one free variable (sampled over a window) or a
/// fixed triple resolving to a whole line of points.
inline std::vector<std::string> check_series_row(const GoldenRow& row, Pattern pat,
                                                 std::set<const SeriesFamily*>& covered) {
  std::vector<std::string> problems;
  const bool line_row = is_equation(row["alpha"]);
  const std::set<std::string> free = {"N", "k", "n", "m"};
  std::set<std::string> names;
  std::vector<std::string> exprs = {row["k"], row["n"], row["m"], row["dim"], row["rank"]};
  if (!line_row) exprs.insert(exprs.end(), {row["alpha"], row["beta"], row["gamma"]});
  for (const auto& e : exprs) {
    for (const auto& v : referenced_names(e, free)) names.insert(v);
  }
  if (names.size() > 1) return {"more than one free variable"};
  const std::string var = names.empty() ? std::string() : *names.begin();
  const CubicPoly cubic = diophantine_cubic(pat);

  std::size_t checked = 0;
  // Positive parameters only: the printed rank formulas (N-1, k+2, ...)
  // describe the algebras, not their negative-N continuations.
  const std::int64_t lo = var.empty() ? 0 : 1;
  const std::int64_t hi = var.empty() ? 0 : 12;
  for (std::int64_t v = lo; v <= hi; ++v) {
    Bindings vars;
    if (!var.empty()) vars.emplace(var, Rational(v));
    const std::string where = var.empty() ? "" : " at " + var + "=" + std::to_string(v);
    std::array<std::int64_t, 3> t{};
    bool integral = true;
    for (std::size_t i = 0; i < 3; ++i) {
      const Rational x = evaluate(row[std::array<std::string, 3>{"k", "n", "m"}[i]], vars);
      if (!is_integer(x)) {
        integral = false;
        break;
      }
      t[i] = to_int64(numerator_of(x));
    }
    if (!integral) continue;
    const Triple triple{t[0], t[1], t[2]};
    if (cubic.eval(triple) != 0) {
      problems.push_back("triple " + triple.to_string() + " is off the cubic" + where);
      continue;
    }
    const SeriesFamily* family = match_series(pat, triple);
    if (family == nullptr) {
      problems.push_back("triple " + triple.to_string() + " is not in a catalogued family" + where);
      continue;
    }
    covered.insert(family);
    const LinearSolveResult resolved = solve_linear(pat, triple);
    if (line_row) {
      const auto* fam = std::get_if<FamilyLine>(&resolved);
      if (fam == nullptr) {
        problems.push_back("expected a line of solutions" + where);
        continue;
      }
      for (std::int64_t j = 1; j <= 6; ++j) {
        IntTriple q;
        for (std::size_t i = 0; i < 3; ++i) q[i] = fam->first[i] + j * fam->second[i];
        const VogelPoint p = VogelPoint::of(q[0], q[1], q[2]);
        if (!equation_holds_up_to_permutation(row["alpha"], p)) {
          problems.push_back("point " + p.to_string() + " violates " + row["alpha"]);
        }
        if (p.has_zero_coordinate()) continue;
        check_dim_rank(p, row["dim"], row["rank"], vars, problems, " at " + p.to_string());
        ++checked;
      }
      continue;
    }
    const auto* unique = std::get_if<UniquePoint>(&resolved);
    if (unique == nullptr) continue;
    const std::array<Rational, 3> printed = {evaluate(row["alpha"], vars), evaluate(row["beta"], vars),
                                             evaluate(row["gamma"], vars)};
    if (printed[0] == 0 || printed[1] == 0 || printed[2] == 0) continue;
    const VogelPoint expected(printed[0], printed[1], printed[2]);
    const VogelPoint p = unique->vogel();
    if (canonicalize(expected) != canonicalize(p)) {
      problems.push_back("point " + expected.to_string() + " vs computed " + p.to_string() + where);
      continue;
    }
    check_dim_rank(p, row["dim"], row["rank"], vars, problems, where);
    ++checked;
  }
  if (checked < 3) problems.push_back("only " + std::to_string(checked) + " regular sample points");
  return problems;
}

inline TableReport verify_series(const GoldenTable& table) {
  TableReport report{table.name, table.rows.size(), {}, {}};
  collect_errata(table, report);
  std::set<const SeriesFamily*> covered;
  for (const auto& row : table.rows) {
    const std::string key = row["label"] + " " + row["pattern"] + " (" + row["k"] + "," + row["n"] + "," +
                            row["m"] + ")";
    const auto pat = pattern_from_name(row["pattern"]);
    if (!pat) {
      report.diffs.push_back({TableDiff::Kind::Extra, key, "unknown pattern"});
      continue;
    }
    const auto problems = check_series_row(row, *pat, covered);
    if (!problems.empty()) report.diffs.push_back({TableDiff::Kind::Mismatch, key, join(problems, "; ")});
  }
  // Every catalogued non-0/0 family must be reached by some row. Members are
  // mapped through match_series so symmetric duplicates count once.
  for (const auto& f : series_catalog()) {
    if (f.name == "0/0") continue;
    const SeriesFamily* effective = match_series(f.pattern, f.triple.at(5));
    if (covered.count(effective) == 0) {
      report.diffs.push_back({TableDiff::Kind::Missing, f.name + " " + std::string(pattern_name(f.pattern)),
                              "catalogued family without a table row"});
    }
  }
  return report;
}

}  // namespace detail

/// Diffs all thirteen tables. `results` must come from enumerate_all (or an
/// equivalent run covering all seven patterns).
inline VerifyReport verify_tables(const std::map<std::string, GoldenTable>& golden,
                                  const std::map<Pattern, std::vector<Solution>>& results) {
  VerifyReport report;
  const auto table = [&](const std::string& name) -> const GoldenTable& {
    const auto it = golden.find(name);
    if (it == golden.end()) throw MissingAsset("golden table '" + name + "' not loaded");
    return it->second;
  };
  for (Pattern p : kAllPatterns) {
    const std::string name = "isolated-" + std::string(pattern_name(p));
    const auto it = results.find(p);
    static const std::vector<Solution> kNone;
    report.tables.push_back(detail::verify_isolated(table(name), p, it == results.end() ? kNone : it->second));
  }
  report.tables.push_back(detail::verify_series(table("series")));
  report.tables.push_back(detail::verify_physical(table("physical"), results));
  report.tables.push_back(detail::verify_dimensions(table("dimensions")));
  report.tables.push_back(detail::verify_diophantine(table("diophantine")));
  report.tables.push_back(detail::verify_rmatrix(table("rmatrix-su"), {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12},
                                                 [](std::int64_t n) { return su_point(n); }));
  report.tables.push_back(detail::verify_rmatrix(table("rmatrix-g2"), {0}, [](std::int64_t) {
    for (const auto& e : exceptional_points()) {
      if (e.kind == AlgebraKind::G2) return e.point;
    }
    throw InternalError("G2 missing from the exceptional points");
  }));
  // Report order follows golden_table_names().
  std::map<std::string, TableReport> by_name;
  for (auto& t : report.tables) by_name.emplace(t.name, std::move(t));
  report.tables.clear();
  for (const auto& name : golden_table_names()) report.tables.push_back(std::move(by_name.at(name)));
  return report;
}

}  // namespace vogel
