// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria (0 when all pass).
//
// Tolerances: exact arithmetic everywhere except the numeric sinh oracle
// (1e-9 relative, 10 samples per solution).

#include "vogel/atlas/expression.hpp"
#include "vogel/atlas/golden.hpp"
#include "vogel/atlas/verify.hpp"
#include "vogel/character/character.hpp"
#include "vogel/core/identify.hpp"
#include "vogel/solver/solver.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <iostream>
#include <random>
#include <sstream>

using namespace vogel;

namespace {

constexpr double kSinhTolerance = 1e-9;
constexpr int kSinhSamples = 10;
constexpr std::int64_t kBound = 60;

int failures = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  " << id << ". " << title;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << s << " s";
  return out.str();
}

const std::map<Pattern, std::vector<Solution>>& solutions() {
  static const auto all = enumerate_all(kBound, 1);
  return all;
}

const std::map<std::string, GoldenTable>& golden() {
  static const auto tables = load_golden(VOGEL_ATLAS_DEFAULT_DATA);
  return tables;
}

/// The printed cell, ignoring any erratum recorded for it.
std::string printed(const GoldenRow& row, const std::string& field) {
  for (const auto& e : row.errata) {
    if (e.field == field) return e.printed;
  }
  return row[field];
}

/// Multilinear polynomial through the values of f on {0,1}^3 (Moebius
/// inversion over subsets of {k,n,m}).
CubicPoly interpolate_multilinear(const std::function<Rational(int, int, int)>& f) {
  CubicPoly p;
  for (Monomial mono = 0; mono < 8; ++mono) {
    Rational c = 0;
    for (Monomial sub = 0; sub < 8; ++sub) {
      if ((sub & ~mono) != 0) continue;
      const int sign = (std::popcount(static_cast<unsigned>(mono ^ sub)) % 2 == 0) ? 1 : -1;
      c += sign * f((sub & kVarK) ? 1 : 0, (sub & kVarN) ? 1 : 0, (sub & kVarM) ? 1 : 0);
    }
    if (denominator_of(c) != 1) throw Error("printed form has a non-integer coefficient");
    p.set_coefficient(mono, numerator_of(c));
  }
  return p;
}

/// knm - rhs as a CubicPoly, after checking the printed rhs really is
/// multilinear (agreement with the interpolant on a wider grid).
CubicPoly cubic_from_printed(const std::string& rhs) {
  const auto f = [&](int k, int n, int m) {
    const Bindings b = {{"k", k}, {"n", n}, {"m", m}};
    return Rational(k * n * m) - evaluate(rhs, b);
  };
  const CubicPoly p = interpolate_multilinear(f);
  for (int k = -3; k <= 3; ++k) {
    for (int n = -3; n <= 3; ++n) {
      for (int m = -3; m <= 3; ++m) {
        if (Rational(p.eval(Triple{k, n, m})) != f(k, n, m)) throw Error("printed form is not multilinear");
      }
    }
  }
  return p;
}

void criterion1() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> problems;
  const auto& table = golden().at("diophantine");
  std::set<Pattern> seen;
  for (const auto& row : table.rows) {
    const auto pat = pattern_from_name(row["pattern"]);
    if (!pat) {
      problems.push_back("unknown pattern " + row["pattern"]);
      continue;
    }
    seen.insert(*pat);
    const NormalizedCubic nc = normalized_cubic(*pat);
    if (!cubic_equal(diophantine_cubic(*pat), cubic_from_printed(row["alpha"]))) {
      problems.push_back(row["pattern"] + " initial");
    }
    if (!cubic_equal(diophantine_cubic(*pat).shifted(nc.shift), cubic_from_printed(row["beta"]))) {
      problems.push_back(row["pattern"] + " normalized");
    }
    const Triple printed_shift{std::stoll(row["k"]), std::stoll(row["n"]), std::stoll(row["m"])};
    if (printed_shift != nc.shift) problems.push_back(row["pattern"] + " shift");
  }
  const double elapsed = seconds_since(start);
  const bool pass = problems.empty() && seen.size() == 7 && elapsed < 1.0;
  std::string detail = std::to_string(seen.size()) + " patterns, symbolic equality of initial and shifted forms, " +
                       fmt_seconds(elapsed);
  for (const auto& p : problems) detail += "; mismatch: " + p;
  report(1, "Diophantine equations reproduced", pass, detail);
}

void criterion2() {
  const auto start = std::chrono::steady_clock::now();
  const auto fresh = enumerate_all(kBound, 1);
  const VerifyReport rep = verify_tables(golden(), fresh);
  const double elapsed = seconds_since(start);
  const auto iso = [&](Pattern p) { return isolated_only(fresh.at(p)).size(); };
  const bool counts = iso(Pattern::P4abg) == 15 && iso(Pattern::P7bga) == 9 && iso(Pattern::P1aaa) == 21;
  std::size_t errata = 0;
  for (const auto& t : rep.tables) errata += t.errata.size();
  std::string detail = std::to_string(rep.tables.size()) + " tables, 4abg/7bga/1aaa isolated = " +
                       std::to_string(iso(Pattern::P4abg)) + "/" + std::to_string(iso(Pattern::P7bga)) + "/" +
                       std::to_string(iso(Pattern::P1aaa)) + ", " + std::to_string(errata) +
                       " documented errata applied, " + fmt_seconds(elapsed) + " single-threaded";
  if (!rep.ok()) detail += "\n" + rep.render();
  report(2, "Tables reproduced at bound 60", rep.ok() && counts && elapsed < 120.0, detail);
}

void criterion3() {
  std::map<CanonicalPoint, std::set<std::string>> unphysical;
  std::set<Pattern> with_y1;
  const CanonicalPoint y1 = canonicalize(VogelPoint(1, 1, 1));
  for (const auto& [p, list] : solutions()) {
    for (const auto& s : isolated_only(list)) {
      if (is_unphysical(s.vogel())) unphysical[*s.canonical].insert(std::string(pattern_name(p)));
      if (*s.canonical == y1) with_y1.insert(p);
    }
  }
  const bool pass = unphysical.size() == 47 && with_y1.size() == 7;
  std::string detail = std::to_string(unphysical.size()) + " distinct unphysical isolated points (target 47); (1,1,1) in " +
                       std::to_string(with_y1.size()) + " of 7 patterns";
  if (unphysical.size() != 47) {
    // Two distinct points share one name in the printed tables.
    const CanonicalPoint a = canonicalize(VogelPoint(-5, -4, -3));
    const CanonicalPoint b = canonicalize(VogelPoint(-8, -6, -5));
    if (unphysical.count(a) && unphysical.count(b)) {
      detail += "; the printed tables give one name (Y6) to two different points, (-5,-4,-3) with dim " +
                to_string(dimension(VogelPoint(-5, -4, -3))) + " and (-8,-6,-5) with dim " +
                to_string(dimension(VogelPoint(-8, -6, -5))) + ", so 47 names cover 48 points";
    }
  }
  report(3, "Global counts", pass, detail);
}

VogelPoint exceptional(AlgebraKind kind) {
  for (const auto& e : exceptional_points()) {
    if (e.kind == kind) return e.point;
  }
  throw Error("no such exceptional point");
}

struct SpotValue {
  std::string name;
  VogelPoint point;
  int dim;
  int rank;
};

void criterion4() {
  // Golden rows by (pattern, orbit representative).
  std::map<std::pair<Pattern, Triple>, const GoldenRow*> rows;
  std::map<Pattern, const GoldenRow*> dim_rows;
  for (Pattern p : kAllPatterns) {
    for (const auto& row : golden().at("isolated-" + std::string(pattern_name(p))).rows) {
      const Triple t{std::stoll(row["k"]), std::stoll(row["n"]), std::stoll(row["m"])};
      rows[{p, orbit_representative(p, t)}] = &row;
    }
  }
  for (const auto& row : golden().at("dimensions").rows) dim_rows[*pattern_from_name(row["pattern"])] = &row;

  std::size_t checked = 0;
  std::map<Pattern, std::size_t> printed_poly_off;
  std::vector<std::string> other;
  std::vector<std::string> rank_off;
  bool corrected_ok = true;
  for (const auto& [p, list] : solutions()) {
    const GoldenRow& drow = *dim_rows.at(p);
    for (const auto& s : isolated_only(list)) {
      ++checked;
      const VogelPoint v = s.vogel();
      const Rational dim = dimension(v);
      const CharacterResult ch = character(v);
      const Bindings b = {{"k", s.triple.k}, {"n", s.triple.n}, {"m", s.triple.m}};
      if (Rational(character_at_one(ch)) != dim) other.push_back("character(1) at " + s.triple.to_string());
      if (evaluate(printed(drow, "dim"), b) != dim) ++printed_poly_off[p];
      if (evaluate(drow["dim"], b) != dim) corrected_ok = false;
      const auto it = rows.find({p, s.triple});
      if (it == rows.end()) {
        other.push_back("no golden row for " + std::string(pattern_name(p)) + " " + s.triple.to_string());
        continue;
      }
      const GoldenRow& row = *it->second;
      const Integer r = rank(ch);
      if (evaluate(printed(row, "rank")) != Rational(r)) {
        rank_off.push_back(std::string(pattern_name(p)) + " " + row["k"] + "," + row["n"] + "," + row["m"] +
                           " printed " + printed(row, "rank") + " vs constant term " + r.str());
      }
      if (evaluate(row["rank"]) != Rational(r)) corrected_ok = false;
    }
  }

  const std::vector<SpotValue> spots = {
      {"E8", VogelPoint(-2, 12, 20), 248, 8},     {"E7", VogelPoint(-2, 8, 12), 133, 7},
      {"E7half", exceptional(AlgebraKind::E7half), 190, 8}, {"X1", VogelPoint(1, -4, -7), 156, 8},
      {"X2", VogelPoint(1, -3, -5), 99, 7},       {"Y1", VogelPoint(1, 1, 1), -125, -19}};
  for (const auto& sp : spots) {
    const CharacterResult ch = character(sp.point);
    if (dimension(sp.point) != sp.dim || character_at_one(ch) != sp.dim || rank(ch) != sp.rank) {
      other.push_back("spot value " + sp.name);
    }
  }

  const bool pass = printed_poly_off.empty() && rank_off.empty() && other.empty();
  std::string detail = std::to_string(checked) + " isolated solutions, 6 spot values";
  if (other.empty()) detail += "; dimension formula = character at z=1 everywhere; spot values exact";
  for (const auto& o : other) detail += "; " + o;
  for (const auto& [p, n] : printed_poly_off) {
    detail += "; printed " + std::string(pattern_name(p)) + " dimension polynomial '" +
              printed(*dim_rows.at(p), "dim") + "' wrong at " + std::to_string(n) + " solutions";
  }
  for (const auto& r : rank_off) detail += "; rank " + r;
  if (!pass && corrected_ok && other.empty()) {
    detail += "; with the corrected entries recorded in the golden notes every check holds";
  }
  report(4, "Cross-formula consistency", pass, detail);
}

using cld = std::complex<long double>;

cld sinh_oracle(const IntTriple& v, cld x) {
  const long double t = static_cast<long double>(to_int64(v[0] + v[1] + v[2]));
  cld f = 1.0L;
  for (const auto& kappa : v) {
    const long double k = static_cast<long double>(to_int64(kappa));
    f *= std::sinh(x * (k - 2 * t) / 4.0L) / std::sinh(x * k / 4.0L);
  }
  return f;
}

cld laurent_at(const IntegerLaurent& p, cld x) {
  cld sum = 0.0L;
  for (const auto& [e, c] : p.terms()) {
    sum += static_cast<long double>(to_int64(c)) * std::exp(x * static_cast<long double>(e) / 4.0L);
  }
  return sum;
}

void criterion5() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<long double> part(-1.0L, 1.0L);
  std::size_t total = 0, regular_or_zero = 0, palindromic = 0, numeric_ok = 0, regular = 0;
  long double worst = 0;
  for (const auto& [p, list] : solutions()) {
    for (const auto& s : isolated_only(list)) {
      ++total;
      const CharacterResult ch = character(s.vogel());
      const auto* r = std::get_if<RegularPoly>(&ch);
      const bool zero = std::holds_alternative<IdenticallyZero>(ch);
      if (r == nullptr && !zero) continue;
      ++regular_or_zero;
      const IntTriple v = primitive_integers(s.vogel());
      bool ok = true;
      for (int i = 0; i < kSinhSamples; ++i) {
        const cld x(part(rng), part(rng));
        const cld expected = sinh_oracle(v, x);
        const cld got = r != nullptr ? laurent_at(r->poly, x) : cld(0);
        const long double err = std::abs(got - expected) / std::max(1.0L, std::abs(expected));
        worst = std::max(worst, err);
        ok = ok && err <= kSinhTolerance;
      }
      numeric_ok += ok ? 1 : 0;
      if (r != nullptr) {
        ++regular;
        palindromic += r->poly.is_palindromic() ? 1 : 0;
      }
    }
  }
  std::ostringstream detail;
  detail << regular_or_zero << "/" << total << " regular or identically zero, " << palindromic << "/" << regular
         << " palindromic, " << numeric_ok << "/" << total << " within " << kSinhTolerance
         << " of the sinh product (worst " << static_cast<double>(worst) << ")";
  report(5, "Regularity", regular_or_zero == total && palindromic == regular && numeric_ok == total,
         detail.str());
}

void criterion6() {
  const std::vector<SpotValue> rows = {
      {"SU(5)", VogelPoint(-2, 2, 5), 24, 4},           {"SO(7)", so_point(7), 21, 3},
      {"Sp(6)", VogelPoint(-2, 1, 5), 21, 3},           {"SO(8)", so_point(8), 28, 4},
      {"G2", VogelPoint(-2, Rational(10, 3), Rational(8, 3)), 14, 2},
      {"F4", VogelPoint(-2, 5, 6), 52, 4},              {"E6", VogelPoint(-2, 6, 8), 78, 6},
      {"E7", VogelPoint(-2, 8, 12), 133, 7},            {"E8", VogelPoint(-2, 12, 20), 248, 8}};
  std::vector<std::string> bad;
  for (const auto& r : rows) {
    const CharacterResult ch = character(r.point);
    const bool ok = dimension(r.point) == r.dim && is_regular(ch) && character_at_one(ch) == r.dim &&
                    rank(ch) == r.rank;
    if (!ok) bad.push_back(r.name);
  }
  std::string detail = std::to_string(rows.size() - bad.size()) + "/" + std::to_string(rows.size()) +
                       " algebra points with expected dim and rank";
  for (const auto& b : bad) detail += "; mismatch " + b;
  report(6, "Classical sanity", bad.empty(), detail);
}

void criterion7() {
  std::size_t integral = 0, fractional = 0, undefined = 0;
  for (const auto& [p, list] : solutions()) {
    for (const auto& s : isolated_only(list)) {
      for (Slot slot : {Slot::Alpha, Slot::Beta, Slot::Gamma}) {
        try {
          (denominator_of(dim_y2(s.vogel(), slot)) == 1 ? integral : fractional) += 1;
        } catch (const DenominatorZero&) {
          ++undefined;
        }
      }
    }
  }
  const auto values = [](const VogelPoint& p) {
    return std::array<Rational, 3>{dim_y2(p, Slot::Alpha), dim_y2(p, Slot::Beta), dim_y2(p, Slot::Gamma)};
  };
  const bool x2 = values(VogelPoint(1, -3, -5)) == std::array<Rational, 3>{3927, 77, 945} ||
                  values(VogelPoint(1, -5, -3)) == std::array<Rational, 3>{3927, 77, 945};
  const bool x1 = values(VogelPoint(1, -4, -7)) == std::array<Rational, 3>{10166, 90, 1989} ||
                  values(VogelPoint(1, -7, -4)) == std::array<Rational, 3>{10166, 90, 1989};
  const std::string detail = std::to_string(integral) + " integral, " + std::to_string(fractional) +
                             " fractional, " + std::to_string(undefined) +
                             " undefined (zero denominator) slot values; X2 (3927,77,945) " + (x2 ? "ok" : "wrong") +
                             "; X1 (10166,90,1989) " + (x1 ? "ok" : "wrong");
  report(7, "Y2 dimensions", fractional == 0 && x1 && x2, detail);
}

void criterion8() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 12);
  int checked = 0, good = 0;
  while (checked < 20) {
    const int an = num(rng), bn = num(rng);
    if (an == 0 || bn == 0) continue;
    const Rational a(an, den(rng));
    const Rational b(bn, den(rng));
    const Rational c = -2 * a - b;
    if (c == 0) continue;
    ++checked;
    const VogelPoint p(a, b, c);
    const CharacterResult ch = character(p);
    const auto* r = std::get_if<RegularPoly>(&ch);
    if (r == nullptr || r->poly.term_count() != 3 || dimension(p) != 3) continue;
    bool units = true;
    for (const auto& [e, coeff] : r->poly.terms()) units = units && coeff == 1;
    good += units ? 1 : 0;
  }
  report(8, "3d-line identity", good == 20,
         std::to_string(good) + "/20 random rational points give three unit terms and dim 3");
}

void criterion9() {
  std::vector<std::pair<std::string, VogelPoint>> points;
  for (std::int64_t n : {2, 3, 5, 8, 13}) points.emplace_back("SU(" + std::to_string(n) + ")", su_point(n));
  for (std::int64_t n : {5, 7, 8, 10, 13}) points.emplace_back("SO(" + std::to_string(n) + ")", so_point(n));
  for (std::int64_t r : {1, 2, 3, 5, 8}) points.emplace_back("Sp(" + std::to_string(2 * r) + ")", sp_point(r));
  for (const auto& e : exceptional_points()) {
    if (e.kind == AlgebraKind::E7half || e.kind == AlgebraKind::X1 || e.kind == AlgebraKind::X2) continue;
    points.emplace_back(e.name, e.point);
  }
  std::vector<std::string> bad;
  for (const auto& [name, p] : points) {
    const RMatrix r = r_matrix(p);
    for (Slot s : {Slot::Alpha, Slot::Beta, Slot::Gamma}) {
      if (!r.row_has_integer(s)) bad.push_back(name + " row " + slot_name(s));
    }
  }
  std::string detail = std::to_string(points.size()) + " algebra points, 3 rows each";
  for (const auto& b : bad) detail += "; no integer in " + b;
  report(9, "R-matrix rows", bad.empty(), detail);
}

void criterion10() {
  const auto list = enumerate(Pattern::P3aag, kBound, false);
  std::map<Triple, const Solution*> by_triple;
  for (const auto& s : list) by_triple[s.triple] = &s;
  std::size_t mapped = 0, outside = 0, missing = 0, changed = 0;
  for (const auto& s : list) {
    const Triple u = aag_exchange(s.triple);
    if (std::abs(to_int64(Integer(u.k))) > kBound || std::abs(to_int64(Integer(u.n))) > kBound) {
      ++outside;
      continue;
    }
    const auto it = by_triple.find(u);
    if (it == by_triple.end()) {
      ++missing;
      continue;
    }
    ++mapped;
    // Image of an isolated point is isolated; the point itself may change.
    if ((s.classification == Classification::Isolated) != (it->second->classification == Classification::Isolated)) {
      ++changed;
    }
  }
  const auto label_at = [&](const Triple& t) {
    const auto it = by_triple.find(t);
    return it == by_triple.end() ? std::string("absent") : it->second->label.to_string();
  };
  struct Pair {
    Triple from;
    std::string a, b;
  };
  const std::vector<Pair> pairs = {{{2, -20, 4}, "E8", "X1"}, {{4, -24, 2}, "E8", "E7half"}};
  bool pairs_ok = true;
  std::string pair_text;
  for (const auto& pr : pairs) {
    const Triple to = aag_exchange(pr.from);
    // The exchange is an involution.
    pairs_ok = pairs_ok && label_at(pr.from) == pr.a && label_at(to) == pr.b && aag_exchange(to) == pr.from;
    pair_text += "; " + pr.a + " " + pr.from.to_string() + " <-> " + label_at(to) + " " + to.to_string();
  }
  const bool pass = missing == 0 && changed == 0 && pairs_ok && mapped > 0;
  report(10, "3aag exchange symmetry", pass,
         std::to_string(mapped) + " of " + std::to_string(list.size()) + " solutions mapped onto solutions, " +
             std::to_string(missing) + " off the set, " + std::to_string(outside) + " leave the box" + pair_text);
}

}  // namespace

int main() {
  const std::vector<void (*)()> criteria = {criterion1, criterion2, criterion3, criterion4,  criterion5,
                                            criterion6, criterion7, criterion8, criterion9, criterion10};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), "criterion", false, std::string("threw: ") + e.what());
    }
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures;
}
