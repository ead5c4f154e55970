/**
 * @file solver.hpp
 * @brief Bounded enumeration of each pattern's cubic and classification of
 * the integer solutions.
 *
 * The cubic is linear in m, so each (k, n) slice has at most one solution
 * unless both the m-coefficient and the constant vanish, in which case every
 * m in range is a solution.
 */
#pragma once

#include "vogel/character/character.hpp"
#include "vogel/core/identify.hpp"
#include "vogel/core/lines.hpp"
#include "vogel/patterns/linear_solve.hpp"
#include "vogel/solver/series.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <vector>

namespace vogel {

/// Declaration order is the output sort order.
enum class Classification { Isolated, Series, DegenerateFamily, ZeroDim, Indeterminate00, SuspectedSeries };

inline std::string classification_name(Classification c) {
  switch (c) {
    case Classification::Isolated: return "Isolated";
    case Classification::Series: return "Series";
    case Classification::DegenerateFamily: return "DegenerateFamily";
    case Classification::ZeroDim: return "ZeroDim";
    case Classification::Indeterminate00: return "Indeterminate00";
    case Classification::SuspectedSeries: return "SuspectedSeries";
  }
  return "?";
}

struct ClassifyResult {
  Classification kind = Classification::Isolated;
  const SeriesFamily* family = nullptr;
};

struct Solution {
  Pattern pattern = Pattern::P4abg;
  Triple triple;
  LinearSolveResult resolved;
  Classification classification = Classification::Isolated;
  std::string family;  ///< series name when classification is Series

  // Populated when resolved is a UniquePoint.
  std::optional<IntTriple> point;
  std::optional<CanonicalPoint> canonical;
  std::optional<Rational> dim;     ///< when all coordinates are nonzero
  std::optional<Integer> rank;     ///< when the character is regular
  std::string character_case;      ///< Regular, IdenticallyZero, Singular, Indeterminate00
  AlgebraLabel label;
  std::set<LineId> lines;

  VogelPoint vogel() const { return VogelPoint::of((*point)[0], (*point)[1], (*point)[2]); }

  /// "Series(SU(N))" for series members, the bare kind otherwise.
  std::string classification_text() const {
    if (classification == Classification::Series) return "Series(" + family + ")";
    return classification_name(classification);
  }
};

namespace detail {

/// Cubic with machine-word coefficients for the hot loops; all values stay
/// far below 2^63 for the bounds used here.
struct FastCubic {
  std::array<std::int64_t, 8> c{};

  explicit FastCubic(const CubicPoly& p) {
    for (Monomial mono = 0; mono < 8; ++mono) c[mono] = to_int64(p.coefficient(mono));
  }

  std::int64_t eval(std::int64_t k, std::int64_t n, std::int64_t m) const {
    return c[0] + c[kVarK] * k + c[kVarN] * n + c[kVarM] * m + c[kVarK | kVarN] * k * n +
           c[kVarK | kVarM] * k * m + c[kVarN | kVarM] * n * m + c[kKNM] * k * n * m;
  }
};

inline std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

inline bool within(const Triple& t, std::int64_t bound) {
  return abs64(t.k) <= bound && abs64(t.n) <= bound && abs64(t.m) <= bound;
}

/// Whether t lies on a lattice line contained in the cubic with at least
/// five points inside the bound. Directions are primitive with entries in
/// [-4, 4]: a cubic restricted to a line vanishing at four points vanishes
/// identically.
inline bool on_long_cubic_line(const FastCubic& cubic, const Triple& t, std::int64_t bound) {
  constexpr std::int64_t kMaxStep = 4;
  for (std::int64_t a = 0; a <= kMaxStep; ++a) {
    for (std::int64_t b = -kMaxStep; b <= kMaxStep; ++b) {
      for (std::int64_t c = -kMaxStep; c <= kMaxStep; ++c) {
        if (a == 0 && (b < 0 || (b == 0 && c <= 0))) continue;
        if (std::gcd(std::gcd(a, abs64(b)), abs64(c)) != 1) continue;
        bool on_cubic = true;
        for (std::int64_t j = 1; j <= 3 && on_cubic; ++j) {
          on_cubic = cubic.eval(t.k + j * a, t.n + j * b, t.m + j * c) == 0;
        }
        if (!on_cubic) continue;
        int inside = 0;
        for (std::int64_t j = -2 * bound; j <= 2 * bound; ++j) {
          if (within(Triple{t.k + j * a, t.n + j * b, t.m + j * c}, bound)) ++inside;
        }
        if (inside >= 5) return true;
      }
    }
  }
  return false;
}

/// On-cubic triples with the given k and |n|, |m| <= bound.
inline std::vector<Triple> cubic_slice(const CubicPoly& cubic, std::int64_t k, std::int64_t bound) {
  const FastCubic fast(cubic);
  std::vector<Triple> out;
  for (std::int64_t n = -bound; n <= bound; ++n) {
    const std::int64_t intercept = fast.eval(k, n, 0);
    const std::int64_t slope = fast.eval(k, n, 1) - intercept;
    if (slope == 0) {
      if (intercept != 0) continue;
      for (std::int64_t m = -bound; m <= bound; ++m) out.push_back({k, n, m});
      continue;
    }
    if (intercept % slope != 0) continue;
    const std::int64_t m = -intercept / slope;
    if (abs64(m) <= bound) out.push_back({k, n, m});
  }
  return out;
}

inline bool is_named_zero_dim(const AlgebraLabel& label) {
  return label.kind == AlgebraKind::NamedIsolated && label.tag.rfind("0d", 0) == 0;
}

}  // namespace detail

/// Classifies an on-cubic triple. `bound` only affects the SuspectedSeries
/// heuristic (a non-catalogue line must have five lattice points within it).
inline ClassifyResult classify(Pattern pat, const Triple& t, const LinearSolveResult& resolved,
                               std::int64_t bound) {
  if (const SeriesFamily* f = match_series(pat, t)) return {Classification::Series, f};
  if (std::holds_alternative<FamilyLine>(resolved) || std::holds_alternative<FamilyPlane>(resolved)) {
    return {Classification::DegenerateFamily, nullptr};
  }
  const auto* unique = std::get_if<UniquePoint>(&resolved);
  if (unique == nullptr) {
    throw InternalError("full-rank constraint matrix on the cubic at " + t.to_string());
  }
  if (detail::on_long_cubic_line(detail::FastCubic(diophantine_cubic(pat)), t, bound)) {
    return {Classification::SuspectedSeries, nullptr};
  }
  const VogelPoint p = unique->vogel();
  if (p.has_zero_coordinate()) return {Classification::Indeterminate00, nullptr};
  const Integer two_t = 2 * (unique->point[0] + unique->point[1] + unique->point[2]);
  const bool zero_dim = std::any_of(unique->point.begin(), unique->point.end(),
                                    [&](const Integer& x) { return x == two_t; });
  if (zero_dim && !detail::is_named_zero_dim(identify(p))) return {Classification::ZeroDim, nullptr};
  return {Classification::Isolated, nullptr};
}

/// Resolves and annotates one on-cubic triple.
inline Solution make_solution(Pattern pat, const Triple& t, std::int64_t bound) {
  Solution s;
  s.pattern = pat;
  s.triple = t;
  s.resolved = solve_linear(pat, t);
  const ClassifyResult c = classify(pat, t, s.resolved, bound);
  s.classification = c.kind;
  if (c.family != nullptr) s.family = c.family->name;

  if (const auto* unique = std::get_if<UniquePoint>(&s.resolved)) {
    const VogelPoint p = unique->vogel();
    s.point = unique->point;
    s.canonical = canonicalize(p);
    s.label = identify(p);
    s.lines = line_membership(p);
    if (!p.has_zero_coordinate()) s.dim = dimension(p);
    const CharacterResult ch = character(p);
    s.character_case = case_label(ch);
    if (is_regular(ch)) s.rank = rank(ch);
  }
  return s;
}

/// Output order: classification, then decreasing dim (undefined last), then
/// the triple.
inline bool solution_order(const Solution& a, const Solution& b) {
  if (a.classification != b.classification) return a.classification < b.classification;
  if (a.dim.has_value() != b.dim.has_value()) return a.dim.has_value();
  if (a.dim && *a.dim != *b.dim) return *a.dim > *b.dim;
  return a.triple < b.triple;
}

struct EnumerateOptions {
  std::int64_t bound = 60;
  bool dedup = true;   ///< keep only orbit representatives
  unsigned jobs = 1;   ///< worker threads; 0 means hardware concurrency
};

namespace detail {

struct SliceTask {
  Pattern pattern;
  std::int64_t k;
};

inline std::vector<Solution> run_slice(const SliceTask& task, const EnumerateOptions& opt) {
  std::vector<Solution> out;
  const CubicPoly cubic = diophantine_cubic(task.pattern);
  for (const Triple& t : cubic_slice(cubic, task.k, opt.bound)) {
    if (opt.dedup && orbit_representative(task.pattern, t) != t) continue;
    out.push_back(make_solution(task.pattern, t, opt.bound));
  }
  return out;
}

/// Runs every slice on a pool of workers. Results are stored per task index,
/// so the merged output does not depend on scheduling.
inline std::vector<std::vector<Solution>> run_slices(const std::vector<SliceTask>& tasks,
                                                     const EnumerateOptions& opt) {
  std::vector<std::vector<Solution>> results(tasks.size());
  unsigned jobs = opt.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.jobs;
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = run_slice(tasks[i], opt);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = run_slice(tasks[i], opt);
      } catch (...) {
        errors[w] = std::current_exception();
        next = tasks.size();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace detail

inline std::map<Pattern, std::vector<Solution>> enumerate_patterns(const std::vector<Pattern>& patterns,
                                                                   const EnumerateOptions& opt) {
  if (opt.bound < 1) throw Error("bound must be at least 1");
  std::vector<detail::SliceTask> tasks;
  for (Pattern p : patterns) {
    for (std::int64_t k = -opt.bound; k <= opt.bound; ++k) tasks.push_back({p, k});
  }
  auto results = detail::run_slices(tasks, opt);
  std::map<Pattern, std::vector<Solution>> out;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    auto& dest = out[tasks[i].pattern];
    std::move(results[i].begin(), results[i].end(), std::back_inserter(dest));
  }
  for (auto& [pattern, list] : out) std::stable_sort(list.begin(), list.end(), solution_order);
  return out;
}

inline std::vector<Solution> enumerate(Pattern pat, const EnumerateOptions& opt) {
  return std::move(enumerate_patterns({pat}, opt)[pat]);
}

inline std::vector<Solution> enumerate(Pattern pat, std::int64_t bound, bool dedup = true) {
  return enumerate(pat, EnumerateOptions{bound, dedup, 1});
}

inline std::map<Pattern, std::vector<Solution>> enumerate_all(std::int64_t bound, unsigned jobs = 1) {
  return enumerate_patterns({kAllPatterns.begin(), kAllPatterns.end()}, EnumerateOptions{bound, true, jobs});
}

/// Only the isolated solutions.
inline std::vector<Solution> isolated_only(const std::vector<Solution>& all) {
  std::vector<Solution> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out),
               [](const Solution& s) { return s.classification == Classification::Isolated; });
  return out;
}

}  // namespace vogel
