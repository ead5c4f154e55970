/**
 * @file pattern.hpp
 * @brief The seven singularity-cancellation patterns.
 *
 * A pattern picks, for each denominator parameter sigma_i in (alpha, beta,
 * gamma), one numerator 2t - kappa_i that is an integer multiple of it:
 *
 *     2t - kappa_1 = k alpha,   2t - kappa_2 = n beta,   2t - kappa_3 = m gamma.
 *
 * Expanding 2t - alpha = alpha + 2 beta + 2 gamma (and cyclically) gives a
 * homogeneous 3x3 linear system in (alpha, beta, gamma) whose determinant is
 * a multilinear cubic in (k, n, m): the Diophantine condition.
 */
#pragma once

#include "vogel/exact/cubic.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vogel {

enum class Pattern { P1aaa, P2aab, P3aag, P4abg, P5agb, P6baa, P7bga };

inline constexpr std::array<Pattern, 7> kAllPatterns = {
    Pattern::P1aaa, Pattern::P2aab, Pattern::P3aag, Pattern::P4abg,
    Pattern::P5agb, Pattern::P6baa, Pattern::P7bga};

inline std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::P1aaa: return "1aaa";
    case Pattern::P2aab: return "2aab";
    case Pattern::P3aag: return "3aag";
    case Pattern::P4abg: return "4abg";
    case Pattern::P5agb: return "5agb";
    case Pattern::P6baa: return "6baa";
    case Pattern::P7bga: return "7bga";
  }
  return "?";
}

inline std::optional<Pattern> pattern_from_name(std::string_view name) {
  for (Pattern p : kAllPatterns) {
    if (pattern_name(p) == name) return p;
  }
  return std::nullopt;
}

/// Parameter index: 0 = alpha, 1 = beta, 2 = gamma.
using Assignment = std::array<int, 3>;

/// (kappa_1, kappa_2, kappa_3).
inline Assignment pattern_assignment(Pattern p) {
  switch (p) {
    case Pattern::P1aaa: return {0, 0, 0};
    case Pattern::P2aab: return {0, 0, 1};
    case Pattern::P3aag: return {0, 0, 2};
    case Pattern::P4abg: return {0, 1, 2};
    case Pattern::P5agb: return {0, 2, 1};
    case Pattern::P6baa: return {1, 0, 0};
    case Pattern::P7bga: return {1, 2, 0};
  }
  return {0, 0, 0};
}

/// Coefficients of 2t - kappa over (alpha, beta, gamma).
inline std::array<int, 3> two_t_minus(int kappa) {
  std::array<int, 3> row = {2, 2, 2};
  row[static_cast<std::size_t>(kappa)] = 1;
  return row;
}

using IntMatrix3 = std::array<std::array<Integer, 3>, 3>;

/// Concrete matrix M with M (alpha, beta, gamma)^T = 0.
inline IntMatrix3 constraint_matrix(Pattern p, const Integer& k, const Integer& n,
                                    const Integer& m) {
  const Assignment a = pattern_assignment(p);
  const std::array<const Integer*, 3> js = {&k, &n, &m};
  IntMatrix3 mat;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto row = two_t_minus(a[i]);
    for (std::size_t j = 0; j < 3; ++j) mat[i][j] = row[j];
    mat[i][i] -= *js[i];
  }
  return mat;
}

inline IntMatrix3 constraint_matrix(Pattern p, const Triple& t) {
  return constraint_matrix(p, t.k, t.n, t.m);
}

inline Integer determinant(const IntMatrix3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

/// The constraint matrix with symbolic k, n, m (entries are CubicPoly).
inline std::array<std::array<CubicPoly, 3>, 3> symbolic_constraint_matrix(Pattern p) {
  const Assignment a = pattern_assignment(p);
  const std::array<CubicPoly, 3> vars = {CubicPoly::k(), CubicPoly::n(), CubicPoly::m()};
  std::array<std::array<CubicPoly, 3>, 3> mat;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto row = two_t_minus(a[i]);
    for (std::size_t j = 0; j < 3; ++j) mat[i][j] = CubicPoly::constant(row[j]);
    mat[i][i] -= vars[i];
  }
  return mat;
}

/// Determinant of the symbolic constraint matrix, sign fixed so that the
/// knm coefficient is +1.
inline CubicPoly diophantine_cubic(Pattern p) {
  const auto a = symbolic_constraint_matrix(p);
  CubicPoly det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                  a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                  a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  if (det.coefficient(kKNM) < 0) det = -det;
  if (det.coefficient(kKNM) != 1) {
    throw InternalError("determinant cubic without unit knm coefficient");
  }
  return det;
}

struct NormalizedCubic {
  Triple shift;
  CubicPoly normalized;
};

/// Substituting (k,n,m) -> (k,n,m) + shift into a cubic with unit knm
/// coefficient removes the kn, km, nm terms exactly when
/// shift = (-c_nm, -c_km, -c_kn).
inline NormalizedCubic normalized_cubic(Pattern p) {
  const CubicPoly cubic = diophantine_cubic(p);
  const Triple shift{to_int64(-cubic.coefficient(kVarN | kVarM)),
                     to_int64(-cubic.coefficient(kVarK | kVarM)),
                     to_int64(-cubic.coefficient(kVarK | kVarN))};
  NormalizedCubic out{shift, cubic.shifted(shift)};
  if (!out.normalized.has_no_quadratic_terms()) {
    throw InternalError("shift failed to remove quadratic terms");
  }
  return out;
}

/// Integer dimension formula on the pattern's solution set: equals the
/// universal dimension at every on-cubic triple with a unique point and
/// nonzero parameters. Representatives are only defined modulo the cubic.
/// The usual printed forms are wrong for three patterns (they disagree with
/// the printed Dim column of the same solutions); the ones here were fitted
/// against the dimension formula:
///   1aaa  printed k-3m-3km-3n-3kn+4mn     (Y1 at 5,5,5 gives -75, not -125)
///   2aab  printed n(k+1)(m-1)+k           (opposite sign)
///   6baa  printed k(3n+2m-nm)             (nm should be 2nm)
inline CubicPoly dim_polynomial(Pattern p) {
  const CubicPoly k = CubicPoly::k();
  const CubicPoly n = CubicPoly::n();
  const CubicPoly m = CubicPoly::m();
  const auto c = [](int v) { return CubicPoly::constant(v); };
  switch (p) {
    case Pattern::P1aaa:
      return c(3) * n + c(3) * m - k - k * n - k * m - c(4) * n * m;
    case Pattern::P2aab:
      return -(n * (k + c(1)) * (m - c(1)) + k);
    case Pattern::P3aag:
      return m * (k - n - k * n);
    case Pattern::P4abg:
    case Pattern::P5agb:
    case Pattern::P7bga:
      return -(k * n * m);
    case Pattern::P6baa:
      return k * (c(3) * n + c(2) * m - c(2) * n * m);
  }
  return {};
}

/// A symmetry of a pattern's solution set: the triple (k, n, m) is mapped to
/// (t[perm[0]], t[perm[1]], t[perm[2]]) and the solved point (a0, a1, a2) to
/// (a[point_perm[0]], a[point_perm[1]], a[point_perm[2]]).
struct PatternSymmetry {
  std::array<int, 3> triple_perm;
  std::array<int, 3> point_perm;
};

/// The internal symmetry group, identity first.
inline std::vector<PatternSymmetry> pattern_symmetries(Pattern p) {
  const PatternSymmetry identity{{0, 1, 2}, {0, 1, 2}};
  switch (p) {
    case Pattern::P1aaa:
    case Pattern::P5agb:
      // n <-> m exchanges beta and gamma in the closed forms for both.
      return {identity, {{0, 2, 1}, {0, 2, 1}}};
    case Pattern::P4abg: {
      std::vector<PatternSymmetry> group;
      std::array<int, 3> perm = {0, 1, 2};
      do {
        group.push_back({perm, perm});
      } while (std::next_permutation(perm.begin(), perm.end()));
      return group;
    }
    case Pattern::P7bga:
      return {identity, {{1, 2, 0}, {1, 2, 0}}, {{2, 0, 1}, {2, 0, 1}}};
    case Pattern::P2aab:
    case Pattern::P3aag:
    case Pattern::P6baa:
      return {identity};
  }
  return {identity};
}

inline Triple apply_triple_perm(const Triple& t, const std::array<int, 3>& perm) {
  return {t[perm[0]], t[perm[1]], t[perm[2]]};
}

/// Lexicographically smallest triple in the symmetry orbit.
inline Triple orbit_representative(Pattern p, const Triple& t) {
  Triple best = t;
  for (const auto& s : pattern_symmetries(p)) best = std::min(best, apply_triple_perm(t, s.triple_perm));
  return best;
}

inline std::vector<Triple> orbit(Pattern p, const Triple& t) {
  std::vector<Triple> out;
  for (const auto& s : pattern_symmetries(p)) out.push_back(apply_triple_perm(t, s.triple_perm));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// (k, n, m) -> (n - 1, k + 1, m): the k <-> n exchange of the normalized
/// 3aag cubic, written in the original variables. An involution.
inline Triple aag_exchange(const Triple& t) { return {t.n - 1, t.k + 1, t.m}; }

}  // namespace vogel
