/**
 * @file linear_solve.hpp
 * @brief Exact null space of a pattern's constraint matrix.
 */
#pragma once

#include "vogel/core/vogel_point.hpp"
#include "vogel/patterns/pattern.hpp"

#include <optional>
#include <variant>

namespace vogel {

struct NoSolution {
  friend bool operator==(const NoSolution&, const NoSolution&) = default;
};

struct UniquePoint {
  IntTriple point;  ///< primitive integer representative
  VogelPoint vogel() const { return VogelPoint::of(point[0], point[1], point[2]); }
  friend bool operator==(const UniquePoint&, const UniquePoint&) = default;
};

/// Rank-1 matrix: the null space is a projective line spanned by two points.
struct FamilyLine {
  IntTriple first;
  IntTriple second;
  friend bool operator==(const FamilyLine&, const FamilyLine&) = default;
};

/// Rank 0. Unreachable for constraint matrices (their off-diagonal entries
/// are the constant 2); kept so the variant mirrors every possible rank.
struct FamilyPlane {
  friend bool operator==(const FamilyPlane&, const FamilyPlane&) = default;
};

using LinearSolveResult = std::variant<NoSolution, UniquePoint, FamilyLine, FamilyPlane>;

namespace detail {

inline IntTriple cross(const std::array<Integer, 3>& a, const std::array<Integer, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline bool is_zero_vector(const IntTriple& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

/// Divides by the content and fixes the sign: t > 0, or when t = 0 the first
/// nonzero entry positive.
inline IntTriple primitive_oriented(IntTriple v) {
  Integer g = gcd_of(gcd_of(v[0], v[1]), v[2]);
  for (auto& x : v) x /= g;
  Integer t = v[0] + v[1] + v[2];
  bool flip = t < 0;
  if (t == 0) {
    for (const auto& x : v) {
      if (x != 0) {
        flip = x < 0;
        break;
      }
    }
  }
  if (flip) {
    for (auto& x : v) x = -x;
  }
  return v;
}

}  // namespace detail

inline int matrix_rank(const IntMatrix3& a) {
  if (determinant(a) != 0) return 3;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!detail::is_zero_vector(detail::cross(a[i], a[j]))) return 2;
    }
  }
  for (const auto& row : a) {
    if (!detail::is_zero_vector(row)) return 1;
  }
  return 0;
}

inline LinearSolveResult solve_matrix(const IntMatrix3& a) {
  switch (matrix_rank(a)) {
    case 3:
      return NoSolution{};
    case 2:
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
          IntTriple v = detail::cross(a[i], a[j]);
          if (!detail::is_zero_vector(v)) return UniquePoint{detail::primitive_oriented(v)};
        }
      }
      break;
    case 1: {
      const std::array<Integer, 3>* row = nullptr;
      for (const auto& r : a) {
        if (!detail::is_zero_vector(r)) {
          row = &r;
          break;
        }
      }
      // The null space is the orthogonal complement of the nonzero row;
      // crossing it with unit vectors yields two independent spanning vectors.
      std::vector<IntTriple> span;
      for (std::size_t e = 0; e < 3 && span.size() < 2; ++e) {
        IntTriple unit = {0, 0, 0};
        unit[e] = 1;
        IntTriple v = detail::cross(*row, unit);
        if (detail::is_zero_vector(v)) continue;
        if (!span.empty() && detail::is_zero_vector(detail::cross(span[0], v))) continue;
        span.push_back(detail::primitive_oriented(v));
      }
      return FamilyLine{span.at(0), span.at(1)};
    }
    default:
      return FamilyPlane{};
  }
  throw InternalError("rank-2 matrix without independent rows");
}

inline LinearSolveResult solve_linear(Pattern p, const Integer& k, const Integer& n,
                                      const Integer& m) {
  return solve_matrix(constraint_matrix(p, k, n, m));
}

inline LinearSolveResult solve_linear(Pattern p, const Triple& t) {
  return solve_matrix(constraint_matrix(p, t));
}

}  // namespace vogel
