/**
 * @file identify.hpp
 * @brief Recognition of known algebras and catalogued isolated points.
 */
#pragma once

#include "vogel/core/vogel_point.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vogel {

enum class AlgebraKind {
  SU, SO, G2, F4, E6, E7, E8, E7half, X1, X2, D21lambda, NamedIsolated, Unknown
};

struct AlgebraLabel {
  AlgebraKind kind = AlgebraKind::Unknown;
  std::optional<std::int64_t> parameter;  ///< N for SU(N) and SO(N)
  std::string tag;                        ///< Y1..Y47, 0d1..0d6, 3d1, 3d2

  std::string to_string() const {
    switch (kind) {
      case AlgebraKind::SU: return "SU(" + std::to_string(*parameter) + ")";
      case AlgebraKind::SO: return "SO(" + std::to_string(*parameter) + ")";
      case AlgebraKind::G2: return "G2";
      case AlgebraKind::F4: return "F4";
      case AlgebraKind::E6: return "E6";
      case AlgebraKind::E7: return "E7";
      case AlgebraKind::E8: return "E8";
      case AlgebraKind::E7half: return "E7half";
      case AlgebraKind::X1: return "X1";
      case AlgebraKind::X2: return "X2";
      case AlgebraKind::D21lambda: return "D21lambda";
      case AlgebraKind::NamedIsolated: return tag;
      case AlgebraKind::Unknown: return "Unknown";
    }
    return "Unknown";
  }

  friend bool operator==(const AlgebraLabel&, const AlgebraLabel&) = default;
};

/// Standard algebra points. SO(N) covers Sp through negative even N.
inline VogelPoint su_point(std::int64_t n) { return VogelPoint::of(-2, 2, n); }
inline VogelPoint so_point(std::int64_t n) { return VogelPoint::of(-2, 4, n - 4); }
/// sp(2r), i.e. C_r: (-2, 1, r + 2), the same point as SO(-2r).
inline VogelPoint sp_point(std::int64_t rank) { return VogelPoint::of(-2, 1, rank + 2); }

struct NamedPoint {
  std::string_view name;
  AlgebraKind kind;
  VogelPoint point;
};

inline const std::vector<NamedPoint>& exceptional_points() {
  static const std::vector<NamedPoint> points = {
      {"G2", AlgebraKind::G2, VogelPoint(-2, Rational(10, 3), Rational(8, 3))},
      {"F4", AlgebraKind::F4, VogelPoint::of(-2, 5, 6)},
      {"E6", AlgebraKind::E6, VogelPoint::of(-2, 6, 8)},
      {"E7", AlgebraKind::E7, VogelPoint::of(-2, 8, 12)},
      {"E8", AlgebraKind::E8, VogelPoint::of(-2, 12, 20)},
      {"E7half", AlgebraKind::E7half, VogelPoint::of(-1, 5, 8)},
      {"X1", AlgebraKind::X1, VogelPoint::of(1, -4, -7)},
      {"X2", AlgebraKind::X2, VogelPoint::of(1, -3, -5)},
  };
  return points;
}

struct CatalogPoint {
  std::array<int, 3> canonical;
  std::string_view tag;
};

/// Isolated points named in the per-pattern solution tables, keyed by
/// canonical form. Two distinct points carry the tag Y6 in the source tables
/// (dimensions -133 and -132); both are kept as printed.
inline const std::vector<CatalogPoint>& named_isolated_points() {
  static const std::vector<CatalogPoint> points = {
      {{-8, 1, 3}, "0d1"},       {{-10, 2, 3}, "0d2"},      {{-4, 1, 1}, "0d3"},
      {{-6, 1, 2}, "0d4"},       {{-2, -1, 2}, "0d5"},      {{-4, -1, 3}, "0d6"},
      {{-3, 1, 1}, "3d1"},       {{-5, 1, 3}, "3d2"},       {{-1, -1, -1}, "Y1"},
      {{-10, -8, -7}, "Y2"},     {{-6, -5, -4}, "Y3"},      {{-3, -2, -2}, "Y4"},
      {{-8, -7, -5}, "Y5"},      {{-5, -4, -3}, "Y6"},      {{-8, -6, -5}, "Y6"},
      {{-7, -5, -4}, "Y7"},      {{-7, -6, -4}, "Y8"},      {{-4, -3, -2}, "Y9"},
      {{-2, -2, -1}, "Y10"},     {{-2, -1, -1}, "Y11"},     {{-7, -4, -3}, "Y12"},
      {{-5, -4, -2}, "Y13"},     {{-5, -3, -2}, "Y14"},     {{-3, -2, -1}, "Y15"},
      {{-6, -5, -2}, "Y16"},     {{-7, -6, -2}, "Y17"},     {{-13, -5, -4}, "Y18"},
      {{-10, -4, -3}, "Y19"},    {{-7, -3, -2}, "Y20"},     {{-3, -1, -1}, "Y21"},
      {{-11, -5, -3}, "Y22"},    {{-4, -3, -1}, "Y23"},     {{-4, -2, -1}, "Y24"},
      {{-11, -4, -3}, "Y25"},    {{-8, -3, -2}, "Y26"},     {{-9, -5, -2}, "Y27"},
      {{-5, -3, -1}, "Y28"},     {{-5, -4, -1}, "Y29"},     {{-5, -2, -1}, "Y30"},
      {{-4, -1, -1}, "Y31"},     {{-22, -6, -5}, "Y32"},    {{-18, -5, -4}, "Y33"},
      {{-14, -4, -3}, "Y34"},    {{-10, -3, -2}, "Y35"},    {{-6, -4, -1}, "Y36"},
      {{-16, -5, -3}, "Y37"},    {{-6, -2, -1}, "Y38"},     {{-7, -3, -1}, "Y39"},
      {{-7, -5, -1}, "Y40"},     {{-14, -5, -2}, "Y41"},    {{-8, -6, -1}, "Y42"},
      {{-8, -3, -1}, "Y43"},     {{-9, -4, -1}, "Y44"},     {{-10, -4, -1}, "Y45"},
      {{-12, -5, -1}, "Y46"},    {{-14, -6, -1}, "Y47"},
  };
  return points;
}

namespace detail {

inline const std::array<std::array<int, 3>, 6>& permutations3() {
  static const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  return perms;
}

/// N >= 2 with p ~ (-2, 2, N).
inline std::optional<std::int64_t> match_su(const IntTriple& v) {
  std::optional<std::int64_t> best;
  for (const auto& o : permutations3()) {
    const Integer& a = v[o[0]];
    const Integer& b = v[o[1]];
    const Integer& c = v[o[2]];
    if (a == 0 || a + b != 0) continue;
    // (a, -a, c) = (a/2) * (2, -2, 2c/a), the SU(|2c/a|) point up to sign.
    const Integer twice = 2 * c;
    if (twice % a != 0) continue;
    Integer n = abs_of(twice / a);
    if (n < 2) continue;
    const auto value = to_int64(n);
    if (!best || value < *best) best = value;
  }
  return best;
}

/// N with p ~ (-2, 4, N - 4); N = 0 is excluded (that point is 0d5).
inline std::optional<std::int64_t> match_so(const IntTriple& v) {
  std::optional<std::int64_t> best;
  for (const auto& o : permutations3()) {
    const Integer& a = v[o[0]];
    const Integer& b = v[o[1]];
    const Integer& c = v[o[2]];
    if (a == 0 || 2 * a + b != 0) continue;
    // (a, -2a, c) = (-a/2) * (-2, 4, -2c/a), so N - 4 = -2c/a.
    const Integer twice = 2 * c;
    if (twice % a != 0) continue;
    const Integer n = 4 - twice / a;
    if (n == 0) continue;
    const auto value = to_int64(n);
    if (!best || abs_of(value) < abs_of(*best) ||
        (abs_of(value) == abs_of(*best) && value > *best)) {
      best = value;
    }
  }
  return best;
}

}  // namespace detail

/// Matches, in order: SU(N) family, SO(N) family, exceptional algebras,
/// E7half / X1 / X2, catalogued isolated points, the t = 0 line, Unknown.
inline AlgebraLabel identify(const VogelPoint& p) {
  const IntTriple v = primitive_integers(p);
  const CanonicalPoint canonical = canonicalize(p);

  if (auto n = detail::match_su(v)) return {AlgebraKind::SU, *n, {}};
  if (auto n = detail::match_so(v)) return {AlgebraKind::SO, *n, {}};
  for (const auto& named : exceptional_points()) {
    if (canonicalize(named.point) == canonical) return {named.kind, std::nullopt, {}};
  }
  for (const auto& named : named_isolated_points()) {
    const auto& c = named.canonical;
    if (canonical == CanonicalPoint{c[0], c[1], c[2]}) {
      return {AlgebraKind::NamedIsolated, std::nullopt, std::string(named.tag)};
    }
  }
  if (p.t() == 0 && !p.has_zero_coordinate()) {
    return {AlgebraKind::D21lambda, std::nullopt, {}};
  }
  return {};
}

}  // namespace vogel
