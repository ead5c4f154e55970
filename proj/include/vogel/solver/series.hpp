/**
 * @file series.hpp
 * @brief Catalogue of one-parameter integer families on each pattern's cubic.
 *
 * Classical series, the D_{2,1,lambda} and 3d/0d families and the 0/0
 * families. Each entry is affine in a free integer s; membership is tested
 * up to the pattern's symmetry group.
 */
#pragma once

#include "vogel/patterns/pattern.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vogel {

/// k(s), n(s), m(s) with each component = offset + slope * s.
struct AffineTriple {
  std::array<std::int64_t, 3> offset;
  std::array<std::int64_t, 3> slope;

  Triple at(std::int64_t s) const {
    return {offset[0] + slope[0] * s, offset[1] + slope[1] * s, offset[2] + slope[2] * s};
  }

  /// The parameter s with at(s) == t, if any.
  std::optional<std::int64_t> parameter_of(const Triple& t) const {
    std::optional<std::int64_t> s;
    for (std::size_t i = 0; i < 3; ++i) {
      const std::int64_t diff = t[i] - offset[i];
      if (slope[i] == 0) {
        if (diff != 0) return std::nullopt;
        continue;
      }
      if (diff % slope[i] != 0) return std::nullopt;
      const std::int64_t candidate = diff / slope[i];
      if (s && *s != candidate) return std::nullopt;
      s = candidate;
    }
    // A constant triple (no slope) is never used in the catalogue.
    return s;
  }
};

struct SeriesFamily {
  Pattern pattern;
  std::string name;          ///< e.g. "SU(N)", "SO(2N+1)", "3d", "0/0"
  AffineTriple triple;
  std::string point_family;  ///< the resulting points, as text
};

namespace detail {

inline AffineTriple affine(std::int64_t k0, std::int64_t k1, std::int64_t n0, std::int64_t n1,
                           std::int64_t m0, std::int64_t m1) {
  return {{k0, n0, m0}, {k1, n1, m1}};
}

inline std::vector<SeriesFamily> build_series_catalog() {
  using P = Pattern;
  std::vector<SeriesFamily> c;
  const auto add = [&](P p, std::string name, AffineTriple t, std::string points) {
    c.push_back({p, std::move(name), t, std::move(points)});
  };
  // 1aaa
  add(P::P1aaa, "SU(2N)", affine(1, 0, 0, 1, 0, -1), "(-s,1,-1)");
  add(P::P1aaa, "SO(2k+4)", affine(0, 1, 0, -2, 2, 0), "(2,-1,s)");
  add(P::P1aaa, "SO(2k+4)", affine(0, 1, 2, 0, 0, -2), "(2,s,-1)");
  add(P::P1aaa, "0/0", affine(0, 0, 0, 0, 0, 1), "0d line at s=0, else 0/0");
  add(P::P1aaa, "0/0", affine(0, 0, 0, 1, 0, 0), "0d line at s=0, else 0/0");
  add(P::P1aaa, "0/0", affine(0, 1, 0, 0, 0, 0), "0d line at s=0, else 0/0");
  // 2aab
  add(P::P2aab, "SU(2N)", affine(1, 0, 0, 1, 1, -2), "(s,1,-1)");
  add(P::P2aab, "SO(2N+1)", affine(0, -2, 0, 1, 2, 0), "(-2,4,2s-3)");
  add(P::P2aab, "SO(2k+4)", affine(0, 1, 2, 0, -2, -1), "(2,s,-1)");
  add(P::P2aab, "0d", affine(0, 0, 0, 0, 0, 1), "(2s-2,-s-2,3)");
  add(P::P2aab, "0/0", affine(0, 1, 0, 0, 1, 0), "(0,-1,1)");
  add(P::P2aab, "0/0", affine(0, 0, 0, 1, -2, 0), "(-2,0,1)");
  add(P::P2aab, "3d", affine(-3, 0, 0, 1, 1, 0), "(-s,3,2s-3)");
  // 3aag
  add(P::P3aag, "SU(2N)", affine(1, 0, 0, 1, -1, -2), "(s,1,-1)");
  add(P::P3aag, "SU(N)", affine(0, 1, 0, -1, 1, 0), "(2,-2,s+1)");
  add(P::P3aag, "SO(2k+4)", affine(0, 1, 2, 0, -3, -2), "(2,s,-1)");
  add(P::P3aag, "0/0", affine(0, 0, 0, 1, -3, 0), "0/0");
  add(P::P3aag, "0/0", affine(0, 1, 0, 0, -1, 0), "0/0");
  add(P::P3aag, "0/0", affine(-1, 0, 1, 0, 0, 1), "0/0");
  add(P::P3aag, "0d", affine(0, 0, 0, 0, 0, 1), "(2(s+1),-(s+3),2)");
  add(P::P3aag, "D21lambda", affine(-1, 0, 0, 1, -1, 0), "(-s,1,s-1)");
  add(P::P3aag, "3d", affine(0, 1, 1, 0, -3, 0), "(-2,-2s,s+1)");
  // 4abg
  add(P::P4abg, "SU(N)", affine(-2, -1, 0, 1, 1, 0), "(-2,2,s+1)");
  add(P::P4abg, "0/0", affine(-1, 0, -1, 0, 0, 1), "D21lambda plane at s=-1, else 0/0");
  // 5agb
  add(P::P5agb, "SU(N)", affine(1, 0, 1, -1, 1, 1), "(s,-2,2)");
  add(P::P5agb, "SO(4N)", affine(1, -4, 0, 1, 2, 0), "(-1,2,2s-2)");
  add(P::P5agb, "SO(4N)", affine(1, -4, 2, 0, 0, 1), "(-1,2s-2,2)");
  add(P::P5agb, "0/0", affine(0, 1, 1, 0, 1, 0), "3d line at s=-3, else 0/0");
  add(P::P5agb, "0/0", affine(-3, 0, 1, 0, 0, 1), "3d line at s=1, else 0/0");
  add(P::P5agb, "0/0", affine(-3, 0, 0, 1, 1, 0), "3d line at s=1, else 0/0");
  // 6baa
  add(P::P6baa, "SO(4N)", affine(2, 0, 0, 1, 0, -2), "(2s-2,2,-1)");
  add(P::P6baa, "SO(4N)", affine(0, 1, 2, 0, 4, -4), "(-1,2,2s-2)");
  add(P::P6baa, "SO(2N+1)", affine(0, 1, 3, -2, 2, 0), "(-4,2,3-2s)");
  add(P::P6baa, "0d", affine(0, 1, 0, 0, 0, 0), "(2,2-2s,2s-3)");
  add(P::P6baa, "0/0", affine(1, 0, 0, 1, 0, 0), "0/0");
  add(P::P6baa, "0/0", affine(0, 1, 1, 0, -2, 0), "0/0");
  add(P::P6baa, "3d", affine(1, 0, 1, 0, 0, 1), "(-s-2,s,1)");
  // 7bga has no series: with one index fixed the remaining linear equation
  // has no integer solutions.
  return c;
}

}  // namespace detail

inline const std::vector<SeriesFamily>& series_catalog() {
  static const std::vector<SeriesFamily> catalog = detail::build_series_catalog();
  return catalog;
}

inline std::vector<const SeriesFamily*> series_of(Pattern p) {
  std::vector<const SeriesFamily*> out;
  for (const auto& f : series_catalog()) {
    if (f.pattern == p) out.push_back(&f);
  }
  return out;
}

/// The first catalogue family containing t or one of its symmetry images.
inline const SeriesFamily* match_series(Pattern p, const Triple& t) {
  const auto symmetries = pattern_symmetries(p);
  for (const auto& f : series_catalog()) {
    if (f.pattern != p) continue;
    for (const auto& s : symmetries) {
      if (f.triple.parameter_of(apply_triple_perm(t, s.triple_perm))) return &f;
    }
  }
  return nullptr;
}

}  // namespace vogel
