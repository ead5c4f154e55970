/**
 * @file vogel_point.hpp
 * @brief Projective Vogel points, canonical forms and the universal formulas
 *        that live on them (dimension, R matrix, symmetric-square pieces).
 */
#pragma once

#include "vogel/exact/rational.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <string>

namespace vogel {

class AllZero : public Error {
 public:
  AllZero() : Error("all three Vogel parameters are zero") {}
};

/// Some parameter is zero where the formula divides by it.
class ZeroParameter : public Error {
 public:
  using Error::Error;
};

/// A denominator factor of a universal formula vanishes.
class DenominatorZero : public Error {
 public:
  using Error::Error;
};

enum class Slot { Alpha = 0, Beta = 1, Gamma = 2 };

inline const char* slot_name(Slot s) {
  switch (s) {
    case Slot::Alpha: return "alpha";
    case Slot::Beta: return "beta";
    case Slot::Gamma: return "gamma";
  }
  return "?";
}

/// Projective rational triple (alpha, beta, gamma). t is derived.
class VogelPoint {
 public:
  VogelPoint(Rational alpha, Rational beta, Rational gamma)
      : coords_{std::move(alpha), std::move(beta), std::move(gamma)} {
    if (coords_[0] == 0 && coords_[1] == 0 && coords_[2] == 0) throw AllZero();
  }

  template <class A, class B, class C>
  static VogelPoint of(const A& a, const B& b, const C& c) {
    return VogelPoint(Rational(a), Rational(b), Rational(c));
  }

  const Rational& alpha() const { return coords_[0]; }
  const Rational& beta() const { return coords_[1]; }
  const Rational& gamma() const { return coords_[2]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::array<Rational, 3>& coords() const { return coords_; }

  Rational t() const { return coords_[0] + coords_[1] + coords_[2]; }

  bool has_zero_coordinate() const {
    return coords_[0] == 0 || coords_[1] == 0 || coords_[2] == 0;
  }

  VogelPoint permuted(const std::array<int, 3>& order) const {
    return VogelPoint(coords_[static_cast<std::size_t>(order[0])],
                      coords_[static_cast<std::size_t>(order[1])],
                      coords_[static_cast<std::size_t>(order[2])]);
  }

  VogelPoint scaled(const Rational& s) const {
    if (s == 0) throw ZeroParameter("projective scale factor must be nonzero");
    return VogelPoint(coords_[0] * s, coords_[1] * s, coords_[2] * s);
  }

  std::string to_string() const {
    return vogel::to_string(coords_[0]) + "," + vogel::to_string(coords_[1]) + "," +
           vogel::to_string(coords_[2]);
  }

 private:
  std::array<Rational, 3> coords_;
};

/// Projectively equal in the given coordinate order (no permutation).
inline bool projectively_equal(const VogelPoint& p, const VogelPoint& q) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (p[i] * q[j] != p[j] * q[i]) return false;
    }
  }
  return true;
}

using IntTriple = std::array<Integer, 3>;

/// The primitive integer triple on the projective ray of p, sign as given.
inline IntTriple primitive_integers(const VogelPoint& p) {
  Integer l = 1;
  for (const auto& c : p.coords()) l = lcm_of(l, denominator_of(c));
  IntTriple v;
  Integer g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    v[i] = numerator_of(p[i] * l);
    g = gcd_of(g, v[i]);
  }
  for (auto& x : v) x /= g;
  return v;
}

/// Invariant of the projective-permutation class: the lexicographically
/// smallest among the six permutations of the primitive triple and of its
/// negative.
struct CanonicalPoint {
  Integer a, b, c;

  IntTriple as_array() const { return {a, b, c}; }
  VogelPoint to_point() const { return VogelPoint::of(a, b, c); }
  friend bool operator==(const CanonicalPoint&, const CanonicalPoint&) = default;
  friend bool operator<(const CanonicalPoint& x, const CanonicalPoint& y) {
    return x.as_array() < y.as_array();
  }
  std::string to_string() const { return a.str() + "," + b.str() + "," + c.str(); }
};

inline CanonicalPoint canonicalize(const VogelPoint& p) {
  IntTriple v = primitive_integers(p);
  IntTriple best;
  bool have = false;
  for (int sign : {1, -1}) {
    IntTriple w = v;
    for (auto& x : w) x *= sign;
    std::sort(w.begin(), w.end());
    do {
      if (!have || w < best) {
        best = w;
        have = true;
      }
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return {best[0], best[1], best[2]};
}

/// Physical semiplane: all parameters nonzero and of mixed sign.
inline bool is_physical(const VogelPoint& p) {
  if (p.has_zero_coordinate()) return false;
  int negative = 0;
  for (const auto& c : p.coords()) negative += c < 0 ? 1 : 0;
  return negative == 1 || negative == 2;
}

/// Unphysical semiplane: all parameters nonzero and of one sign.
inline bool is_unphysical(const VogelPoint& p) {
  if (p.has_zero_coordinate()) return false;
  return !is_physical(p);
}

/// Universal dimension (alpha-2t)(beta-2t)(gamma-2t) / (alpha beta gamma).
inline Rational dimension(const VogelPoint& p) {
  if (p.has_zero_coordinate()) {
    throw ZeroParameter("dimension undefined: a Vogel parameter is zero (" +
                        p.to_string() + ")");
  }
  const Rational two_t = 2 * p.t();
  return (p.alpha() - two_t) * (p.beta() - two_t) * (p.gamma() - two_t) /
         (p.alpha() * p.beta() * p.gamma());
}

/// entries[sigma][kappa] = (2t - kappa) / sigma; rows are divisors.
struct RMatrix {
  std::array<std::array<Rational, 3>, 3> entries;

  const std::array<Rational, 3>& row(Slot sigma) const {
    return entries[static_cast<std::size_t>(sigma)];
  }
  bool row_has_integer(Slot sigma) const {
    const auto& r = row(sigma);
    return std::any_of(r.begin(), r.end(), [](const Rational& q) { return is_integer(q); });
  }
};

inline RMatrix r_matrix(const VogelPoint& p) {
  if (p.has_zero_coordinate()) {
    throw ZeroParameter("R matrix undefined: a Vogel parameter is zero");
  }
  const Rational two_t = 2 * p.t();
  RMatrix r;
  for (std::size_t sigma = 0; sigma < 3; ++sigma) {
    for (std::size_t kappa = 0; kappa < 3; ++kappa) {
      r.entries[sigma][kappa] = (two_t - p[kappa]) / p[sigma];
    }
  }
  return r;
}

/// Dimension of the Y2 piece of the symmetric square attached to `slot`:
///
///   -(3a-2t)(b-2t)(c-2t) t (b+t)(c+t) / (a^2 (a-b) b (a-c) c)
///
/// with a the chosen slot and b, c the other two parameters.
inline Rational dim_y2(const VogelPoint& p, Slot slot) {
  const auto s = static_cast<std::size_t>(slot);
  const Rational& a = p[s];
  const Rational& b = p[(s + 1) % 3];
  const Rational& c = p[(s + 2) % 3];
  const Rational t = p.t();
  const std::string where = std::string(" for slot ") + slot_name(slot) + " at (" +
                            p.to_string() + ")";
  if (a == 0) throw DenominatorZero("the chosen parameter is zero" + where);
  if (b == 0 || c == 0) throw DenominatorZero("another parameter is zero" + where);
  if (a == b || a == c) {
    throw DenominatorZero("the chosen parameter equals another one" + where);
  }
  return -((3 * a - 2 * t) * (b - 2 * t) * (c - 2 * t) * t * (b + t) * (c + t)) /
         (a * a * (a - b) * b * (a - c) * c);
}

}  // namespace vogel
