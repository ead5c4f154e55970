/**
 * @file cubic.hpp
 * @brief Multilinear integer polynomials in k, n, m.
 *
 * Every determinant condition and every dimension polynomial of the seven
 * patterns is multilinear: each variable appears to power at most one. The
 * representation stores exactly the eight multilinear monomials, and any
 * product that would raise a variable to a higher power is an internal error.
 */
#pragma once

#include "vogel/exact/rational.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace vogel {

/// Bit mask over the variables: bit 0 = k, bit 1 = n, bit 2 = m.
using Monomial = unsigned;

inline constexpr Monomial kVarK = 1u;
inline constexpr Monomial kVarN = 2u;
inline constexpr Monomial kVarM = 4u;
inline constexpr Monomial kKNM = kVarK | kVarN | kVarM;

/// Integer point (k, n, m).
struct Triple {
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t m = 0;

  std::int64_t operator[](int i) const { return i == 0 ? k : (i == 1 ? n : m); }
  friend auto operator<=>(const Triple&, const Triple&) = default;
  std::string to_string() const {
    return std::to_string(k) + "," + std::to_string(n) + "," + std::to_string(m);
  }
};

class CubicPoly {
 public:
  CubicPoly() = default;

  static CubicPoly constant(Integer c) {
    CubicPoly p;
    p.coeffs_[0] = std::move(c);
    return p;
  }

  static CubicPoly term(Monomial mono, Integer c = 1) {
    check_monomial(mono);
    CubicPoly p;
    p.coeffs_[mono] = std::move(c);
    return p;
  }

  static CubicPoly k() { return term(kVarK); }
  static CubicPoly n() { return term(kVarN); }
  static CubicPoly m() { return term(kVarM); }

  const Integer& coefficient(Monomial mono) const {
    check_monomial(mono);
    return coeffs_[mono];
  }

  void set_coefficient(Monomial mono, Integer c) {
    check_monomial(mono);
    coeffs_[mono] = std::move(c);
  }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  /// True when no kn, km or nm monomial is present.
  bool has_no_quadratic_terms() const {
    return coeffs_[kVarK | kVarN] == 0 && coeffs_[kVarK | kVarM] == 0 &&
           coeffs_[kVarN | kVarM] == 0;
  }

  Integer eval(const Integer& k, const Integer& n, const Integer& m) const {
    Integer sum = 0;
    for (Monomial mono = 0; mono < 8; ++mono) {
      if (coeffs_[mono] == 0) continue;
      Integer t = coeffs_[mono];
      if (mono & kVarK) t *= k;
      if (mono & kVarN) t *= n;
      if (mono & kVarM) t *= m;
      sum += t;
    }
    return sum;
  }

  Integer eval(const Triple& t) const { return eval(t.k, t.n, t.m); }

  /// Value written as  m * slope(k,n) + intercept(k,n)  for fixed k, n.
  std::pair<Integer, Integer> linear_in_m(const Integer& k, const Integer& n) const {
    const Integer intercept = eval(k, n, 0);
    return {eval(k, n, 1) - intercept, intercept};
  }

  CubicPoly& operator+=(const CubicPoly& o) {
    for (Monomial i = 0; i < 8; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  CubicPoly& operator-=(const CubicPoly& o) {
    for (Monomial i = 0; i < 8; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  CubicPoly& operator*=(const Integer& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend CubicPoly operator+(CubicPoly a, const CubicPoly& b) { return a += b; }
  friend CubicPoly operator-(CubicPoly a, const CubicPoly& b) { return a -= b; }
  friend CubicPoly operator-(CubicPoly a) { return a *= Integer(-1); }
  friend CubicPoly operator*(CubicPoly a, const Integer& s) { return a *= s; }
  friend CubicPoly operator*(const Integer& s, CubicPoly a) { return a *= s; }

  /// Product; throws InternalError if a variable would appear squared.
  friend CubicPoly operator*(const CubicPoly& a, const CubicPoly& b) {
    CubicPoly p;
    for (Monomial i = 0; i < 8; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (Monomial j = 0; j < 8; ++j) {
        if (b.coeffs_[j] == 0) continue;
        if (i & j) {
          throw InternalError("non-multilinear product in CubicPoly");
        }
        p.coeffs_[i | j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return p;
  }

  friend bool operator==(const CubicPoly& a, const CubicPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Substitutes k -> images[0], n -> images[1], m -> images[2].
  CubicPoly substitute(const std::array<CubicPoly, 3>& images) const {
    CubicPoly result;
    for (Monomial mono = 0; mono < 8; ++mono) {
      if (coeffs_[mono] == 0) continue;
      CubicPoly t = constant(coeffs_[mono]);
      for (int v = 0; v < 3; ++v) {
        if (mono & (1u << v)) t = t * images[static_cast<std::size_t>(v)];
      }
      result += t;
    }
    return result;
  }

  /// (k, n, m) -> (k + s0, n + s1, m + s2).
  CubicPoly shifted(const Triple& s) const {
    return substitute({k() + constant(s.k), n() + constant(s.n), m() + constant(s.m)});
  }

  /// Terms in the order knm, kn, km, nm, k, n, m, constant, e.g. "knm-2kn-nm".
  std::string to_string() const {
    std::string out;
    for (Monomial mono : kPrintOrder) {
      const Integer& c = coeffs_[mono];
      if (c == 0) continue;
      const bool negative = c < 0;
      const Integer mag = negative ? Integer(-c) : c;
      if (negative) {
        out += "-";
      } else if (!out.empty()) {
        out += "+";
      }
      if (mag != 1 || mono == 0) out += mag.str();
      out += monomial_name(mono);
    }
    return out.empty() ? "0" : out;
  }

  /// For a polynomial with unit knm coefficient, the right-hand side R of
  /// "knm = R", e.g. "kn+km+nm+3k+3n+3m+5".
  std::string rhs_string() const {
    if (coeffs_[kKNM] != 1) {
      throw InternalError("rhs_string requires a unit knm coefficient");
    }
    CubicPoly rest = -*this;
    rest.coeffs_[kKNM] = 0;
    return rest.to_string();
  }

  static std::string monomial_name(Monomial mono) {
    std::string s;
    if (mono & kVarK) s += "k";
    if (mono & kVarN) s += "n";
    if (mono & kVarM) s += "m";
    return s;
  }

 private:
  static constexpr std::array<Monomial, 8> kPrintOrder = {
      kKNM, kVarK | kVarN, kVarK | kVarM, kVarN | kVarM, kVarK, kVarN, kVarM, 0u};

  static void check_monomial(Monomial mono) {
    if (mono > kKNM) throw InternalError("monomial outside the multilinear range");
  }

  std::array<Integer, 8> coeffs_{};
};

inline Integer cubic_eval(const CubicPoly& p, const Integer& k, const Integer& n,
                          const Integer& m) {
  return p.eval(k, n, m);
}

/// Sign normalization: the first nonzero coefficient in print order (knm
/// first) is made positive. Determinant conditions are only defined up to
/// an overall sign.
inline CubicPoly normalized_sign(const CubicPoly& p) {
  for (Monomial mono : {kKNM, kVarK | kVarN, kVarK | kVarM, kVarN | kVarM, kVarK, kVarN,
                        kVarM, 0u}) {
    if (p.coefficient(mono) != 0) return p.coefficient(mono) < 0 ? -p : p;
  }
  return p;
}

inline bool cubic_equal(const CubicPoly& p, const CubicPoly& q) {
  return normalized_sign(p) == normalized_sign(q);
}

}  // namespace vogel
