/**
 * @file laurent.hpp
 * @brief Laurent polynomials in one variable z with exact coefficients.
 *
 * Terms e^{x(mu,rho)} of the adjoint character become monomials z^e with
 * z = e^{x/4}, so regularity of the character reduces to exact divisibility
 * in the Laurent ring over the coefficient type.
 */
#pragma once

#include "vogel/exact/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace vogel {

class DivisionByZeroPoly : public Error {
 public:
  DivisionByZeroPoly() : Error("division by the zero Laurent polynomial") {}
};

namespace detail {

/// a / b when the quotient exists in the coefficient ring.
inline std::optional<Rational> exact_quotient(const Rational& a, const Rational& b) {
  return a / b;
}

inline std::optional<Integer> exact_quotient(const Integer& a, const Integer& b) {
  Integer q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) return std::nullopt;
  return q;
}

}  // namespace detail

/// Finite sum of c_e z^e over integer exponents e. Zero coefficients are
/// never stored; the zero polynomial is the empty map.
template <class Coeff>
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, Coeff>;

  LaurentPoly() = default;

  explicit LaurentPoly(Coeff constant) { add_term(0, std::move(constant)); }

  static LaurentPoly monomial(Exponent e, Coeff c = Coeff(1)) {
    LaurentPoly p;
    p.add_term(e, std::move(c));
    return p;
  }

  /// z^e - z^{-e}; twice sinh(e * x / 4) in terms of z = e^{x/4}.
  static LaurentPoly sinh_binomial(Exponent e) {
    LaurentPoly p;
    p.add_term(e, Coeff(1));
    p.add_term(-e, Coeff(-1));
    return p;
  }

  static LaurentPoly from_terms(const std::vector<std::pair<Exponent, Coeff>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  Exponent min_exponent() const { return terms_.begin()->first; }
  Exponent max_exponent() const { return terms_.rbegin()->first; }

  Coeff coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Value at z = 1.
  Coeff sum_of_coefficients() const {
    Coeff s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  /// coefficient(e) == coefficient(-e) for every e.
  bool is_palindromic() const {
    return std::all_of(terms_.begin(), terms_.end(), [this](const auto& t) {
      return coefficient(-t.first) == t.second;
    });
  }

  void add_term(Exponent e, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly shifted(Exponent s) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e + s, c);
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, Coeff(-c));
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, Coeff(ca * cb));
    }
    return p;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Evaluates at an arbitrary point (e.g. std::complex<double>).
  template <class Value, class Convert>
  Value evaluate(const Value& z, Convert convert) const {
    Value sum(0);
    for (const auto& [e, c] : terms_) sum += convert(c) * pow_int(z, e);
    return sum;
  }

  std::string to_string(const std::string& var = "z") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string coeff = coeff_string(c);
      const bool negative = !coeff.empty() && coeff[0] == '-';
      if (negative) coeff.erase(0, 1);
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << coeff;
        continue;
      }
      if (coeff != "1") os << coeff << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

 private:
  template <class Value>
  static Value pow_int(const Value& z, Exponent e) {
    Value base = e < 0 ? Value(1) / z : z;
    Exponent n = e < 0 ? -e : e;
    Value r(1);
    while (n > 0) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return r;
  }

  static std::string coeff_string(const Coeff& c) { return vogel::to_string(c); }

  Terms terms_;
};

using RationalLaurent = LaurentPoly<Rational>;
using IntegerLaurent = LaurentPoly<Integer>;

/// Exact division in the Laurent ring. Both operands are shifted by monomial
/// units into ordinary polynomials with nonzero constant term, then divided
/// by long division from the top degree. Returns nullopt when the remainder
/// is nonzero (or, for integer coefficients, when a quotient coefficient
/// would leave the integers).
template <class Coeff>
std::optional<LaurentPoly<Coeff>> laurent_divide(const LaurentPoly<Coeff>& numer,
                                                 const LaurentPoly<Coeff>& denom) {
  using Exponent = typename LaurentPoly<Coeff>::Exponent;
  if (denom.is_zero()) throw DivisionByZeroPoly();
  if (numer.is_zero()) return LaurentPoly<Coeff>();

  const Exponent nlow = numer.min_exponent();
  const Exponent dlow = denom.min_exponent();
  const auto ndeg = static_cast<std::size_t>(numer.max_exponent() - nlow);
  const auto ddeg = static_cast<std::size_t>(denom.max_exponent() - dlow);
  if (ndeg < ddeg) return std::nullopt;

  std::vector<Coeff> rem(ndeg + 1, Coeff(0));
  for (const auto& [e, c] : numer.terms()) rem[static_cast<std::size_t>(e - nlow)] = c;
  std::vector<std::pair<std::size_t, Coeff>> divisor;
  for (const auto& [e, c] : denom.terms()) {
    divisor.emplace_back(static_cast<std::size_t>(e - dlow), c);
  }
  const Coeff& lead = divisor.back().second;

  std::vector<Coeff> quot(ndeg - ddeg + 1, Coeff(0));
  for (std::size_t top = ndeg + 1; top-- > ddeg;) {
    if (rem[top] == 0) continue;
    auto q = detail::exact_quotient(rem[top], lead);
    if (!q) return std::nullopt;
    const std::size_t shift = top - ddeg;
    for (const auto& [d, c] : divisor) rem[shift + d] -= *q * c;
    quot[shift] = std::move(*q);
  }
  for (std::size_t i = 0; i < ddeg; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }

  LaurentPoly<Coeff> result;
  for (std::size_t i = 0; i < quot.size(); ++i) {
    result.add_term(static_cast<Exponent>(i) + nlow - dlow, quot[i]);
  }
  return result;
}

}  // namespace vogel
