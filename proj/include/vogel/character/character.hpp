/**
 * @file character.hpp
 * @brief The universal adjoint character evaluated at x*rho,
 *
 *   f(x) = prod_i sinh(x (kappa_i - 2t) / 4) / sinh(x kappa_i / 4),
 *
 * as an exact Laurent polynomial in z = e^{x/4}.
 *
 * The point is first scaled to a primitive integer triple; regularity does
 * not depend on the scaling (rescaling the parameters rescales x, and each
 * sinh ratio is even under a simultaneous sign flip). With
 * N(z) = prod (z^{a_i} - z^{-a_i}), a_i = kappa_i - 2t, and
 * D(z) = prod (z^{kappa_i} - z^{-kappa_i}), f is regular in the finite
 * x-plane iff D divides N in the Laurent ring: z = e^{x/4} only omits 0 and
 * infinity, where monomials are units.
 */
#pragma once

#include "vogel/core/lines.hpp"
#include "vogel/core/vogel_point.hpp"
#include "vogel/exact/laurent.hpp"

#include <complex>
#include <optional>
#include <string>
#include <variant>

namespace vogel {

struct RegularPoly {
  IntegerLaurent poly;
};

/// Some 2t - kappa vanishes while all parameters are nonzero: f == 0.
struct IdenticallyZero {};

/// Uncancelled poles. `witness` is the denominator factor index (0, 1, 2)
/// whose zeros are not all cancelled, or -1 when a parameter is zero and no
/// numerator vanishes (f is infinite everywhere) or no single factor can be
/// blamed.
struct Singular {
  int witness = -1;
};

/// A zero parameter together with a vanishing numerator: the limit depends
/// on the direction of approach.
struct Indeterminate00 {};

using CharacterResult = std::variant<RegularPoly, IdenticallyZero, Singular, Indeterminate00>;

class RankUndefined : public Error {
 public:
  RankUndefined() : Error("rank is undefined for singular or 0/0 characters") {}
};

namespace detail {

/// N(z) and D(z) for a primitive integer triple.
struct CharacterFactors {
  std::array<std::int64_t, 3> numer_exponents;
  std::array<std::int64_t, 3> denom_exponents;
};

inline CharacterFactors character_factors(const IntTriple& v) {
  const Integer t = v[0] + v[1] + v[2];
  CharacterFactors f{};
  for (std::size_t i = 0; i < 3; ++i) {
    f.numer_exponents[i] = to_int64(v[i] - 2 * t);
    f.denom_exponents[i] = to_int64(v[i]);
  }
  return f;
}

inline IntegerLaurent product_of_binomials(const std::array<std::int64_t, 3>& exps) {
  IntegerLaurent p(Integer(1));
  for (auto e : exps) p = p * IntegerLaurent::sinh_binomial(e);
  return p;
}

}  // namespace detail

inline CharacterResult character(const VogelPoint& p) {
  const IntTriple v = primitive_integers(p);
  const auto f = detail::character_factors(v);

  bool zero_parameter = false;
  bool zero_numerator = false;
  for (std::size_t i = 0; i < 3; ++i) {
    zero_parameter |= f.denom_exponents[i] == 0;
    zero_numerator |= f.numer_exponents[i] == 0;
  }
  if (zero_parameter) {
    if (zero_numerator) return Indeterminate00{};
    return Singular{-1};
  }
  if (zero_numerator) return IdenticallyZero{};

  const IntegerLaurent numer = detail::product_of_binomials(f.numer_exponents);
  const IntegerLaurent denom = detail::product_of_binomials(f.denom_exponents);
  auto quotient = laurent_divide(numer, denom);
  if (!quotient) {
    // Locate a factor whose zeros are not all cancelled: the first one that
    // does not divide the numerator even on its own.
    for (int i = 0; i < 3; ++i) {
      const auto single = IntegerLaurent::sinh_binomial(f.denom_exponents[static_cast<std::size_t>(i)]);
      if (!laurent_divide(numer, single)) return Singular{i};
    }
    // Otherwise a shared zero has too high a multiplicity; blame the factor
    // whose removal makes the remaining two divide.
    for (int i = 0; i < 3; ++i) {
      IntegerLaurent rest(Integer(1));
      for (int j = 0; j < 3; ++j) {
        if (j != i) rest = rest * IntegerLaurent::sinh_binomial(f.denom_exponents[static_cast<std::size_t>(j)]);
      }
      if (laurent_divide(numer, rest)) return Singular{i};
    }
    return Singular{-1};
  }
  if (!quotient->is_palindromic()) {
    throw InternalError("character expansion is not palindromic at " + p.to_string());
  }
  return RegularPoly{std::move(*quotient)};
}

inline bool is_regular(const CharacterResult& c) {
  return std::holds_alternative<RegularPoly>(c) || std::holds_alternative<IdenticallyZero>(c);
}

/// Constant term of the finite expansion (0 for the zero character).
inline Integer rank(const CharacterResult& c) {
  if (const auto* r = std::get_if<RegularPoly>(&c)) return r->poly.coefficient(0);
  if (std::holds_alternative<IdenticallyZero>(c)) return 0;
  throw RankUndefined();
}

/// f(0), which equals the universal dimension.
inline Integer character_at_one(const CharacterResult& c) {
  if (const auto* r = std::get_if<RegularPoly>(&c)) return r->poly.sum_of_coefficients();
  if (std::holds_alternative<IdenticallyZero>(c)) return 0;
  throw RankUndefined();
}

inline std::string case_label(const CharacterResult& c) {
  if (std::holds_alternative<RegularPoly>(c)) return "Regular";
  if (std::holds_alternative<IdenticallyZero>(c)) return "IdenticallyZero";
  if (std::holds_alternative<Singular>(c)) return "Singular";
  return "Indeterminate00";
}

/// The sinh-product evaluated directly in floating point at complex x, for
/// the primitive integer representative of p. Independent of the Laurent
/// route; used as a numeric cross-check.
inline std::complex<double> sinh_product(const VogelPoint& p, std::complex<double> x) {
  const IntTriple v = primitive_integers(p);
  const auto f = detail::character_factors(v);
  std::complex<double> value(1.0, 0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    const double a = static_cast<double>(f.numer_exponents[i]);
    const double b = static_cast<double>(f.denom_exponents[i]);
    value *= std::sinh(x * a / 4.0) / std::sinh(x * b / 4.0);
  }
  return value;
}

/// Characters on the 3d line 2 alpha + beta + gamma = 0 (in some coordinate
/// order) reduce to z^e + 1 + z^-e. Returns the checked expansion.
inline IntegerLaurent three_d_line_character(const VogelPoint& p) {
  if (!on_line(p, LineId::ThreeD)) {
    throw Error("point " + p.to_string() + " is not on the 3d line");
  }
  if (p.has_zero_coordinate()) {
    throw ZeroParameter("3d-line character needs nonzero parameters");
  }
  const CharacterResult c = character(p);
  const auto* r = std::get_if<RegularPoly>(&c);
  if (r == nullptr) {
    throw InternalError("3d-line point with non-regular character: " + p.to_string());
  }
  const auto& poly = r->poly;
  const auto e = poly.max_exponent();
  const bool shape = poly.term_count() == 3 && e > 0 && poly.coefficient(e) == 1 &&
                     poly.coefficient(0) == 1 && poly.coefficient(-e) == 1;
  if (!shape) {
    throw InternalError("3d-line character is not z^e + 1 + z^-e: " + poly.to_string());
  }
  return poly;
}

}  // namespace vogel
