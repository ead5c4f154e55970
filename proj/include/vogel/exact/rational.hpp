/**
 * @file rational.hpp
 * @brief Arbitrary-precision integers and always-reduced rationals.
 *
 * Every quantity in the atlas (Vogel parameters, dimensions, character
 * coefficients) is carried exactly. Fixed-width arithmetic would overflow
 * silently in determinant and character expansions for large |k|,|n|,|m|.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vogel {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an invariant the library relies on is violated.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

inline Integer numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

inline Integer abs_of(const Integer& v) { return v < 0 ? Integer(-v) : v; }

inline Integer gcd_of(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs_of(a), abs_of(b));
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs_of(a) / gcd_of(a, b) * abs_of(b);
}

/// Narrowing conversion; throws when the value does not fit.
inline std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw InternalError("integer " + v.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

/// "p/q", or "p" when the denominator is one. Never a decimal.
inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline std::string to_string(const Integer& v) { return v.str(); }

namespace detail {

inline Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  Integer value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace detail

/// Parses "p", "-p", "p/q" (q may carry a sign; q = 0 is rejected).
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(detail::parse_integer(text, text));
  }
  Integer num = detail::parse_integer(text.substr(0, slash), text);
  Integer den = detail::parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  // cpp_rational rejects negative denominators.
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

}  // namespace vogel
