/**
 * @file expression.hpp
 * @brief Small exact evaluator for the formulas printed in the tables:
 * "N^2-1", "-(N+1)", "2+2/N", "knm-kn-3k", "2alpha+beta+gamma=0".
 *
 * Juxtaposition multiplies ("2k", "knm", "2(m+1)"). A run of letters is split
 * greedily into the longest bound variable names, so "knm" is k*n*m when k,
 * n and m are bound.
 */
#pragma once

#include "vogel/exact/rational.hpp"

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace vogel {

using Bindings = std::map<std::string, Rational, std::less<>>;

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const Bindings& vars) : text_(text), vars_(vars) {}

  Rational parse() {
    Rational v = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("expression '" + std::string(text_) + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary() {
    const char c = peek();
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  Rational sum() {
    Rational v = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        v += term();
      } else if (c == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  Rational term() {
    Rational v = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v *= unary();
      } else if (c == '/') {
        ++pos_;
        const Rational d = unary();
        if (d == 0) fail("division by zero");
        v /= d;
      } else if (starts_primary()) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  Rational unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Rational power() {
    const Rational base = primary();
    if (peek() != '^') return base;
    ++pos_;
    const Rational e = unary();
    if (!is_integer(e)) fail("non-integer exponent");
    const std::int64_t n = to_int64(numerator_of(e));
    if (n < 0 && base == 0) fail("zero to a negative power");
    Rational result = 1;
    for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) result *= base;
    return n < 0 ? Rational(1 / result) : result;
  }

  Rational primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      const Rational v = sum();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Rational(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name = identifier();
      const auto it = vars_.find(name);
      if (it == vars_.end()) fail("unbound variable '" + name + "'");
      return it->second;
    }
    if (c == '\0') fail("unexpected end");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  /// The longest bound name at the cursor.
  std::string identifier() {
    std::size_t end = pos_;
    while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
    const std::string_view run = text_.substr(pos_, end - pos_);
    for (std::size_t len = run.size(); len > 0; --len) {
      const std::string_view candidate = run.substr(0, len);
      if (vars_.find(candidate) != vars_.end()) {
        pos_ += len;
        return std::string(candidate);
      }
    }
    fail("unknown identifier in '" + std::string(run) + "'");
  }

  std::string_view text_;
  const Bindings& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Rational evaluate(std::string_view expr, const Bindings& vars = {}) {
  return detail::ExpressionParser(expr, vars).parse();
}

/// Names from `known` that occur in expr (greedy split as in evaluation).
inline std::set<std::string> referenced_names(std::string_view expr, const std::set<std::string>& known) {
  Bindings dummy;
  for (const auto& name : known) dummy.emplace(name, Rational(0));
  std::set<std::string> out;
  std::size_t i = 0;
  while (i < expr.size()) {
    if (!std::isalpha(static_cast<unsigned char>(expr[i]))) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < expr.size() && std::isalpha(static_cast<unsigned char>(expr[end]))) ++end;
    std::string_view run = expr.substr(i, end - i);
    while (!run.empty()) {
      std::size_t len = run.size();
      while (len > 0 && dummy.find(run.substr(0, len)) == dummy.end()) --len;
      if (len == 0) throw ParseError("expression '" + std::string(expr) + "': unknown identifier");
      out.insert(std::string(run.substr(0, len)));
      run.remove_prefix(len);
    }
    i = end;
  }
  return out;
}

inline bool is_equation(std::string_view expr) { return expr.find('=') != std::string_view::npos; }

/// lhs - rhs of "lhs=rhs".
inline Rational equation_residual(std::string_view eq, const Bindings& vars) {
  const auto split = eq.find('=');
  if (split == std::string_view::npos || eq.find('=', split + 1) != std::string_view::npos) {
    throw ParseError("expected exactly one '=' in '" + std::string(eq) + "'");
  }
  return evaluate(eq.substr(0, split), vars) - evaluate(eq.substr(split + 1), vars);
}

}  // namespace vogel
