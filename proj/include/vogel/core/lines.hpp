/**
 * @file lines.hpp
 * @brief Named straight lines ("roads") of the Vogel plane and membership.
 */
#pragma once

#include "vogel/core/vogel_point.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vogel {

enum class LineId { SU, SO, Exc, T, F, K, M, D, ZeroD, ThreeD };

inline constexpr std::array<LineId, 10> kAllLines = {
    LineId::SU, LineId::SO, LineId::Exc, LineId::T,     LineId::F,
    LineId::K,  LineId::M,  LineId::D,   LineId::ZeroD, LineId::ThreeD};

inline std::string_view line_name(LineId id) {
  switch (id) {
    case LineId::SU: return "SU";
    case LineId::SO: return "SO";
    case LineId::Exc: return "Exc";
    case LineId::T: return "T";
    case LineId::F: return "F";
    case LineId::K: return "K";
    case LineId::M: return "M";
    case LineId::D: return "D";
    case LineId::ZeroD: return "0d";
    case LineId::ThreeD: return "3d";
  }
  return "?";
}

inline std::optional<LineId> line_from_name(std::string_view name) {
  for (LineId id : kAllLines) {
    if (line_name(id) == name) return id;
  }
  return std::nullopt;
}

using LinearForm = std::array<int, 3>;

/// One representative c with c1*alpha + c2*beta + c3*gamma = 0.
inline LinearForm line_base_form(LineId id) {
  switch (id) {
    case LineId::SU: return {1, 1, 0};       // alpha + beta = 0
    case LineId::SO: return {2, 1, 0};       // 2 alpha + beta = 0 (Sp is a permutation)
    case LineId::Exc: return {2, 2, -1};     // gamma = 2(alpha + beta)
    case LineId::T: return {1, 2, -1};       // alpha + 2 beta = gamma
    case LineId::F: return {1, -1, -1};      // alpha = beta + gamma
    case LineId::K: return {1, 2, -2};       // alpha + 2 beta = 2 gamma
    case LineId::M: return {3, -2, -2};      // 3 alpha = 2 beta + 2 gamma
    case LineId::D: return {1, 1, 1};        // t = 0
    case LineId::ZeroD: return {2, 2, 1};    // 2t - gamma = 0
    case LineId::ThreeD: return {2, 1, 1};   // 2 alpha + beta + gamma = 0
  }
  return {0, 0, 0};
}

/// The form set of a line, closed under coordinate permutation.
inline std::vector<LinearForm> line_forms(LineId id) {
  LinearForm f = line_base_form(id);
  std::sort(f.begin(), f.end());
  std::vector<LinearForm> forms;
  do {
    forms.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return forms;
}

inline bool form_vanishes(const LinearForm& f, const VogelPoint& p) {
  return f[0] * p.alpha() + f[1] * p.beta() + f[2] * p.gamma() == 0;
}

inline bool on_line(const VogelPoint& p, LineId id) {
  const auto forms = line_forms(id);
  return std::any_of(forms.begin(), forms.end(),
                     [&](const LinearForm& f) { return form_vanishes(f, p); });
}

inline std::set<LineId> line_membership(const VogelPoint& p) {
  std::set<LineId> lines;
  for (LineId id : kAllLines) {
    if (on_line(p, id)) lines.insert(id);
  }
  return lines;
}

/// Lines as printed in the solution tables: the SU line is never listed
/// there, all others are. Joined with ';'.
inline std::string format_lines(const std::set<LineId>& lines, bool include_su = true) {
  std::string out;
  for (LineId id : lines) {
    if (!include_su && id == LineId::SU) continue;
    if (!out.empty()) out += ";";
    out += line_name(id);
  }
  return out;
}

inline std::set<LineId> parse_lines(std::string_view text) {
  std::set<LineId> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      auto id = line_from_name(item);
      if (!id) throw ParseError("unknown line name '" + std::string(item) + "'");
      lines.insert(*id);
    }
    start = end + 1;
  }
  return lines;
}

}  // namespace vogel
