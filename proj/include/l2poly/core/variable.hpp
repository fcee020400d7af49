#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace l2poly {

/// A named variable such as x3 or y12: an alphabetic block name plus a
/// 1-based index. Ordered by block, then numerically by index, so y2 < y10.
struct Variable {
  std::string block;
  int index = 0;

  static Variable parse(std::string_view name);
  std::string str() const { return block + std::to_string(index); }

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

inline Variable var(std::string block, int index) { return Variable{std::move(block), index}; }

}  // namespace l2poly
