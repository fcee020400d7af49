#include "l2poly/core/ext_int.hpp"

#include <stdexcept>

namespace l2poly {

const Integer& ExtInt::value() const {
  if (!is_finite()) throw std::logic_error("ExtInt::value() on an infinite value");
  return value_;
}

ExtInt ExtInt::operator-() const {
  switch (kind_) {
    case Kind::PlusInf: return minus_inf();
    case Kind::MinusInf: return plus_inf();
    case Kind::Finite: break;
  }
  return ExtInt(Integer(-value_));
}

ExtInt operator+(const ExtInt& a, const ExtInt& b) {
  if ((a.is_plus_inf() && b.is_minus_inf()) || (a.is_minus_inf() && b.is_plus_inf()))
    throw std::logic_error("ExtInt: +inf + -inf is undefined");
  if (a.is_plus_inf() || b.is_plus_inf()) return ExtInt::plus_inf();
  if (a.is_minus_inf() || b.is_minus_inf()) return ExtInt::minus_inf();
  return ExtInt(Integer(a.value_ + b.value_));
}

std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (!a.is_finite()) return std::strong_ordering::equal;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtInt::str() const {
  switch (kind_) {
    case Kind::PlusInf: return "inf";
    case Kind::MinusInf: return "-inf";
    case Kind::Finite: break;
  }
  return value_.str();
}

ExtInt min_of(std::span<const ExtInt> xs) {
  ExtInt best = ExtInt::plus_inf();
  for (const auto& x : xs)
    if (x < best) best = x;
  return best;
}

ExtInt max_of(std::span<const ExtInt> xs) {
  ExtInt best = ExtInt::minus_inf();
  for (const auto& x : xs)
    if (x > best) best = x;
  return best;
}

}  // namespace l2poly
