#pragma once

#include "l2poly/core/integer.hpp"

#include <compare>
#include <span>
#include <string>

namespace l2poly {

/// An integer extended with +inf and -inf. Arithmetic is exact; adding
/// opposite infinities throws std::logic_error instead of producing a value.
class ExtInt {
 public:
  enum class Kind : unsigned char { MinusInf, Finite, PlusInf };

  ExtInt() = default;
  ExtInt(Integer v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ExtInt(long long v) : value_(v) {}           // NOLINT(google-explicit-constructor)
  ExtInt(int v) : value_(v) {}                 // NOLINT(google-explicit-constructor)

  static ExtInt plus_inf() { return ExtInt(Kind::PlusInf); }
  static ExtInt minus_inf() { return ExtInt(Kind::MinusInf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_plus_inf() const noexcept { return kind_ == Kind::PlusInf; }
  bool is_minus_inf() const noexcept { return kind_ == Kind::MinusInf; }

  /// Throws std::logic_error when infinite.
  const Integer& value() const;

  ExtInt operator-() const;
  friend ExtInt operator+(const ExtInt& a, const ExtInt& b);
  friend ExtInt operator-(const ExtInt& a, const ExtInt& b) { return a + (-b); }
  ExtInt& operator+=(const ExtInt& o) { return *this = *this + o; }

  friend std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b);
  friend bool operator==(const ExtInt& a, const ExtInt& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  /// "inf", "-inf" or the decimal value.
  std::string str() const;

 private:
  explicit ExtInt(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Integer value_ = 0;
};

/// Minimum over a collection; +inf for an empty one.
ExtInt min_of(std::span<const ExtInt> xs);
/// Maximum over a collection; -inf for an empty one.
ExtInt max_of(std::span<const ExtInt> xs);

}  // namespace l2poly
