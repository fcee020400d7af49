#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace l2poly {

using Integer = boost::multiprecision::cpp_int;

/// Non-negative gcd; gcd(0, 0) = 0.
inline Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a);
  Integer y = abs(b);
  while (y != 0) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

/// Division rounding toward negative infinity. `d` must be non-zero.
inline Integer floor_div(const Integer& n, const Integer& d) {
  Integer q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace l2poly
