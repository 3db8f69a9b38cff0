#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hkbase {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// gcd(0, 0) = 0; result is always non-negative.
inline Integer gcd_of(const Integer& a, const Integer& b) {
  Integer x = abs_value(a);
  Integer y = abs_value(b);
  while (y != 0) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

inline bool divides(const Integer& d, const Integer& x) {
  if (d == 0) return x == 0;
  return x % d == 0;
}

inline bool is_even(const Integer& x) { return x % 2 == 0; }

inline std::string to_string(const Integer& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
  if (boost::multiprecision::denominator(x) == 1) {
    return boost::multiprecision::numerator(x).str();
  }
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

}  // namespace hkbase
