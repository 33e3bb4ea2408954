#pragma once

// Arbitrary-precision integer core. Entries of Psi images and SL_2(Z)
// continued-fraction quotients grow exponentially in word length, so
// machine words are never used for exact arithmetic.

#include <boost/multiprecision/cpp_int.hpp>

namespace lmod {

using Int = boost::multiprecision::cpp_int;

inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int int_gcd(Int a, Int b) {
  a = int_abs(a);
  b = int_abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Extended Euclid on (a, b) >= 0: returns g = gcd(a,b) and x, y with a*x + b*y = g.
struct ExtGcd {
  Int g, x, y;
};

inline ExtGcd ext_gcd(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b;
    b = r;
    Int xn = x0 - q * x1;
    Int yn = y0 - q * y1;
    x0 = x1;
    y0 = y1;
    x1 = xn;
    y1 = yn;
  }
  return {a, x0, y0};
}

}  // namespace lmod
