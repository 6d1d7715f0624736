#pragma once

#include <string>

#include "heapgames/common.hpp"

namespace heapgames {

// Minimal exact rational for spectral-bound comparisons. Denominator kept
// positive; comparisons cross-multiply in 128 bits, no floating point.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  Rational() = default;
  Rational(i64 n, i64 d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }

  friend bool operator<(const Rational& a, const Rational& b) {
    return i128{a.num} * b.den < i128{b.num} * a.den;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return i128{a.num} * b.den == i128{b.num} * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace heapgames
