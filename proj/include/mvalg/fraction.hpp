#pragma once

#include <cstdint>
#include <string>

#include "mvalg/errors.hpp"

namespace mvalg {

/// Exact fraction in [0,1] used for the readable coordinates of chain and
/// product elements. Deliberately NOT normalized: the element k/(n-1) of an
/// n-element chain keeps denominator n-1, so Ł_5 prints 2/4, not 1/2.
/// Comparisons are value comparisons (cross-multiplied), so Fraction(1,2)
/// and Fraction(2,4) compare equal.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d <= 0) throw InvalidParameterError("fraction denominator must be positive");
  }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }

  std::string str() const {
    if (num == 0) return "0";
    if (num == den) return "1";
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace mvalg
