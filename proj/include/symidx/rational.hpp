#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "symidx/errors.hpp"

namespace symidx {

// Exact rational, gcd-reduced, denominator > 0. All bound arithmetic in the
// library is integer or half-integer; this type keeps it exact end to end.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) {
    if (den == 0) throw Error("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  // Smallest integer >= value.
  long long ceil() const {
    long long q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
  }

  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace symidx
