#pragma once

// Exact rationals. GMP's mpq_class keeps values canonical (positive
// denominator, coprime parts) after every arithmetic operation.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "yosp/errors.hpp"

namespace yosp {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q". Floats are rejected.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false))
    throw InvalidInput("not an exact rational: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw InvalidInput("rational with zero denominator: '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// a -> b in the sense a - b is a nonnegative integer.
inline bool arrow_scalar(const Rational& a, const Rational& b) {
  Rational d = a - b;
  return is_integer(d) && d >= 0;
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

/// binom(-r, j) = (-1)^j binom(r + j - 1, j) for r >= 1.
inline Rational negative_binomial(unsigned r, unsigned j) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), r + j - 1, j);
  return Rational(j % 2 ? Integer(-c) : c);
}

}  // namespace yosp
