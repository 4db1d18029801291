#pragma once

#include "yosp/errors.hpp"
#include "yosp/exact/rational.hpp"

namespace yosp {

/// Hooks a coefficient ring into TruncatedSeries. Specialize for operator types.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero_like(const Rational&) { return 0; }
  static Rational one_like(const Rational&) { return 1; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational inverse(const Rational& x) {
    if (x == 0) throw SingularSeries("constant term is not invertible");
    return 1 / x;
  }
  static Rational scale(const Rational& x, const Rational& c) { return x * c; }
};

}  // namespace yosp
