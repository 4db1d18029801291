#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/exact/rational.hpp"
#include "yosp/series/ring_traits.hpp"

namespace yosp {

/// Power series sum_{r=0}^{K} c_r u^{-r} over the ring R, known exactly up to order K.
/// Binary operations return the smaller of the two orders.
template <class R>
class TruncatedSeries {
 public:
  using Traits = RingTraits<R>;

  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<R> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw InvalidInput("series needs at least a constant term");
  }

  static TruncatedSeries constant(const R& value, int order) {
    std::vector<R> c(static_cast<std::size_t>(order) + 1, Traits::zero_like(value));
    c[0] = value;
    return TruncatedSeries(std::move(c));
  }
  /// 1 in the ring of `like`.
  static TruncatedSeries one(const R& like, int order) { return constant(Traits::one_like(like), order); }
  static TruncatedSeries zero(const R& like, int order) { return constant(Traits::zero_like(like), order); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int r) const { return c_[static_cast<std::size_t>(r)]; }
  R& operator[](int r) { return c_[static_cast<std::size_t>(r)]; }
  const std::vector<R>& coefficients() const { return c_; }

  TruncatedSeries truncated(int order) const {
    if (order > this->order()) throw InvalidInput("cannot extend a truncated series");
    return TruncatedSeries(std::vector<R>(c_.begin(), c_.begin() + order + 1));
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const R& x) { return Traits::is_zero(x); });
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int k = std::min(a.order(), b.order());
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(k) + 1);
    for (int r = 0; r <= k; ++r) out.push_back(a[r] + b[r]);
    return TruncatedSeries(std::move(out));
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int k = std::min(a.order(), b.order());
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(k) + 1);
    for (int r = 0; r <= k; ++r) out.push_back(a[r] - b[r]);
    return TruncatedSeries(std::move(out));
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a) {
    std::vector<R> out;
    for (const auto& x : a.c_) out.push_back(Traits::scale(x, Rational(-1)));
    return TruncatedSeries(std::move(out));
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int k = std::min(a.order(), b.order());
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(k) + 1);
    for (int r = 0; r <= k; ++r) {
      R acc = a[0] * b[r];
      for (int i = 1; i <= r; ++i) acc = acc + a[i] * b[r - i];
      out.push_back(std::move(acc));
    }
    return TruncatedSeries(std::move(out));
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& s) {
    std::vector<R> out;
    for (const auto& x : a.c_) out.push_back(Traits::scale(x, s));
    return TruncatedSeries(std::move(out));
  }
  friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) { return a * s; }
  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  /// Equality up to the smaller order.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int k = std::min(a.order(), b.order());
    for (int r = 0; r <= k; ++r)
      if (!(a[r] == b[r])) return false;
    return true;
  }

  /// Two-sided inverse; requires an invertible constant term.
  TruncatedSeries inverse() const {
    const R c0inv = Traits::inverse(c_[0]);
    std::vector<R> out;
    out.reserve(c_.size());
    out.push_back(c0inv);
    for (int k = 1; k <= order(); ++k) {
      R acc = (*this)[1] * out[static_cast<std::size_t>(k - 1)];
      for (int j = 2; j <= k; ++j) acc = acc + (*this)[j] * out[static_cast<std::size_t>(k - j)];
      out.push_back(Traits::scale(c0inv * acc, Rational(-1)));
    }
    return TruncatedSeries(std::move(out));
  }

  /// Substitutes u -> a*u + b (a != 0). Exact to the same order because
  /// (a u + b)^{-r} = a^{-r} u^{-r} (1 + (b/a) u^{-1})^{-r}.
  TruncatedSeries substitute_affine(const Rational& a, const Rational& b) const {
    if (a == 0) throw InvalidInput("affine substitution with zero slope");
    const Rational ratio = b / a;
    std::vector<R> out(c_.size(), Traits::zero_like(c_[0]));
    out[0] = c_[0];
    for (int r = 1; r <= order(); ++r) {
      const Rational scale = 1 / yosp::pow(a, static_cast<unsigned>(r));
      for (int j = 0; r + j <= order(); ++j) {
        Rational coef = scale * negative_binomial(static_cast<unsigned>(r), static_cast<unsigned>(j)) *
                        yosp::pow(ratio, static_cast<unsigned>(j));
        if (coef == 0) continue;
        out[static_cast<std::size_t>(r + j)] = out[static_cast<std::size_t>(r + j)] + Traits::scale(c_[static_cast<std::size_t>(r)], coef);
      }
    }
    return TruncatedSeries(std::move(out));
  }

  /// shift_argument: u -> u + c.
  TruncatedSeries shifted(const Rational& c) const { return substitute_affine(Rational(1), c); }

  /// Applies `f` to every coefficient (e.g. to act on a vector).
  template <class F>
  auto map(F&& f) const {
    using Out = decltype(f(c_[0]));
    std::vector<Out> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(f(x));
    return TruncatedSeries<Out>(std::move(out));
  }

 private:
  std::vector<R> c_;
};

template <class R>
TruncatedSeries<R> series_add(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) { return a + b; }
template <class R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) { return a * b; }
template <class R>
TruncatedSeries<R> series_inverse(const TruncatedSeries<R>& a) { return a.inverse(); }
template <class R>
TruncatedSeries<R> shift_argument(const TruncatedSeries<R>& s, const Rational& c) { return s.shifted(c); }

using ScalarSeries = TruncatedSeries<Rational>;

inline std::string to_string(const ScalarSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (int r = 0; r <= s.order(); ++r) {
    if (s[r] == 0) continue;
    os << (first ? "" : " + ") << to_string(s[r]);
    if (r) os << "*u^-" << r;
    first = false;
  }
  if (first) os << "0";
  os << " + O(u^-" << s.order() + 1 << ")";
  return os.str();
}

}  // namespace yosp

namespace yosp {

template <class R>
struct RingTraits<TruncatedSeries<R>> {
  using S = TruncatedSeries<R>;
  static S zero_like(const S& x) { return S::zero(x[0], x.order()); }
  static S one_like(const S& x) { return S::one(x[0], x.order()); }
  static bool is_zero(const S& x) { return x.is_zero(); }
  static S inverse(const S& x) { return x.inverse(); }
  static S scale(const S& x, const Rational& c) { return x * c; }
};

}  // namespace yosp
