#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/exact/rational_function.hpp"
#include "yosp/exact/roots.hpp"
#include "yosp/series/truncated_series.hpp"

namespace yosp {

/// Expansion of a rational function regular at u = infinity as a series in u^{-1}.
inline ScalarSeries rf_to_series(const RationalFunction& f, int order) {
  const Polynomial& n = f.numer();
  const Polynomial& d = f.denom();
  if (n.degree() > d.degree()) throw InvalidInput("rf_to_series: pole at infinity in " + f.to_string());
  const int deg = d.degree();
  // With w = 1/u: f = (sum_k n_k w^{deg-k}) / (sum_k d_k w^{deg-k}).
  auto reversed = [&](const Polynomial& p) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int k = 0; k <= p.degree(); ++k) {
      int power = deg - k;
      if (power <= order) c[static_cast<std::size_t>(power)] = p.coefficient(static_cast<std::size_t>(k));
    }
    return ScalarSeries(std::move(c));
  };
  return reversed(n) * reversed(d).inverse();
}

/// prod_a (1 + a u^{-1})^{mult(a)} * tail(u), an element of 1 + u^{-1} Q[[u^{-1}]].
///
/// The parameter multiset is kept apart from the tail so that reflections,
/// which shift parameters, stay multiset edits. The split is not canonical:
/// equality compares the underlying functions.
class FactoredSeries {
 public:
  FactoredSeries() : tail_(1) {}
  explicit FactoredSeries(RootMultiset params, RationalFunction tail = RationalFunction(1))
      : params_(std::move(params)), tail_(std::move(tail)) {
    check_tail();
  }
  static FactoredSeries linear(const Rational& a) { return FactoredSeries(RootMultiset{{a, 1}}); }
  static FactoredSeries from_rational(const RationalFunction& f) { return FactoredSeries(RootMultiset{}, f); }
  static FactoredSeries from_parameters(const std::vector<Rational>& params) {
    return FactoredSeries(RootMultiset::from_list(params));
  }

  const RootMultiset& roots() const { return params_; }
  const RationalFunction& tail() const { return tail_; }

  /// The function as a single reduced rational function in u.
  RationalFunction rational() const {
    Polynomial num(1);
    int count = 0;
    for (const auto& [a, k] : params_) {
      num *= Polynomial({a, Rational(1)}).pow(static_cast<unsigned>(k));
      count += k;
    }
    return RationalFunction(num, Polynomial::variable().pow(static_cast<unsigned>(count))) * tail_;
  }

  ScalarSeries to_series(int order) const {
    ScalarSeries s = ScalarSeries::one(Rational(1), order);
    for (const auto& [a, k] : params_) {
      std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
      c[0] = 1;
      if (order >= 1) c[1] = a;
      ScalarSeries lin(std::move(c));
      for (int i = 0; i < k; ++i) s = s * lin;
    }
    if (!tail_.is_one()) s = s * rf_to_series(tail_, order);
    return s;
  }

  friend FactoredSeries operator*(const FactoredSeries& a, const FactoredSeries& b) {
    return FactoredSeries(a.params_ + b.params_, a.tail_ * b.tail_);
  }
  /// Common parameters cancel; leftovers of the divisor move into the tail.
  friend FactoredSeries operator/(const FactoredSeries& a, const FactoredSeries& b) {
    RootMultiset common = intersection(a.params_, b.params_);
    RootMultiset rest_b = b.params_ - common;
    RationalFunction tail = a.tail_ / b.tail_;
    for (const auto& [x, k] : rest_b)
      tail *= RationalFunction(Polynomial::variable(), Polynomial({x, Rational(1)})).pow(k);
    return FactoredSeries(a.params_ - common, tail);
  }
  FactoredSeries inverse() const { return FactoredSeries() / *this; }

  /// u -> u + c: (1 + a/(u+c)) = (1 + (a+c)u^{-1}) * u/(u+c).
  FactoredSeries shifted(const Rational& c) const {
    if (c == 0) return *this;
    RationalFunction tail = tail_.shifted(c);
    int count = params_.size();
    if (count) tail *= RationalFunction(Polynomial::variable(), Polynomial({c, Rational(1)})).pow(count);
    return FactoredSeries(params_.shifted(c), tail);
  }

  FactoredSeries pow(int e) const {
    FactoredSeries base = e >= 0 ? *this : inverse();
    FactoredSeries out;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) out = out * base;
    return out;
  }

  friend bool operator==(const FactoredSeries& a, const FactoredSeries& b) { return a.rational() == b.rational(); }

  bool is_one() const { return rational().is_one(); }

  /// When the function is a polynomial in u^{-1} with rational roots, its nonzero
  /// parameters a_i (so that f = prod (1 + a_i u^{-1})), ascending.
  std::optional<std::vector<Rational>> polynomial_parameters() const {
    RationalFunction f = rational();
    const Polynomial& d = f.denom();
    if (d != Polynomial::variable().pow(static_cast<unsigned>(d.degree()))) return std::nullopt;
    if (f.numer().degree() != d.degree()) return std::nullopt;
    auto [zeros, rest] = rational_roots(f.numer());
    if (rest.degree() > 0) throw UnsupportedRoot("polynomial component with irrational roots: " + f.to_string());
    std::vector<Rational> params;
    for (const auto& z : zeros.elements()) params.push_back(-z);
    std::sort(params.begin(), params.end());
    return params;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& [a, k] : params_) {
      std::string factor = "(1 + " + yosp::to_string(a) + "*u^-1)";
      if (k > 1) factor += "^" + std::to_string(k);
      s += (s.empty() ? "" : "*") + factor;
    }
    if (!tail_.is_one() || s.empty()) s += (s.empty() ? "" : "*") + tail_.to_string();
    return s;
  }

 private:
  void check_tail() const {
    if (tail_.is_zero() || tail_.numer().degree() != tail_.denom().degree() || tail_.numer().leading() != 1)
      throw InvalidInput("series tail must be 1 at u = infinity: " + tail_.to_string());
  }

  RootMultiset params_;
  RationalFunction tail_;
};

inline ScalarSeries factored_to_series(const FactoredSeries& f, int order) { return f.to_series(order); }
inline FactoredSeries factored_mul(const FactoredSeries& a, const FactoredSeries& b) { return a * b; }
inline FactoredSeries factored_div(const FactoredSeries& a, const FactoredSeries& b) { return a / b; }

}  // namespace yosp
