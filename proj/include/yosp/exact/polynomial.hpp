#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/exact/rational.hpp"

namespace yosp {

/// Univariate polynomial in u over the rationals, coefficients ascending.
/// The coefficient vector never has trailing zeros; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<Rational> coefficients) : c_(coefficients) { trim(); }
  Polynomial(const Rational& constant) : c_{constant} { trim(); }  // NOLINT implicit scalar
  Polynomial(long constant) : Polynomial(Rational(constant)) {}     // NOLINT implicit scalar

  static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }

  /// (u - root)
  static Polynomial linear_factor(const Rational& root) { return Polynomial({Rational(-root), Rational(1)}); }

  /// Monic polynomial with the given roots, repeated per occurrence.
  static Polynomial from_roots(const std::vector<Rational>& roots) {
    Polynomial p(1);
    for (const auto& r : roots) p *= linear_factor(r);
    return p;
  }

  const std::vector<Rational>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const {
    if (c_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Rational lead = leading();
    Polynomial p = *this;
    for (auto& x : p.c_) x /= lead;
    return p;
  }

  Rational operator()(const Rational& u) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division: returns (quotient, remainder).
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    Polynomial rem = a;
    const int db = b.degree();
    if (rem.degree() < db) return {Polynomial(), rem};
    std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - db + 1), Rational(0));
    const Rational lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
      const int shift = rem.degree() - db;
      Rational q = rem.leading() / lead;
      quot[static_cast<std::size_t>(shift)] = q;
      for (int k = 0; k <= db; ++k) rem.c_[static_cast<std::size_t>(k + shift)] -= q * b.c_[static_cast<std::size_t>(k)];
      rem.trim();
    }
    return {Polynomial(std::move(quot)), rem};
  }

  /// Monic gcd; gcd(0, 0) = 0.
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// p(a*u + b)
  Polynomial substitute_affine(const Rational& a, const Rational& b) const {
    Polynomial lin({b, a});
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Polynomial(*it);
    return acc;
  }

  /// p(u + c)
  Polynomial shifted(const Rational& c) const { return substitute_affine(Rational(1), c); }

  Polynomial pow(unsigned e) const {
    Polynomial result(1), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  std::string to_string(const std::string& var = "u") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Rational& x = c_[static_cast<std::size_t>(k)];
      if (x == 0) continue;
      Rational mag = abs(x);
      if (!first) os << (x < 0 ? " - " : " + ");
      else if (x < 0) os << "-";
      first = false;
      if (k == 0 || mag != 1) os << yosp::to_string(mag);
      if (k > 0) {
        if (mag != 1) os << "*";
        os << var;
        if (k > 1) os << "^" << k;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    for (auto& c : c_) c.canonicalize();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& x) { return os << x.to_string(); }

}  // namespace yosp
