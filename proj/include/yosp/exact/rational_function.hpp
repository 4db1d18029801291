#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "yosp/errors.hpp"
#include "yosp/exact/polynomial.hpp"

namespace yosp {

/// Reduced quotient numer/denom with a monic denominator and gcd(numer, denom) = 1.
/// Because the form is canonical, structural equality is equality of functions.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(Polynomial numer) : num_(std::move(numer)), den_(1) {}  // NOLINT implicit
  RationalFunction(const Rational& c) : num_(c), den_(1) {}               // NOLINT implicit
  RationalFunction(long c) : num_(c), den_(1) {}                           // NOLINT implicit
  RationalFunction(Polynomial numer, Polynomial denom) : num_(std::move(numer)), den_(std::move(denom)) {
    reduce();
  }

  const Polynomial& numer() const { return num_; }
  const Polynomial& denom() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == Polynomial(1) && den_ == Polynomial(1); }

  Rational operator()(const Rational& u) const {
    Rational d = den_(u);
    if (d == 0) throw PoleError("rational function evaluated at a pole u = " + yosp::to_string(u));
    return num_(u) / d;
  }

  /// Finite value at u = infinity, or nullopt-like failure via exception when the
  /// function has a pole there.
  Rational value_at_infinity() const {
    if (num_.degree() > den_.degree()) throw PoleError("rational function has a pole at infinity");
    if (num_.degree() < den_.degree()) return 0;
    return num_.leading();  // denominator is monic
  }

  RationalFunction substitute_affine(const Rational& a, const Rational& b) const {
    return {num_.substitute_affine(a, b), den_.substitute_affine(a, b)};
  }
  RationalFunction shifted(const Rational& c) const { return substitute_affine(Rational(1), c); }

  RationalFunction pow(int e) const {
    if (e >= 0) return {num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e))};
    if (is_zero()) throw InvalidInput("negative power of zero");
    return {den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e))};
  }

  RationalFunction inverse() const {
    if (is_zero()) throw InvalidInput("inverse of the zero rational function");
    return {den_, num_};
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw InvalidInput("division by the zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const {
    if (den_ == Polynomial(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void reduce() {
    if (den_.is_zero()) throw InvalidInput("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
      num_ = num_ * Polynomial(Rational(1 / lead));
      den_ = den_.monic();
    }
  }

  Polynomial num_;
  Polynomial den_;
};

/// rf_reduce: builds the canonical form of numer/denom.
inline RationalFunction rf_reduce(const Polynomial& numer, const Polynomial& denom) {
  if (denom.is_zero()) throw InvalidInput("rf_reduce: zero denominator");
  return {numer, denom};
}

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& x) { return os << x.to_string(); }

}  // namespace yosp
