#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/exact/polynomial.hpp"
#include "yosp/exact/rational.hpp"

namespace yosp {

/// Multiset of rationals; every stored multiplicity is >= 1.
class RootMultiset {
 public:
  using Map = std::map<Rational, int>;

  RootMultiset() = default;
  RootMultiset(std::initializer_list<std::pair<const Rational, int>> items) {
    for (const auto& [r, k] : items) add(r, k);
  }
  static RootMultiset from_list(const std::vector<Rational>& values) {
    RootMultiset s;
    for (const auto& v : values) s.add(v);
    return s;
  }

  void add(const Rational& r, int count = 1) {
    if (count < 0) throw InvalidInput("negative multiplicity");
    if (count == 0) return;
    items_[r] += count;
  }
  /// Removes up to `count` copies; returns how many were removed.
  int remove(const Rational& r, int count = 1) {
    auto it = items_.find(r);
    if (it == items_.end()) return 0;
    int taken = std::min(count, it->second);
    it->second -= taken;
    if (it->second == 0) items_.erase(it);
    return taken;
  }

  int multiplicity(const Rational& r) const {
    auto it = items_.find(r);
    return it == items_.end() ? 0 : it->second;
  }
  int size() const {
    int total = 0;
    for (const auto& [r, k] : items_) total += k;
    return total;
  }
  bool empty() const { return items_.empty(); }
  const Map& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  /// Elements with repetition, ascending.
  std::vector<Rational> elements() const {
    std::vector<Rational> out;
    for (const auto& [r, k] : items_)
      for (int i = 0; i < k; ++i) out.push_back(r);
    return out;
  }

  RootMultiset shifted(const Rational& c) const {
    RootMultiset s;
    for (const auto& [r, k] : items_) s.add(r + c, k);
    return s;
  }

  friend RootMultiset intersection(const RootMultiset& a, const RootMultiset& b) {
    RootMultiset s;
    for (const auto& [r, k] : a.items_) s.add(r, std::min(k, b.multiplicity(r)));
    return s;
  }
  friend RootMultiset operator+(RootMultiset a, const RootMultiset& b) {
    for (const auto& [r, k] : b.items_) a.add(r, k);
    return a;
  }
  /// Multiset difference; b must be contained in a.
  friend RootMultiset operator-(RootMultiset a, const RootMultiset& b) {
    for (const auto& [r, k] : b.items_)
      if (a.remove(r, k) != k) throw InvalidInput("multiset difference of a non-subset");
    return a;
  }
  friend bool operator==(const RootMultiset& a, const RootMultiset& b) { return a.items_ == b.items_; }
  friend bool disjoint(const RootMultiset& a, const RootMultiset& b) {
    for (const auto& [r, k] : a.items_)
      if (b.multiplicity(r)) return false;
    return true;
  }

 private:
  Map items_;
};

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  if (n == 0) throw InvalidInput("divisors of zero");
  std::vector<std::pair<Integer, int>> factors;
  Integer p = 2;
  Integer rest = n;
  while (p * p <= rest) {
    if (p > 1000000) {
      // Large cofactors only arise from enormous coefficients.
      if (mpz_probab_prime_p(rest.get_mpz_t(), 30) == 0)
        throw UnsupportedRoot("coefficient too large to factor for rational-root search");
      break;
    }
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
    p += (p == 2) ? 1 : 2;
  }
  if (rest > 1) factors.emplace_back(rest, 1);
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [prime, e] : factors) {
    std::size_t current = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < current; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

/// Integer coefficients with the same roots.
inline std::vector<Integer> integer_coefficients(const Polynomial& p) {
  Integer lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  for (const auto& c : p.coefficients()) out.push_back(Integer(c * lcm));
  return out;
}

}  // namespace detail

/// Splits off all rational roots: p = remainder * prod (u - r)^mult, with the
/// remainder free of rational roots.
inline std::pair<RootMultiset, Polynomial> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw InvalidInput("rational_roots of the zero polynomial");
  RootMultiset roots;
  Polynomial rest = p;
  // zero roots first so the constant term is nonzero below
  while (rest.degree() > 0 && rest.coefficient(0) == 0) {
    rest = divmod(rest, Polynomial::variable()).first;
    roots.add(Rational(0));
  }
  if (rest.degree() <= 0) return {roots, rest};
  auto ints = detail::integer_coefficients(rest);
  auto num_divs = detail::positive_divisors(ints.front());
  auto den_divs = detail::positive_divisors(ints.back());
  std::vector<Rational> candidates;
  for (const auto& a : num_divs)
    for (const auto& b : den_divs) {
      Rational r(a, b);
      r.canonicalize();
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& r : candidates) {
    while (rest.degree() > 0 && rest(r) == 0) {
      rest = divmod(rest, Polynomial::linear_factor(r)).first;
      roots.add(r);
    }
  }
  return {roots, rest};
}

}  // namespace yosp
