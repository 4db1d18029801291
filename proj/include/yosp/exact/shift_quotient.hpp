#pragma once

#include <map>
#include <optional>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/exact/polynomial.hpp"
#include "yosp/exact/rational_function.hpp"
#include "yosp/exact/roots.hpp"

namespace yosp {

/// Roots of Q (with multiplicity) such that Q(u + step)/Q(u) = f, or nullopt.
///
/// Zeros of f count +1 and poles -1. A root x of Q contributes a zero at
/// x - step and a pole at x, so the multiplicity of x in Q is
///     m(x) = -sum_{k >= 0} chi(x + step*k),
/// which must be nonnegative everywhere, and chi must sum to zero on every
/// coset x + step*Z.
inline std::optional<RootMultiset> shift_quotient_roots(const RationalFunction& f, const Rational& step) {
  if (step <= 0) throw InvalidInput("shift quotient step must be positive");
  if (f.is_zero()) throw InvalidInput("shift quotient of the zero function");
  const Polynomial& num = f.numer();
  const Polynomial& den = f.denom();
  if (num.degree() != den.degree() || num.leading() != 1) return std::nullopt;
  if (num.degree() == 0) return RootMultiset{};

  auto [zeros, zrest] = rational_roots(num);
  auto [poles, prest] = rational_roots(den);
  if (zrest.degree() > 0 || prest.degree() > 0)
    throw UnsupportedRoot("shift quotient: f has irrational zeros or poles (" + f.to_string() + ")");

  std::map<Rational, int> chi;
  for (const auto& [r, k] : zeros) chi[r] += k;
  for (const auto& [r, k] : poles) chi[r] -= k;

  // Group support points by coset of step*Z; representatives are canonical
  // fractional parts of x/step.
  std::map<Rational, std::vector<Rational>> cosets;
  for (const auto& [x, k] : chi) {
    if (k == 0) continue;
    Rational t = x / step;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    cosets[Rational(t - Rational(fl))].push_back(x);
  }

  RootMultiset q;
  for (auto& [rep, pts] : cosets) {
    // pts ascending (map order); walk downwards from the top point
    int running = 0;  // m at the current position
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
      const Rational& x = *it;
      running -= chi[x];  // m(x) = m(x + step) - chi(x)
      if (running < 0) return std::nullopt;
      auto next = std::next(it);
      if (running > 0) {
        // m is constant on the open gap down to the next support point
        Rational lower = next == pts.rend() ? x : *next + step;
        Rational span = (x - lower) / step;
        if (span > 100000) throw InvalidInput("shift quotient witness degree too large");
        for (Rational y = x; y >= lower; y -= step) q.add(y, running);
      }
    }
    if (running != 0) return std::nullopt;  // coset total must vanish
  }
  return q;
}

/// shift_quotient_witness: monic Q with Q(u + step)/Q(u) = f exactly, or nullopt.
inline std::optional<Polynomial> shift_quotient_witness(const RationalFunction& f, const Rational& step) {
  auto roots = shift_quotient_roots(f, step);
  if (!roots) return std::nullopt;
  return Polynomial::from_roots(roots->elements());
}

/// Checks Q(u + step)/Q(u) == f by expansion.
inline bool is_shift_quotient(const RationalFunction& f, const Polynomial& q, const Rational& step) {
  if (q.is_zero() || !q.is_monic()) return false;
  return RationalFunction(q.shifted(step), q) == f;
}

}  // namespace yosp
