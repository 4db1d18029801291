#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/exact/roots.hpp"
#include "yosp/hw/highest_weight.hpp"
#include "yosp/series/factored_series.hpp"

namespace yosp {

/// alpha = prod (1 + alpha_i u^-1) gamma, beta = prod (1 + beta_i u^-1) gamma with
/// alpha_i != beta_j, gamma taking the maximal common part.
struct OddPair {
  std::vector<Rational> alpha_params, beta_params;
  FactoredSeries gamma;
  std::size_t p() const { return alpha_params.size(); }
};

/// The ratio alpha/beta, reduced, gives both parameter lists; zero parameters pad
/// the shorter one.
inline OddPair split_odd_pair(const FactoredSeries& alpha, const FactoredSeries& beta) {
  const RationalFunction r = (alpha / beta).rational();
  auto params = [&](const Polynomial& p) {
    auto [roots, rest] = rational_roots(p);
    if (rest.degree() > 0) throw UnsupportedRoot("odd reflection: irrational parameters in " + r.to_string());
    std::vector<Rational> out;
    for (const auto& x : roots.elements()) out.push_back(-x);
    std::sort(out.begin(), out.end());
    return out;
  };
  OddPair out{params(r.numer()), params(r.denom()), FactoredSeries()};
  out.gamma = beta / FactoredSeries::from_parameters(out.beta_params);
  return out;
}

inline std::vector<Rational> shift_all(std::vector<Rational> v, const Rational& c) {
  for (auto& x : v) x += c;
  return v;
}

struct OddReflection {
  FactoredSeries first, second;  ///< (beta^[1], alpha^[1])
  std::size_t p = 0;
};

/// (alpha, beta) -> (beta^[1], alpha^[1]): surviving parameters move by +1 and swap places.
inline OddReflection odd_reflection_A(const FactoredSeries& alpha, const FactoredSeries& beta) {
  const OddPair s = split_odd_pair(alpha, beta);
  OddReflection out;
  out.p = s.p();
  out.first = s.gamma * FactoredSeries::from_parameters(shift_all(s.beta_params, Rational(1)));
  out.second = s.gamma * FactoredSeries::from_parameters(shift_all(s.alpha_params, Rational(1)));
  return out;
}

struct Osp22Reflection {
  FactoredSeries lambda1, lambda2, lambda2p;
  std::size_t p = 0;
};

/// The parameters of lambda_1 and lambda_2 as equal-length lists (zero padded),
/// required to be polynomials in u^-1 with no parameter in common.
inline std::pair<std::vector<Rational>, std::vector<Rational>> osp22_parameters(const FactoredSeries& l1, const FactoredSeries& l2) {
  auto a = l1.polynomial_parameters();
  auto b = l2.polynomial_parameters();
  if (!a) throw NotApplicable("lambda_1 is not a polynomial in u^-1: " + l1.to_string());
  if (!b) throw NotApplicable("lambda_2 is not a polynomial in u^-1: " + l2.to_string());
  const std::size_t p = std::max(a->size(), b->size());
  a->resize(p, Rational(0));
  b->resize(p, Rational(0));
  if (!disjoint(RootMultiset::from_list(*a), RootMultiset::from_list(*b)))
    throw NotApplicable("lambda_1 and lambda_2 share a parameter; the reflection needs alpha_i != beta_j");
  return {*a, *b};
}

/// ((u+1)/u)^p lambda_2(u+1), ((u+1)/u)^p lambda_1(u+1), ((u-1)/u)^p lambda_2(u-1) lambda_2'(u) / lambda_1(u)
inline Osp22Reflection odd_reflection_osp22(const FactoredSeries& l1, const FactoredSeries& l2, const FactoredSeries& l2p) {
  const auto [a, b] = osp22_parameters(l1, l2);
  const int p = static_cast<int>(a.size());
  const Polynomial u = Polynomial::variable();
  const FactoredSeries up = FactoredSeries::from_rational(RationalFunction(u + Polynomial(1), u)).pow(p);
  const FactoredSeries down = FactoredSeries::from_rational(RationalFunction(u - Polynomial(1), u)).pow(p);
  const Rational one(1);
  return {up * l2.shifted(one), up * l1.shifted(one), down * l2.shifted(-one) * l2p / l1, a.size()};
}

struct ChainStep {
  std::size_t p = 0;
  /// parameters cancelled into gamma, counted against the common u^-1 degree of the
  /// weight (unset when some component is not a polynomial in u^-1)
  std::optional<std::size_t> cancelled;
};

struct ChainResult {
  FactoredSeries lambda_m;                ///< lambda_m^[n-1]
  std::vector<FactoredSeries> reflected;  ///< lambda^[1]_{m+1}, ..., lambda^[1]_{m+n-1}
  std::vector<ChainStep> steps;

  /// Every step kept a full set of parameters (no equality lambda_m + l = lambda_{m+l+1} hit).
  bool generic() const {
    return std::all_of(steps.begin(), steps.end(), [](const ChainStep& s) { return s.cancelled && *s.cancelled == 0; });
  }
  std::string branch() const {
    for (std::size_t i = 0; i < steps.size(); ++i)
      if (!steps[i].cancelled) return "non-polynomial input at step " + std::to_string(i + 1);
      else if (*steps[i].cancelled) return "cancellation at step " + std::to_string(i + 1);
    return "generic";
  }
};

/// Degree in u^-1 when the series is a polynomial in u^-1.
inline std::optional<std::size_t> inverse_degree(const FactoredSeries& f) {
  const RationalFunction r = f.rational();
  if (r.denom() != Polynomial::variable().pow(static_cast<unsigned>(r.denom().degree()))) return std::nullopt;
  int low = 0;
  while (r.numer().coefficient(static_cast<std::size_t>(low)) == 0) ++low;
  return static_cast<std::size_t>(r.numer().degree() - low);
}

/// (lambda_m, lambda_{m+1}) -> (lambda^[1]_{m+1}, lambda^[1]_m), then
/// (lambda^[i]_m, lambda_{m+i+1}) -> (lambda^[1]_{m+i+1}, lambda^[i+1]_m) for i = 1..n-2.
inline ChainResult chain_reflection(const HighestWeight& hw) {
  const int m = hw.context.m(), n = hw.context.n();
  if (hw.context.sequence_string() != std::string(static_cast<std::size_t>(m), '1') + std::string(static_cast<std::size_t>(n), '0'))
    throw ContextMismatch("the reflection chain starts from the standard parity sequence");
  if (m < 1) throw NotApplicable("the reflection chain needs m >= 1");
  // common u^-1 degree of lambda_m, ..., lambda_{m+n} when all are polynomials; each
  // step then cancels p0 - p equal parameters
  std::optional<std::size_t> p0 = 0;
  for (int i = m; i <= m + n && p0; ++i) {
    auto d = inverse_degree(hw.lambda(i));
    p0 = d ? std::optional<std::size_t>(std::max(*p0, *d)) : std::nullopt;
  }
  ChainResult out;
  out.lambda_m = hw.lambda(m);
  for (int i = 1; i <= n - 1; ++i) {
    const OddReflection r = odd_reflection_A(out.lambda_m, hw.lambda(m + i));
    ChainStep step{r.p, std::nullopt};
    if (p0) step.cancelled = *p0 - r.p;
    out.steps.push_back(step);
    out.reflected.push_back(r.first);
    out.lambda_m = r.second;
  }
  return out;
}

}  // namespace yosp
