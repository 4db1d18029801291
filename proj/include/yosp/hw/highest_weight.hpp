#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/exact/roots.hpp"
#include "yosp/series/factored_series.hpp"
#include "yosp/superlinalg/context.hpp"

namespace yosp {

/// lambda_1..lambda_{m+n} together with lambda_{(m+n)'}; the remaining primed
/// components follow from the consistency conditions.
struct HighestWeight {
  AlgebraContext context;
  std::vector<FactoredSeries> components;
  FactoredSeries last;

  HighestWeight() = default;
  HighestWeight(AlgebraContext ctx, std::vector<FactoredSeries> comps, FactoredSeries last_component)
      : context(std::move(ctx)), components(std::move(comps)), last(std::move(last_component)) {
    if (components.size() != static_cast<std::size_t>(context.rank()))
      throw InvalidInput("highest weight needs " + std::to_string(context.rank()) + " components, got " +
                         std::to_string(components.size()));
  }

  static HighestWeight trivial(const AlgebraContext& ctx) {
    return HighestWeight(ctx, std::vector<FactoredSeries>(static_cast<std::size_t>(ctx.rank())), FactoredSeries());
  }

  /// 1-based as in lambda_i, i = 1..m+n.
  const FactoredSeries& lambda(int i) const { return components.at(static_cast<std::size_t>(i - 1)); }

  friend bool operator==(const HighestWeight& a, const HighestWeight& b) {
    return a.context == b.context && a.components == b.components && a.last == b.last;
  }
};

/// -n + m + 1 + (-1)^{s_1} + ... + (-1)^{s_i}
inline Rational consistency_shift(const AlgebraContext& ctx, int i) {
  int s = -ctx.n() + ctx.m() + 1;
  for (int k = 0; k < i; ++k) s += ctx.sequence()[static_cast<std::size_t>(k)] ? -1 : 1;
  return Rational(s);
}

/// All 2(m+n) components lambda_1, ..., lambda_{m+n}, lambda_{(m+n)'}, ..., lambda_{1'}
/// (0-based position j holds lambda for basis index j).
inline std::vector<FactoredSeries> consistency_extend(const HighestWeight& hw) {
  const int r = hw.context.rank();
  const std::size_t n = hw.context.dim();
  std::vector<FactoredSeries> out(n);
  for (int i = 0; i < r; ++i) out[static_cast<std::size_t>(i)] = hw.components[static_cast<std::size_t>(i)];
  out[static_cast<std::size_t>(r)] = hw.last;
  // lambda_{i'}(u) = lambda_{i+1}(u - s) lambda_{(i+1)'}(u) / lambda_i(u - s)
  for (int i = r - 1; i >= 1; --i) {
    const Rational s = consistency_shift(hw.context, i);
    const FactoredSeries& next_primed = out[n - 1 - static_cast<std::size_t>(i)];
    out[n - static_cast<std::size_t>(i)] = hw.lambda(i + 1).shifted(-s) * next_primed / hw.lambda(i).shifted(-s);
  }
  return out;
}

/// Eigenvalue of c(u): lambda_1(u) lambda_{1'}(u - n + m + 1).
inline FactoredSeries central_eigenvalue(const HighestWeight& hw) {
  const auto full = consistency_extend(hw);
  return full.front() * full.back().shifted(Rational(-hw.context.n() + hw.context.m() + 1));
}

inline HighestWeight twist(const HighestWeight& hw, const FactoredSeries& f) {
  HighestWeight out = hw;
  for (auto& c : out.components) c = c * f;
  out.last = out.last * f;
  return out;
}

/// Rational g with g(u) g(u+1) = y and g(infinity) = 1, when one exists.
/// On divisors this is D(x) + D(x+1) = E(x), solved downwards along each coset of Z.
inline std::optional<RationalFunction> solve_product_shift(const RationalFunction& y) {
  if (y.is_zero() || y.numer().degree() != y.denom().degree() || y.numer().leading() != 1 || y.denom().leading() != 1)
    throw InvalidInput("solve_product_shift needs a function equal to 1 at infinity");
  auto [zeros, zrest] = rational_roots(y.numer());
  auto [poles, prest] = rational_roots(y.denom());
  if (zrest.degree() > 0 || prest.degree() > 0) throw UnsupportedRoot("twist: irrational zeros or poles in " + y.to_string());
  std::map<Rational, int> e;
  for (const auto& [x, k] : zeros) e[x] += k;
  for (const auto& [x, k] : poles) e[x] -= k;
  std::map<Rational, std::vector<Rational>> cosets;
  for (const auto& [x, k] : e) {
    if (!k) continue;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    cosets[Rational(x - Rational(fl))].push_back(x);
  }
  Polynomial num(1), den(1);
  for (const auto& [rep, pts] : cosets) {
    const Rational top = pts.back(), bottom = pts.front();
    int d_above = 0;
    for (Rational x = top; x >= bottom; x -= 1) {
      const int d = (e.count(x) ? e[x] : 0) - d_above;
      if (d > 0) num *= Polynomial::linear_factor(x).pow(static_cast<unsigned>(d));
      if (d < 0) den *= Polynomial::linear_factor(x).pow(static_cast<unsigned>(-d));
      d_above = d;
    }
    // below the support E vanishes, so D alternates in sign forever unless it stops here
    if (d_above != 0) return std::nullopt;
  }
  return RationalFunction(num, den);
}

/// Twist f making lambda_{m+n}(u) lambda_{(m+n)'}(u+1) = 1, if a rational one exists.
inline std::optional<FactoredSeries> normalizing_twist(const HighestWeight& hw) {
  const FactoredSeries x = hw.components.back() * hw.last.shifted(Rational(1));
  auto g = solve_product_shift(x.rational().inverse());
  if (!g) return std::nullopt;
  return FactoredSeries::from_rational(*g);
}

inline bool is_normalized(const HighestWeight& hw) { return (hw.components.back() * hw.last.shifted(Rational(1))).is_one(); }

/// Componentwise product: the highest weight of xi (x) eta in a tensor product.
inline HighestWeight tensor_highest_weight(const HighestWeight& a, const HighestWeight& b) {
  if (!(a.context == b.context)) throw ContextMismatch("tensor_highest_weight: contexts differ");
  HighestWeight out = a;
  for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i] = factored_mul(a.components[i], b.components[i]);
  out.last = factored_mul(a.last, b.last);
  return out;
}

/// u -> u + c on every component.
inline HighestWeight shifted(const HighestWeight& hw, const Rational& c) {
  HighestWeight out = hw;
  for (auto& x : out.components) x = x.shifted(c);
  out.last = out.last.shifted(c);
  return out;
}

}  // namespace yosp
