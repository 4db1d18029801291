#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/exact/rational.hpp"
#include "yosp/superlinalg/context.hpp"

namespace yosp::sampling {

/// Rational p/q with |p| <= 50 and 1 <= q <= 50 from a seeded generator.
inline Rational draw(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
  const long p = num(rng);
  const long q = den(rng);
  return make_rational(p, q);
}

/// Pairs (u, v) accepted by `ok`; rejection sampling with a bounded number of draws.
inline std::vector<std::pair<Rational, Rational>> sample_pairs_if(
    std::size_t count, std::uint64_t seed, const std::function<bool(const Rational&, const Rational&)>& ok) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Rational, Rational>> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 1000 * (count + 1)) throw InvalidInput("could not draw enough non-pole sample points");
    Rational u = draw(rng), v = draw(rng);
    if (ok(u, v)) out.emplace_back(std::move(u), std::move(v));
  }
  return out;
}

/// Pairs with u, v, u - v all away from the R-matrix poles {0, kappa}.
inline std::vector<std::pair<Rational, Rational>> sample_pairs(const AlgebraContext& ctx, std::size_t count, std::uint64_t seed) {
  const Rational kappa(ctx.kappa());
  auto regular = [&](const Rational& x) { return x != 0 && x != kappa; };
  return sample_pairs_if(count, seed, [&](const Rational& u, const Rational& v) { return regular(u) && regular(v) && regular(u - v); });
}

}  // namespace yosp::sampling
