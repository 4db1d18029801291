#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/exact/rational.hpp"
#include "yosp/series/ring_traits.hpp"
#include "yosp/superlinalg/context.hpp"

namespace yosp {

/// Square matrix over an arbitrary (possibly noncommutative) ring.
template <class E>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t n, E fill) : n_(n), cells_(n * n, std::move(fill)) {}
  Grid(std::size_t n, std::vector<E> cells) : n_(n), cells_(std::move(cells)) {
    if (cells_.size() != n * n) throw InvalidInput("grid needs n*n cells");
  }

  std::size_t size() const { return n_; }
  E& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  const std::vector<E>& cells() const { return cells_; }

  template <class F>
  auto map(F&& f) const {
    using Out = decltype(f(cells_[0]));
    std::vector<Out> out;
    out.reserve(cells_.size());
    for (const auto& c : cells_) out.push_back(f(c));
    return Grid<Out>(n_, std::move(out));
  }

  /// Ordinary matrix product (the sign convention for even matrices makes the
  /// product of embedded matrices the plain row-by-column product).
  friend Grid operator*(const Grid& a, const Grid& b) {
    if (a.n_ != b.n_) throw InvalidInput("grid product with mismatched sizes");
    std::vector<E> out;
    out.reserve(a.cells_.size());
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = 0; j < a.n_; ++j) {
        E acc = a(i, 0) * b(0, j);
        for (std::size_t k = 1; k < a.n_; ++k) acc = acc + a(i, k) * b(k, j);
        out.push_back(std::move(acc));
      }
    return Grid(a.n_, std::move(out));
  }
  friend Grid operator+(const Grid& a, const Grid& b) {
    std::vector<E> out;
    for (std::size_t k = 0; k < a.cells_.size(); ++k) out.push_back(a.cells_[k] + b.cells_[k]);
    return Grid(a.n_, std::move(out));
  }
  friend Grid operator-(const Grid& a, const Grid& b) {
    std::vector<E> out;
    for (std::size_t k = 0; k < a.cells_.size(); ++k) out.push_back(a.cells_[k] - b.cells_[k]);
    return Grid(a.n_, std::move(out));
  }
  friend bool operator==(const Grid& a, const Grid& b) { return a.n_ == b.n_ && a.cells_ == b.cells_; }

 private:
  std::size_t n_ = 0;
  std::vector<E> cells_;
};

/// Even matrix [a_ij] over an algebra, indexed by the basis of C^{2n|2m} of a
/// context. `module` records the grading of the space the entries act on when
/// the entries are operators (empty for scalar entries).
template <class E>
struct SuperMatrix {
  AlgebraContext context;
  Parities module;
  Grid<E> entries;

  std::size_t size() const { return entries.size(); }
  E& operator()(std::size_t i, std::size_t j) { return entries(i, j); }
  const E& operator()(std::size_t i, std::size_t j) const { return entries(i, j); }
};

/// (A^t)_ij = a_{j'i'} (-1)^{|i||j| + |j|} theta_i theta_j
template <class E>
Grid<E> super_transpose(const AlgebraContext& ctx, const Grid<E>& a) {
  const std::size_t n = ctx.dim();
  if (a.size() != n) throw ContextMismatch("super_transpose: matrix size does not match the context");
  std::vector<E> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned pi = ctx.parity(i), pj = ctx.parity(j);
      const int sign = koszul_sign(pi * pj + pj) * ctx.theta(i) * ctx.theta(j);
      const E& src = a(ctx.prime(j), ctx.prime(i));
      out.push_back(sign == 1 ? src : RingTraits<E>::scale(src, Rational(-1)));
    }
  return Grid<E>(n, std::move(out));
}

template <class E>
SuperMatrix<E> super_transpose(const SuperMatrix<E>& a) {
  return {a.context, a.module, super_transpose(a.context, a.entries)};
}

}  // namespace yosp
