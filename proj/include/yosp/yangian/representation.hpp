#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/exact/rational.hpp"
#include "yosp/series/truncated_series.hpp"
#include "yosp/superlinalg/context.hpp"
#include "yosp/superlinalg/graded.hpp"
#include "yosp/superlinalg/sparse_matrix.hpp"
#include "yosp/superlinalg/super_matrix.hpp"

namespace yosp {

using OperatorSeries = TruncatedSeries<SparseMatrix>;
/// T(u) with operator-valued series entries.
using OperatorGrid = Grid<OperatorSeries>;
/// T(u) evaluated at a point.
using PointGrid = Grid<SparseMatrix>;

/// A module over the extended Yangian of a context: the matrix T(u) as an
/// exact evaluation at rational points and as a series expansion in u^{-1}.
struct Representation {
  AlgebraContext context;
  Parities module;
  std::string label;
  /// T(u0); throws PoleError (or SingularSeries) where undefined.
  std::function<PointGrid(const Rational&)> at;
  /// T(u) to order K.
  std::function<OperatorGrid(int)> expand;

  std::size_t dim() const { return module.size(); }
  std::size_t size() const { return context.dim(); }
};

/// Operator-valued rational matrix with simple poles:
/// T_ij(u) = delta_ij + sum_k residues[k]_ij / (u - poles[k]).
struct SimplePoleMatrix {
  std::size_t dim = 0;
  std::vector<Rational> poles;
  std::vector<Grid<SparseMatrix>> residues;

  PointGrid at(const Rational& u, const Grid<SparseMatrix>& identity) const {
    for (const auto& p : poles)
      if (u == p) throw PoleError("representation evaluated at a pole u = " + to_string(u));
    PointGrid out = identity;
    for (std::size_t k = 0; k < poles.size(); ++k) {
      const Rational w = 1 / (u - poles[k]);
      out = out + residues[k].map([&](const SparseMatrix& m) { return m * w; });
    }
    return out;
  }

  /// 1/(u - p) = sum_{r >= 1} p^{r-1} u^{-r}
  OperatorGrid expand(int order, const Grid<SparseMatrix>& identity) const {
    const std::size_t n = identity.size();
    std::vector<OperatorSeries> cells;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<SparseMatrix> c(static_cast<std::size_t>(order) + 1, SparseMatrix(dim, dim));
        c[0] = identity(i, j);
        for (std::size_t k = 0; k < poles.size(); ++k) {
          const SparseMatrix& res = residues[k](i, j);
          if (res.is_zero()) continue;
          Rational pw = 1;
          for (int r = 1; r <= order; ++r) {
            c[static_cast<std::size_t>(r)] += res * pw;
            pw *= poles[k];
          }
        }
        cells.emplace_back(std::move(c));
      }
    return OperatorGrid(n, std::move(cells));
  }
};

/// Grid with Id on the diagonal and zero elsewhere.
inline Grid<SparseMatrix> identity_grid(std::size_t n, std::size_t dim) {
  Grid<SparseMatrix> g(n, SparseMatrix(dim, dim));
  for (std::size_t i = 0; i < n; ++i) g(i, i) = SparseMatrix::identity(dim);
  return g;
}

/// t_ij(u) = delta_ij + u^{-1} e_ij (-1)^{|i|} - (u + kappa)^{-1} e_{j'i'} (-1)^{|i||j|} theta_i theta_j
inline SimplePoleMatrix vector_representation_matrix(const AlgebraContext& ctx) {
  const std::size_t n = ctx.dim();
  SimplePoleMatrix out;
  out.dim = n;
  out.poles = {Rational(0), Rational(-ctx.kappa())};
  Grid<SparseMatrix> a(n, SparseMatrix(n, n)), b(n, SparseMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = SparseMatrix::unit(n, i, j) * Rational(koszul_sign(ctx.parity(i)));
      const int s = koszul_sign(ctx.parity(i) * ctx.parity(j)) * ctx.theta(i) * ctx.theta(j);
      b(i, j) = SparseMatrix::unit(n, ctx.prime(j), ctx.prime(i)) * Rational(-s);
    }
  if (out.poles[0] == out.poles[1]) {
    out.poles.pop_back();
    out.residues = {a + b};
  } else {
    out.residues = {a, b};
  }
  return out;
}

inline Representation vector_representation(const AlgebraContext& ctx) {
  auto m = std::make_shared<SimplePoleMatrix>(vector_representation_matrix(ctx));
  auto id = std::make_shared<Grid<SparseMatrix>>(identity_grid(ctx.dim(), ctx.dim()));
  Representation rep;
  rep.context = ctx;
  rep.module = ctx.parities();
  rep.label = "vector(" + ctx.sequence_string() + ")";
  rep.at = [m, id](const Rational& u) { return m->at(u, *id); };
  rep.expand = [m, id](int order) { return m->expand(order, *id); };
  return rep;
}

/// The module with t_ij(u) acting as t_ij(u + c).
inline Representation shifted(const Representation& rep, const Rational& c) {
  if (c == 0) return rep;
  Representation out = rep;
  out.label = rep.label + "[u+" + to_string(c) + "]";
  auto at = rep.at;
  auto expand = rep.expand;
  out.at = [at, c](const Rational& u) { return at(u + c); };
  out.expand = [expand, c](int order) {
    return expand(order).map([&](const OperatorSeries& s) { return s.shifted(c); });
  };
  return out;
}

/// Graded tensor product of operator series: coefficientwise Cauchy product of graded_kron.
inline OperatorSeries kron_series(const OperatorSeries& a, const Parities& pa, const OperatorSeries& b, const Parities& pb) {
  const int k = std::min(a.order(), b.order());
  std::vector<SparseMatrix> out;
  for (int r = 0; r <= k; ++r) {
    SparseMatrix acc(a[0].rows() * b[0].rows(), a[0].cols() * b[0].cols());
    for (int i = 0; i <= r; ++i) {
      if (a[i].is_zero() || b[r - i].is_zero()) continue;
      acc += graded_kron(a[i], pa, b[r - i], pb);
    }
    out.push_back(std::move(acc));
  }
  return OperatorSeries(std::move(out));
}

/// Coproduct action t_ij -> sum_k t_ik (x) t_kj on V1 (x) V2.
inline Representation tensor_pair(const Representation& r1, const Representation& r2) {
  if (!(r1.context == r2.context)) throw ContextMismatch("tensor product of representations over different contexts");
  Representation out;
  out.context = r1.context;
  out.module = tensor_parities(r1.module, r2.module);
  out.label = "(" + r1.label + " (x) " + r2.label + ")";
  const Parities p1 = r1.module, p2 = r2.module;
  const std::size_t n = r1.size();
  auto at1 = r1.at, at2 = r2.at;
  auto ex1 = r1.expand, ex2 = r2.expand;
  const std::size_t dim = out.dim();
  out.at = [=](const Rational& u) {
    const PointGrid a = at1(u), b = at2(u);
    PointGrid g(n, SparseMatrix(dim, dim));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
          g(i, j) += graded_kron(a(i, k), p1, b(k, j), p2);
        }
    return g;
  };
  out.expand = [=](int order) {
    const OperatorGrid a = ex1(order), b = ex2(order);
    std::vector<OperatorSeries> cells;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        OperatorSeries acc = OperatorSeries::zero(SparseMatrix(dim, dim), order);
        for (std::size_t k = 0; k < n; ++k) acc += kron_series(a(i, k), p1, b(k, j), p2);
        cells.push_back(std::move(acc));
      }
    return OperatorGrid(n, std::move(cells));
  };
  return out;
}

/// t_ij(u) -> sum t_{i a1}(u + c1) (x) t_{a1 a2}(u + c2) (x) ... (x) t_{a_{d-1} j}(u + c_d)
inline Representation tensor_shifted(const std::vector<Representation>& reps, const std::vector<Rational>& shifts) {
  if (reps.empty() || reps.size() != shifts.size()) throw InvalidInput("tensor_shifted needs one shift per factor");
  Representation acc = shifted(reps[0], shifts[0]);
  for (std::size_t k = 1; k < reps.size(); ++k) acc = tensor_pair(acc, shifted(reps[k], shifts[k]));
  return acc;
}

/// The pull-back along t_ij -> t_{sigma(i) sigma(j)}: a module over the algebra of
/// `target` built from a module over the algebra of rep.context.
inline Representation permuted(const Representation& rep, const std::vector<std::size_t>& sigma, const AlgebraContext& target) {
  const std::size_t n = rep.size();
  if (sigma.size() != n || target.dim() != n) throw ContextMismatch("permutation does not match the context size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (((target.parity(i) + target.parity(j)) & 1u) != ((rep.context.parity(sigma[i]) + rep.context.parity(sigma[j])) & 1u))
        throw ContextMismatch("permutation does not preserve generator parities");
  Representation out = rep;
  out.context = target;
  out.label = rep.label + "^sigma";
  auto at = rep.at;
  auto ex = rep.expand;
  auto pull = [sigma, n](const auto& g) {
    using G = std::decay_t<decltype(g)>;
    G out = g;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) = g(sigma[i], sigma[j]);
    return out;
  };
  out.at = [at, pull](const Rational& u) { return pull(at(u)); };
  out.expand = [ex, pull](int order) { return pull(ex(order)); };
  return out;
}

/// t_ij(u) -> t_ij(u) - t_i1(u) t_11(u)^{-1} t_1j(u) for 2 <= i, j <= 2', over the reduced context.
inline Representation embed_reduce(const Representation& rep) {
  const AlgebraContext reduced = rep.context.reduced();
  const std::size_t n = rep.size();
  const std::size_t nr = n - 2;
  Representation out = rep;
  out.context = reduced;
  out.label = "reduce(" + rep.label + ")";
  auto at = rep.at;
  auto ex = rep.expand;
  const std::size_t dim = rep.dim();
  out.at = [at, n, nr, dim](const Rational& u) {
    const PointGrid t = at(u);
    const SparseMatrix inv = t(0, 0).inverse();
    PointGrid g(nr, SparseMatrix(dim, dim));
    for (std::size_t i = 1; i + 1 < n; ++i)
      for (std::size_t j = 1; j + 1 < n; ++j) g(i - 1, j - 1) = t(i, j) - t(i, 0) * inv * t(0, j);
    return g;
  };
  out.expand = [ex, n, nr](int order) {
    const OperatorGrid t = ex(order);
    const OperatorSeries inv = t(0, 0).inverse();
    std::vector<OperatorSeries> cells;
    for (std::size_t i = 1; i + 1 < n; ++i)
      for (std::size_t j = 1; j + 1 < n; ++j) cells.push_back(t(i, j) - t(i, 0) * inv * t(0, j));
    return OperatorGrid(nr, std::move(cells));
  };
  return out;
}

/// Adds `delta * u^{-2} * E` to a single entry t_ij: a negative control that
/// breaks the defining relations.
inline Representation perturbed(const Representation& rep, std::size_t i, std::size_t j, const SparseMatrix& e, const Rational& delta) {
  Representation out = rep;
  out.label = rep.label + "+perturbation";
  auto at = rep.at;
  auto ex = rep.expand;
  out.at = [at, i, j, e, delta](const Rational& u) {
    PointGrid g = at(u);
    if (u == 0) throw PoleError("perturbation evaluated at u = 0");
    g(i, j) += e * (delta / (u * u));
    return g;
  };
  out.expand = [ex, i, j, e, delta](int order) {
    OperatorGrid g = ex(order);
    if (order >= 2) {
      std::vector<SparseMatrix> c = g(i, j).coefficients();
      c[2] += e * delta;
      g(i, j) = OperatorSeries(std::move(c));
    }
    return g;
  };
  return out;
}

/// The trivial module C with T(u) = 1.
inline Representation trivial_representation(const AlgebraContext& ctx) {
  Representation rep;
  rep.context = ctx;
  rep.module = Parities{0};
  rep.label = "trivial";
  const std::size_t n = ctx.dim();
  rep.at = [n](const Rational&) { return identity_grid(n, 1); };
  rep.expand = [n](int order) {
    return identity_grid(n, 1).map([order](const SparseMatrix& m) { return OperatorSeries::constant(m, order); });
  };
  return rep;
}

}  // namespace yosp
