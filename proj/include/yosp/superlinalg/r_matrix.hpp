#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/exact/rational.hpp"
#include "yosp/exact/rational_function.hpp"
#include "yosp/report.hpp"
#include "yosp/superlinalg/context.hpp"
#include "yosp/superlinalg/graded.hpp"
#include "yosp/superlinalg/sparse_matrix.hpp"

namespace yosp {

/// coef * e_ij (x) e_kl
struct TwoSiteTerm {
  std::size_t i, j, k, l;
  Rational coef;
};

/// Element  identity * 1 + sum of terms  of End V (x) End V, V = C^{2n|2m}.
struct TwoSiteOperator {
  AlgebraContext context;
  Rational identity = 0;
  std::vector<TwoSiteTerm> terms;

  /// Matrix on V (x) V.
  SparseMatrix matrix() const {
    const Parities p = context.parities();
    return embed({p, p}, 0, 1);
  }

  /// Acts on legs a < b of a tensor product of spaces; legs other than a and b
  /// carry the identity.
  SparseMatrix embed(const std::vector<Parities>& spaces, std::size_t a, std::size_t b) const {
    if (a >= b || b >= spaces.size()) throw InvalidInput("TwoSiteOperator::embed: need legs a < b");
    const std::size_t n = context.dim();
    if (spaces[a].size() != n || spaces[b].size() != n) throw ContextMismatch("TwoSiteOperator::embed: leg dimension mismatch");
    std::size_t total = 1;
    for (const auto& s : spaces) total *= s.size();
    SparseMatrix out = SparseMatrix::identity(total) * identity;
    std::vector<SparseMatrix> ops;
    for (const auto& s : spaces) ops.push_back(SparseMatrix::identity(s.size()));
    for (const auto& t : terms) {
      ops[a] = SparseMatrix::unit(n, t.i, t.j);
      ops[b] = SparseMatrix::unit(n, t.k, t.l);
      out = out + graded_kron(ops, spaces) * t.coef;
    }
    return out;
  }

  friend TwoSiteOperator operator*(const TwoSiteOperator& x, const Rational& c) {
    TwoSiteOperator out{x.context, x.identity * c, x.terms};
    for (auto& t : out.terms) t.coef *= c;
    return out;
  }
  friend TwoSiteOperator operator+(const TwoSiteOperator& x, const TwoSiteOperator& y) {
    if (!(x.context == y.context)) throw ContextMismatch("TwoSiteOperator sum over different contexts");
    TwoSiteOperator out{x.context, x.identity + y.identity, x.terms};
    out.terms.insert(out.terms.end(), y.terms.begin(), y.terms.end());
    return out;
  }
};

/// P = sum e_ij (x) e_ji (-1)^{|j|}
inline TwoSiteOperator permutation_op(const AlgebraContext& ctx) {
  TwoSiteOperator out{ctx, 0, {}};
  const std::size_t n = ctx.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.terms.push_back({i, j, j, i, Rational(koszul_sign(ctx.parity(j)))});
  return out;
}

/// Q = sum e_ij (x) e_{i'j'} (-1)^{|i||j|} theta_i theta_j
inline TwoSiteOperator q_op(const AlgebraContext& ctx) {
  TwoSiteOperator out{ctx, 0, {}};
  const std::size_t n = ctx.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int s = koszul_sign(ctx.parity(i) * ctx.parity(j)) * ctx.theta(i) * ctx.theta(j);
      out.terms.push_back({i, j, ctx.prime(i), ctx.prime(j), Rational(s)});
    }
  return out;
}

/// R(u) = 1 - P/u + Q/(u - kappa)
inline TwoSiteOperator r_matrix(const AlgebraContext& ctx, const Rational& at) {
  const Rational kappa(ctx.kappa());
  if (at == 0 || at == kappa) throw PoleError("R-matrix evaluated at a pole u = " + to_string(at));
  TwoSiteOperator r = permutation_op(ctx) * Rational(-1 / at) + q_op(ctx) * Rational(1 / (at - kappa));
  r.identity = 1;
  return r;
}

/// Symbolic R(u) on V (x) V: nonzero entries as rational functions of u.
struct SymbolicTwoSite {
  std::size_t dim = 0;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, RationalFunction>> entries;

  RationalFunction get(std::size_t r, std::size_t c) const {
    for (const auto& [rc, f] : entries)
      if (rc.first == r && rc.second == c) return f;
    return RationalFunction(Polynomial(0));
  }
  SparseMatrix evaluate(const Rational& u) const {
    SparseMatrix out(dim, dim);
    for (const auto& [rc, f] : entries) out.add_to(rc.first, rc.second, f(u));
    return out;
  }
};

inline SymbolicTwoSite r_matrix_symbolic(const AlgebraContext& ctx) {
  const SparseMatrix pm = permutation_op(ctx).matrix();
  const SparseMatrix qm = q_op(ctx).matrix();
  const std::size_t d = pm.rows();
  const Polynomial u = Polynomial::variable();
  const Polynomial u_kappa = u - Polynomial(Rational(ctx.kappa()));
  SymbolicTwoSite out;
  out.dim = d;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const Rational a = pm.get(r, c), b = qm.get(r, c);
      // delta - a/u + b/(u - kappa)
      Polynomial num = Polynomial(Rational(r == c ? 1 : 0)) * u * u_kappa - Polynomial(a) * u_kappa + Polynomial(b) * u;
      if (num.is_zero()) continue;
      out.entries.push_back({{r, c}, rf_reduce(num, u * u_kappa)});
    }
  return out;
}

/// Whether u is a pole of R.
inline bool is_r_pole(const AlgebraContext& ctx, const Rational& u) { return u == 0 || u == Rational(ctx.kappa()); }

/// R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v) on V^{(x)3}, exactly.
inline Report check_yang_baxter(const AlgebraContext& ctx, const std::vector<std::pair<Rational, Rational>>& samples) {
  Report report;
  report.command = "verify ybe";
  ReportTimer timer(report);
  report.info["context"] = ctx.name();
  const Parities p = ctx.parities();
  const std::vector<Parities> legs{p, p, p};
  for (const auto& [u, v] : samples) {
    const std::string name = "ybe(u=" + to_string(u) + ", v=" + to_string(v) + ")";
    if (is_r_pole(ctx, u) || is_r_pole(ctx, v) || is_r_pole(ctx, u - v)) {
      report.skip(name, "skipped, sample hits a pole of R");
      continue;
    }
    const SparseMatrix r12 = r_matrix(ctx, u - v).embed(legs, 0, 1);
    const SparseMatrix r13 = r_matrix(ctx, u).embed(legs, 0, 2);
    const SparseMatrix r23 = r_matrix(ctx, v).embed(legs, 1, 2);
    const SparseMatrix residual = r12 * r13 * r23 - r23 * r13 * r12;
    auto& c = report.add(name, residual.is_zero(), "max |residual| = " + to_string(residual.max_abs()));
    if (!residual.is_zero()) {
      auto [r, col] = residual.first_nonzero();
      c.detail += ", first nonzero at (" + std::to_string(r) + "," + std::to_string(col) + ")";
    }
  }
  return report;
}

}  // namespace yosp
