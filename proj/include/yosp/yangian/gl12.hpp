#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/report.hpp"
#include "yosp/yangian/gauss.hpp"
#include "yosp/yangian/representation.hpp"

namespace yosp {

/// Gradings of the barred indices 1, 2, 3.
inline const Parities& gl12_parities() {
  static const Parities p{0, 1, 1};
  return p;
}

struct PhiOptions {
  /// Coefficient in front of the t_13 and t_23 images; anything but 1/2 is a negative control.
  Rational t13_factor = Rational(1, 2);
  /// Extra factor on the images of ebar_12 and ebar_23 (and so ebar_13 by its square),
  /// applied through the Gauss factors. 1 is the map as stated.
  Rational e_scale = Rational(1);
};

/// s(u) -> s(2u + c)
inline OperatorSeries at_2u(const OperatorSeries& s, const Rational& c) { return s.substitute_affine(Rational(2), c); }

/// F H E' with e_12, e_23 multiplied by c and e_13 by c^2.
inline OperatorGrid rescale_e(const OperatorGrid& t, const Rational& c) {
  GaussFactors g = gauss_decompose(t);
  g.e(0, 1) = g.e(0, 1) * c;
  g.e(1, 2) = g.e(1, 2) * c;
  g.e(0, 2) = g.e(0, 2) * (c * c);
  return g.product();
}

/// Images of tbar_ij(u), i, j = 1..3, in terms of the osp(2|2) parity-01 matrix T.
inline OperatorGrid phi_image(const OperatorGrid& t, const PhiOptions& opts = {}) {
  if (t.size() != 4) throw ContextMismatch("phi_image needs the osp(2|2) generator matrix");
  auto s0 = [&](std::size_t i, std::size_t j) { return at_2u(t(i, j), Rational(0)); };
  auto s1 = [&](std::size_t i, std::size_t j) { return at_2u(t(i, j), Rational(-1)); };
  const OperatorSeries a = s1(0, 0);
  const OperatorSeries inv0 = s0(0, 0).inverse();
  const OperatorSeries zero = a - a;
  OperatorGrid out(3, zero);
  out(0, 0) = a * s0(0, 0);
  out(0, 1) = a * s0(0, 1);
  out(1, 0) = s0(1, 0) * a;
  out(0, 2) = (a * s0(0, 2)) * opts.t13_factor;
  out(2, 0) = s0(2, 0) * a;
  for (std::size_t i : {1u, 2u}) out(i, 1) = s0(i, 1) * a + s0(i, 0) * s1(0, 1) - s0(i, 0) * inv0 * a * s0(0, 1);
  out(1, 2) = (s0(1, 2) * a + s0(1, 0) * s1(0, 2) - s0(1, 0) * inv0 * a * s0(0, 2)) * opts.t13_factor;
  // tbar_33 from the quasideterminant correspondence
  const Grid<OperatorSeries> abar = block_inverse_2x2(out(0, 0), out(0, 1), out(1, 0), out(1, 1));
  const Grid<OperatorSeries> aosp = block_inverse_2x2(s0(0, 0), s0(0, 1), s0(1, 0), s0(1, 1));
  OperatorSeries h = s0(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) h = h - s0(2, i) * aosp(i, j) * s0(j, 2);
  OperatorSeries t33 = a * h;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) t33 = t33 + out(2, i) * abar(i, j) * out(j, 2);
  out(2, 2) = t33;
  if (opts.e_scale != 1) out = rescale_e(out, opts.e_scale);
  return out;
}

namespace detail {

/// [A, B} = AB - (-1)^{|A||B|} BA
inline SparseMatrix supercommutator(const SparseMatrix& a, unsigned pa, const SparseMatrix& b, unsigned pb) {
  const SparseMatrix ab = a * b, ba = b * a;
  return (pa & pb & 1u) ? ab + ba : ab - ba;
}

}  // namespace detail

/// Checks, for all i, j, k, l and 0 <= r, s < K (X^(0) = delta),
/// [X^(r+1)_ij, X^(s)_kl} - [X^(r)_ij, X^(s+1)_kl} = hbar (-1)^{ij+ik+jk} (X^(r)_kj X^(s)_il - X^(s)_kj X^(r)_il),
/// the coefficient form of (u - v)[X_ij(u), X_kl(v)} = hbar (-1)^{..} (X_kj(u) X_il(v) - X_kj(v) X_il(u)).
inline SubCheck check_gl_relations(const OperatorGrid& x, const Parities& par, const std::string& name,
                                   const Rational& hbar = Rational(1)) {
  const std::size_t n = x.size();
  const int order = x(0, 0).order();
  SubCheck c{name, Verdict::pass, "", {}};
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const unsigned pij = (par[i] + par[j]) & 1u, pkl = (par[k] + par[l]) & 1u;
          const int sign = koszul_sign(par[i] * par[j] + par[i] * par[k] + par[j] * par[k]);
          for (int r = 0; r < order; ++r)
            for (int s = 0; s < order; ++s) {
              const SparseMatrix lhs = detail::supercommutator(x(i, j)[r + 1], pij, x(k, l)[s], pkl) -
                                       detail::supercommutator(x(i, j)[r], pij, x(k, l)[s + 1], pkl);
              const SparseMatrix rhs = (x(k, j)[r] * x(i, l)[s] - x(k, j)[s] * x(i, l)[r]) * Rational(sign * hbar);
              ++count;
              if (!(lhs == rhs)) {
                c.verdict = Verdict::fail;
                c.detail = "first violation at (i,j,k,l,r,s) = (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                           std::to_string(k + 1) + "," + std::to_string(l + 1) + "," + std::to_string(r) + "," +
                           std::to_string(s) + "), max |residual| = " + to_string((lhs - rhs).max_abs());
                return c;
              }
            }
        }
  c.detail = std::to_string(count) + " coefficient relations hold";
  return c;
}

/// h2(u) h1(u+1) = t22(u+1) t11(u) + t12(u+1) t21(u)
inline bool hhte_identity(const OperatorGrid& t) {
  const GaussFactors g = gauss_decompose(t);
  const Rational one(1);
  const OperatorSeries lhs = g.h_at(1) * g.h_at(0).shifted(one);
  const OperatorSeries rhs = t(1, 1).shifted(one) * t(0, 0) + t(0, 1).shifted(one) * t(1, 0);
  return lhs == rhs;
}

inline Report verify_gl12_isomorphism(const Representation& rep, int order, const PhiOptions& opts = {}) {
  if (rep.context.sequence_string() != "01") throw ContextMismatch("the gl(1|2) isomorphism needs osp(2|2) with parity 01");
  Report report;
  report.command = "verify iso";
  ReportTimer timer(report);
  report.info["context"] = rep.context.name();
  report.info["module"] = rep.label;
  report.info["order"] = std::to_string(order);
  report.info["e_scale"] = to_string(opts.e_scale);
  const OperatorGrid t = rep.expand(order);
  const OperatorGrid bar = phi_image(t, opts);
  report.checks.push_back(check_gl_relations(bar, gl12_parities(), "gl(1|2) defining relations"));

  const GaussFactors g = gauss_decompose(t);
  const GaussFactors gb = gauss_decompose(bar);
  const Rational zero(0), half(1, 2), one(1), two(2), minus_one(-1);
  auto h = [&](std::size_t i, const Rational& c) { return at_2u(g.h_at(i), c); };
  for (std::size_t i = 0; i < 3; ++i)
    detail::add_series_check(report, "hbar_" + std::to_string(i + 1) + "(u) = h1(2u-1) h" + std::to_string(i + 1) + "(2u)",
                             gb.h_at(i), h(0, minus_one) * h(i, zero));
  const Rational c = opts.e_scale;
  detail::add_series_check(report, "ebar12(u) = e12(2u)", gb.e(0, 1), at_2u(g.e(0, 1), zero) * c);
  detail::add_series_check(report, "ebar23(u) = e23(2u)/2", gb.e(1, 2), at_2u(g.e(1, 2), zero) * (half * c));
  detail::add_series_check(report, "fbar21(u) = f21(2u)", gb.f(1, 0), at_2u(g.f(1, 0), zero));
  detail::add_series_check(report, "fbar32(u) = f32(2u)", gb.f(2, 1), at_2u(g.f(2, 1), zero));

  // Drinfeld currents
  const OperatorSeries kbar1 = gb.h_at(0).inverse() * gb.h_at(1);
  const OperatorSeries kbar2 = gb.h_at(1).shifted(half).inverse() * gb.h_at(2).shifted(half);
  detail::add_series_check(report, "kappa1", kbar1, h(0, zero).inverse() * h(1, zero));
  detail::add_series_check(report, "kappa2", kbar2, h(1, one).inverse() * h(2, one));
  detail::add_series_check(report, "xi1+", gb.f(1, 0), at_2u(g.f(1, 0), zero));
  detail::add_series_check(report, "xi1-", gb.e(0, 1), at_2u(g.e(0, 1), zero) * c);
  detail::add_series_check(report, "xi2+", gb.f(2, 1).shifted(half), at_2u(g.f(2, 1), one));
  detail::add_series_check(report, "xi2-", -gb.e(1, 2).shifted(half), at_2u(g.e(1, 2), one) * (Rational(-1, 2) * c));

  // centers: beta(u) = hbar1(u)^-1 hbar2(u) hbar3(u+1) and sigma(2u)
  const OperatorSeries beta = gb.h_at(0).inverse() * gb.h_at(1) * gb.h_at(2).shifted(one);
  const OperatorSeries sigma2u = h(0, zero).inverse() * h(1, zero) * h(0, one) * h(2, two);
  detail::add_series_check(report, "beta(u) = sigma(2u)", beta, sigma2u);

  report.add("h2(u)h1(u+1) identity (osp)", hhte_identity(t));
  report.add("h2(u)h1(u+1) identity (gl images)", hhte_identity(bar));
  return report;
}

}  // namespace yosp
