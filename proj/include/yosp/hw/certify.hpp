#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/hw/highest_weight.hpp"
#include "yosp/hw/reflections.hpp"
#include "yosp/report.hpp"
#include "yosp/yangian/gauss.hpp"
#include "yosp/yangian/highest_vector.hpp"
#include "yosp/yangian/representation.hpp"

namespace yosp {

namespace detail {

inline void add_eigen_check(Report& report, const std::string& name, const OperatorSeries& op, const Vector& v,
                            const FactoredSeries& expected, int order) {
  auto ev = eigenvalue_series(op, v);
  if (!ev) {
    report.add(name, false, "not an eigenvector");
    return;
  }
  const ScalarSeries want = expected.to_series(order);
  for (int r = 0; r <= order; ++r)
    if ((*ev)[r] != want[r]) {
      report.add(name, false, "eigenvalue differs at u^-" + std::to_string(r) + ": " + to_string((*ev)[r]) + " vs " + to_string(want[r]));
      return;
    }
  report.add(name, true, expected.to_string() + ", checked to order " + std::to_string(order));
}

}  // namespace detail

/// Module-level check of the osp(2|2) odd reflection on a parity-10 module with
/// highest vector xi of the claimed weight (lambda_1, lambda_2, lambda_2'):
/// builds zeta = T21(-alpha_1) ... T21(-alpha_p) xi with T21(u) = u^p t21(u) and
/// checks its eigenvalues, t21 zeta = 0, the h3 eigenvalue, and that t_{12'}, t_{21'},
/// t_{11'}, t_{22'} kill every t21^(r_1) ... t21^(r_q) xi with 1 <= r_1 < ... < r_q <= p.
inline Report certify_osp22_reflection(const Representation& rep, const Vector& xi, const HighestWeight& claimed, int order) {
  if (rep.context.sequence_string() != "10" || !(claimed.context == rep.context))
    throw ContextMismatch("the reflection certificate needs osp(2|2) with parity 10");
  Report report;
  report.command = "certify osp22 reflection";
  ReportTimer timer(report);
  report.info["module"] = rep.label;
  report.info["order"] = std::to_string(order);

  const auto full = consistency_extend(claimed);
  const ExtractedWeight ext = extract_highest_weight(rep, xi, order);
  report.append(ext.certificate, "xi: ");
  for (std::size_t i = 0; i < 4; ++i) {
    const ScalarSeries want = full[i].to_series(order);
    bool same = true;
    for (int r = 0; r <= order; ++r) same = same && ext.components[i][r] == want[r];
    report.add("xi: t_" + std::to_string(i + 1) + std::to_string(i + 1) + " eigenvalue is " + full[i].to_string(), same);
  }

  const auto [alpha, beta] = osp22_parameters(claimed.lambda(1), claimed.lambda(2));
  const std::size_t p = alpha.size();
  report.info["p"] = std::to_string(p);
  const OperatorGrid t = rep.expand(order);
  const OperatorSeries& t21 = t(1, 0);
  if (static_cast<std::size_t>(order) <= p) throw InvalidInput("order must exceed p");

  // zeta, applying T21(-alpha_p) first
  Vector zeta = xi;
  bool polynomial = true;
  for (std::size_t k = p; k-- > 0;) {
    const Rational at = -alpha[k];
    Vector next(zeta.size());
    for (int r = 1; r <= order; ++r) {
      const Vector w = t21[r] * zeta;
      if (static_cast<std::size_t>(r) > p) {
        polynomial = polynomial && is_zero(w);
        continue;
      }
      const Rational c = pow(at, static_cast<unsigned>(p - static_cast<std::size_t>(r)));
      for (std::size_t i = 0; i < w.size(); ++i) next[i] += c * w[i];
    }
    zeta = std::move(next);
  }
  report.add("u^p t21(u) acts polynomially", polynomial);
  if (is_zero(zeta)) {
    report.add("zeta is nonzero", false);
    return report;
  }
  report.add("zeta is nonzero", true);

  const Polynomial u = Polynomial::variable();
  const int pi = static_cast<int>(p);
  const FactoredSeries up = FactoredSeries::from_rational(RationalFunction(u + Polynomial(1), u)).pow(pi);
  const FactoredSeries down = FactoredSeries::from_rational(RationalFunction(u - Polynomial(1), u)).pow(pi);
  const Rational one(1);
  const FactoredSeries &l1 = full[0], &l2 = full[1], &l2p = full[2], &l1p = full[3];
  detail::add_eigen_check(report, "t11 zeta = ((u+1)/u)^p lambda1(u+1) zeta", t(0, 0), zeta, up * l1.shifted(one), order);
  detail::add_eigen_check(report, "t22 zeta = ((u+1)/u)^p lambda2(u+1) zeta", t(1, 1), zeta, up * l2.shifted(one), order);
  bool killed = true;
  for (int r = 0; r <= order; ++r) killed = killed && is_zero(t21[r] * zeta);
  report.add("t21 zeta = 0", killed);

  const GaussFactors g = gauss_decompose(t);
  const FactoredSeries h3 = down * l1.shifted(-one) * l1p / l2;
  report.add("h3 eigenvalue: both closed forms agree", h3 == down * l1.shifted(-one) * l2p / l1);
  detail::add_eigen_check(report, "h3 zeta = ((u-1)/u)^p lambda1(u-1) lambda1'(u) / lambda2(u) zeta", g.h_at(2), zeta, h3, order);

  // the reflected weight for parity 01 reproduces the h3 eigenvalue as its lambda_1'
  const Osp22Reflection refl = odd_reflection_osp22(l1, l2, l2p);
  const HighestWeight reflected(AlgebraContext::from_parity("01"), {refl.lambda1, refl.lambda2}, refl.lambda2p);
  report.add("reflected weight: lambda~_1' equals the h3 eigenvalue", consistency_extend(reflected)[3] == h3,
             "lambda~ = (" + refl.lambda1.to_string() + ", " + refl.lambda2.to_string() + ", " + refl.lambda2p.to_string() + ")");

  // span of t21^(r_1) ... t21^(r_q) xi
  std::vector<Vector> span;
  for (unsigned mask = 1; mask < (1u << p); ++mask) {
    Vector w = xi;
    for (std::size_t r = p; r >= 1; --r)
      if (mask & (1u << (r - 1))) w = t21[static_cast<int>(r)] * w;
    span.push_back(std::move(w));
  }
  const std::pair<std::size_t, std::size_t> ops[] = {{0, 2}, {1, 3}, {0, 3}, {1, 2}};
  const char* names[] = {"t_12'", "t_21'", "t_11'", "t_22'"};
  for (std::size_t k = 0; k < 4; ++k) {
    bool ok = true;
    for (const auto& w : span)
      for (int r = 0; r <= order && ok; ++r) ok = is_zero(t(ops[k].first, ops[k].second)[r] * w);
    report.add(std::string(names[k]) + " kills the span (" + std::to_string(span.size()) + " vectors)", ok);
  }
  return report;
}

/// The certificate on the 4-dimensional vector representation, xi = e_1, weight (1 - u^-1, 1, 1).
inline Report certify_osp22_vector(int order) {
  const AlgebraContext ctx = AlgebraContext::from_parity("10");
  const Representation rep = vector_representation(ctx);
  Vector xi(rep.dim());
  xi[0] = 1;
  const HighestWeight w(ctx, {FactoredSeries::linear(Rational(-1)), FactoredSeries()}, FactoredSeries());
  return certify_osp22_reflection(rep, xi, w, order);
}

}  // namespace yosp
