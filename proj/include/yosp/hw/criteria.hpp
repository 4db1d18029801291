#pragma once

#include <optional>
#include <string>

#include "yosp/errors.hpp"
#include "yosp/exact/shift_quotient.hpp"
#include "yosp/hw/highest_weight.hpp"
#include "yosp/hw/reflections.hpp"
#include "yosp/report.hpp"

namespace yosp {

struct FdVerdict {
  bool finite = false;
  std::optional<Polynomial> witness;
  std::size_t p = 0;
  RationalFunction f;  ///< the function tested against P(u+2)/P(u)
};

/// Cor 3.5 form after normalization: lambda_1/lambda_2 is reduced to N(u)/D(u) of degree p
/// and the weight is twisted by gamma^-1 so that lambda_1 = N/u^p, lambda_2 = D/u^p. Then
/// f(u) = ((u-1)/(u+1))^p lambda_2(u-1) lambda_2'(u) / (lambda_1(u) lambda_1(u+1))
/// must equal P(u+2)/P(u) for a monic P.
inline FdVerdict fd_criterion_osp22(const FactoredSeries& l1, const FactoredSeries& l2, const FactoredSeries& l2p) {
  const OddPair s = split_odd_pair(l1, l2);
  const int p = static_cast<int>(s.p());
  const FactoredSeries n1 = FactoredSeries::from_parameters(s.alpha_params);
  const FactoredSeries n2 = FactoredSeries::from_parameters(s.beta_params);
  const FactoredSeries n2p = l2p / s.gamma;
  const Polynomial u = Polynomial::variable();
  const Rational one(1);
  const RationalFunction pref = RationalFunction(u - Polynomial(1), u + Polynomial(1)).pow(p);
  FdVerdict out;
  out.p = s.p();
  out.f = pref * (n2.shifted(-one) * n2p / (n1 * n1.shifted(one))).rational();
  out.witness = shift_quotient_witness(out.f, Rational(2));
  out.finite = out.witness.has_value();
  return out;
}

/// Whether the verdict is unchanged under lambda_2 <-> lambda_2'.
inline bool fd_symmetry_check(const FactoredSeries& l1, const FactoredSeries& l2, const FactoredSeries& l2p) {
  return fd_criterion_osp22(l1, l2, l2p).finite == fd_criterion_osp22(l1, l2p, l2).finite;
}

/// lambda -> mu: lambda/mu = Q(u+1)/Q(u) for a monic Q.
inline std::optional<Polynomial> arrow_witness(const FactoredSeries& lambda, const FactoredSeries& mu) {
  return shift_quotient_witness((lambda / mu).rational(), Rational(1));
}

namespace detail {

inline void add_arrow(Report& report, const std::string& name, const FactoredSeries& a, const FactoredSeries& b) {
  try {
    auto q = arrow_witness(a, b);
    auto& c = report.add(name, q.has_value(), q ? "Q(u+1)/Q(u) witness found" : "ratio is not of the form Q(u+1)/Q(u)");
    if (q) c.witness("Q", *q);
  } catch (const UnsupportedRoot& e) {
    report.add_not_applicable(name, e.what());
  }
}

inline std::string lam(int i) { return "lambda_" + std::to_string(i); }

}  // namespace detail

/// Rationality of lambda_m/lambda_{m+1}, the gl and orthogonal arrow strings, and the
/// osp(2|2) condition on (lambda_m^[n-1], lambda_{m+n}, lambda_{(m+n)'}).
inline Report necessary_conditions(const HighestWeight& hw) {
  Report report;
  report.command = "check necessary";
  ReportTimer timer(report);
  const AlgebraContext& ctx = hw.context;
  const int m = ctx.m(), n = ctx.n();
  report.info["context"] = ctx.name();
  if (m < 1 || n < 1) throw NotApplicable("the necessary conditions are stated for m >= 1 and n >= 1");
  if (ctx.sequence_string() != std::string(static_cast<std::size_t>(m), '1') + std::string(static_cast<std::size_t>(n), '0'))
    throw ContextMismatch("the necessary conditions are stated for the standard parity sequence");
  report.add(detail::lam(m) + "/" + detail::lam(m + 1) + " rational", true, (hw.lambda(m) / hw.lambda(m + 1)).rational().to_string());
  for (int i = 1; i < m; ++i) detail::add_arrow(report, detail::lam(i) + " <- " + detail::lam(i + 1), hw.lambda(i + 1), hw.lambda(i));
  for (int i = m + 1; i < m + n; ++i) detail::add_arrow(report, detail::lam(i) + " -> " + detail::lam(i + 1), hw.lambda(i), hw.lambda(i + 1));
  if (n >= 2)
    detail::add_arrow(report, detail::lam(m + n - 1) + " -> " + detail::lam(m + n) + "'", hw.lambda(m + n - 1), hw.last);

  const std::string osp = detail::lam(m + n) + " => " + detail::lam(m) + "^[" + std::to_string(n - 1) + "] <= " + detail::lam(m + n) + "'";
  try {
    const ChainResult chain = chain_reflection(hw);
    report.info["chain branch"] = chain.branch();
    report.info["chain result"] = chain.lambda_m.to_string();
    const FdVerdict v = fd_criterion_osp22(chain.lambda_m, hw.lambda(m + n), hw.last);
    auto& c = report.add(osp, v.finite, "p = " + std::to_string(v.p) + ", f(u) = " + v.f.to_string());
    if (v.witness) c.witness("P", *v.witness);
    report.add("verdict symmetric under " + detail::lam(m + n) + " <-> " + detail::lam(m + n) + "'",
               fd_symmetry_check(chain.lambda_m, hw.lambda(m + n), hw.last));
  } catch (const NotApplicable& e) {
    report.add_not_applicable(osp, e.what());
  } catch (const UnsupportedRoot& e) {
    report.add_not_applicable(osp, e.what());
  }
  return report;
}

}  // namespace yosp
