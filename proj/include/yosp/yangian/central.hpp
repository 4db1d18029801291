#pragma once

#include <string>

#include "yosp/errors.hpp"
#include "yosp/series/truncated_series.hpp"
#include "yosp/superlinalg/super_matrix.hpp"
#include "yosp/yangian/representation.hpp"

namespace yosp {

/// T(u - kappa) T^t(u) as an operator grid.
inline OperatorGrid central_product(const Representation& rep, int order) {
  const OperatorGrid t = rep.expand(order);
  const OperatorGrid shifted_t = t.map([&](const OperatorSeries& s) { return s.shifted(Rational(-rep.context.kappa())); });
  return shifted_t * super_transpose(rep.context, t);
}

/// C(u) with T(u - kappa) T^t(u) = C(u) 1, an operator on the module. Throws
/// Violation (naming the first offending entry and coefficient) when the
/// product is not of that form.
inline OperatorSeries central_operator_series(const Representation& rep, int order) {
  const OperatorGrid prod = central_product(rep, order);
  const std::size_t n = prod.size();
  for (int r = 0; r <= order; ++r)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const SparseMatrix& x = prod(i, j)[r];
        const bool ok = i == j ? x == prod(0, 0)[r] : x.is_zero();
        if (!ok)
          throw Violation("T(u-kappa)T^t(u) is not central: entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") at u^-" + std::to_string(r));
      }
  return prod(0, 0);
}

/// c(u) when C(u) acts as a scalar; throws Violation otherwise.
inline ScalarSeries central_series(const Representation& rep, int order) {
  const OperatorSeries op = central_operator_series(rep, order);
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int r = 0; r <= order; ++r) {
    c[static_cast<std::size_t>(r)] = op[r].get(0, 0);
    if (!(op[r] == SparseMatrix::identity(rep.dim()) * c[static_cast<std::size_t>(r)]))
      throw Violation("central element does not act as a scalar at u^-" + std::to_string(r));
  }
  return ScalarSeries(std::move(c));
}

/// The same product evaluated at a point, as a scalar.
inline Rational central_at(const Representation& rep, const Rational& u) {
  const PointGrid t = rep.at(u - Rational(rep.context.kappa()));
  const PointGrid tt = super_transpose(rep.context, rep.at(u));
  const PointGrid prod = t * tt;
  const Rational c = prod(0, 0).get(0, 0);
  const SparseMatrix scalar = SparseMatrix::identity(rep.dim()) * c;
  for (std::size_t i = 0; i < prod.size(); ++i)
    for (std::size_t j = 0; j < prod.size(); ++j)
      if (i == j ? !(prod(i, j) == scalar) : !prod(i, j).is_zero())
        throw Violation("T(u-kappa)T^t(u) is not scalar at u = " + to_string(u));
  return c;
}

}  // namespace yosp
