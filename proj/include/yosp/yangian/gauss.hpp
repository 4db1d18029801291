#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/report.hpp"
#include "yosp/yangian/central.hpp"
#include "yosp/yangian/representation.hpp"

namespace yosp {

/// T = F H E with F unit lower-triangular, H = diag(h_1..h_N), E unit upper-triangular.
struct GaussFactors {
  OperatorGrid f, h, e;

  const OperatorSeries& h_at(std::size_t i) const { return h(i, i); }
  OperatorGrid product() const { return f * h * e; }
};

inline GaussFactors gauss_decompose(const OperatorGrid& t) {
  const std::size_t n = t.size();
  const OperatorSeries& any = t(0, 0);
  const OperatorSeries zero = OperatorSeries::zero(any[0], any.order());
  const OperatorSeries one = OperatorSeries::one(any[0], any.order());
  GaussFactors g{OperatorGrid(n, zero), OperatorGrid(n, zero), OperatorGrid(n, zero)};
  OperatorGrid a = t;
  for (std::size_t k = 0; k < n; ++k) {
    const OperatorSeries hk = a(k, k);
    const OperatorSeries inv = hk.inverse();
    g.h(k, k) = hk;
    g.f(k, k) = one;
    g.e(k, k) = one;
    for (std::size_t i = k + 1; i < n; ++i) g.f(i, k) = a(i, k) * inv;
    for (std::size_t j = k + 1; j < n; ++j) g.e(k, j) = inv * a(k, j);
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = a(i, j) - g.f(i, k) * a(k, j);
  }
  return g;
}

/// Packs a 2x2 block of operator series into one series of 2D x 2D operators.
inline OperatorSeries pack_block(const OperatorSeries& a, const OperatorSeries& b, const OperatorSeries& c, const OperatorSeries& d) {
  const std::size_t dim = a[0].rows();
  const int order = std::min({a.order(), b.order(), c.order(), d.order()});
  std::vector<SparseMatrix> out;
  for (int r = 0; r <= order; ++r) {
    SparseMatrix m(2 * dim, 2 * dim);
    const SparseMatrix* parts[2][2] = {{&a[r], &b[r]}, {&c[r], &d[r]}};
    for (std::size_t bi = 0; bi < 2; ++bi)
      for (std::size_t bj = 0; bj < 2; ++bj)
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j < dim; ++j) {
            const Rational v = parts[bi][bj]->get(i, j);
            if (v != 0) m.add_to(bi * dim + i, bj * dim + j, v);
          }
    out.push_back(std::move(m));
  }
  return OperatorSeries(std::move(out));
}

/// Block (bi, bj) of a packed series.
inline OperatorSeries unpack_block(const OperatorSeries& s, std::size_t dim, std::size_t bi, std::size_t bj) {
  std::vector<SparseMatrix> out;
  for (int r = 0; r <= s.order(); ++r) {
    SparseMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        const Rational v = s[r].get(bi * dim + i, bj * dim + j);
        if (v != 0) m.add_to(i, j, v);
      }
    out.push_back(std::move(m));
  }
  return OperatorSeries(std::move(out));
}

/// Inverse of the 2x2 block [[a, b], [c, d]] of operator series, computed by
/// inverting the packed 2D x 2D series directly.
inline Grid<OperatorSeries> block_inverse_2x2(const OperatorSeries& a, const OperatorSeries& b, const OperatorSeries& c,
                                              const OperatorSeries& d) {
  const std::size_t dim = a[0].rows();
  const OperatorSeries inv = pack_block(a, b, c, d).inverse();
  return Grid<OperatorSeries>(2, std::vector<OperatorSeries>{unpack_block(inv, dim, 0, 0), unpack_block(inv, dim, 0, 1),
                                                              unpack_block(inv, dim, 1, 0), unpack_block(inv, dim, 1, 1)});
}

/// h_2 = t_22 - t_21 t_11^{-1} t_12
inline OperatorSeries quasideterminant_h2(const OperatorGrid& t) { return t(1, 1) - t(1, 0) * t(0, 0).inverse() * t(0, 1); }

/// h_3 = t_33 - [t_31 t_32] A^{-1} [t_13 t_23]^T with A the top-left 2x2 block.
inline OperatorSeries quasideterminant_h3(const OperatorGrid& t) {
  const Grid<OperatorSeries> inv = block_inverse_2x2(t(0, 0), t(0, 1), t(1, 0), t(1, 1));
  OperatorSeries out = t(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out = out - t(2, i) * inv(i, j) * t(j, 2);
  return out;
}

namespace detail {

inline bool series_commute(const OperatorSeries& a, const OperatorSeries& b) {
  for (int r = 0; r <= a.order(); ++r)
    for (int s = 0; s <= b.order(); ++s)
      if (!(a[r] * b[s] == b[s] * a[r])) return false;
  return true;
}

inline void add_series_check(Report& report, const std::string& name, const OperatorSeries& lhs, const OperatorSeries& rhs) {
  const int order = std::min(lhs.order(), rhs.order());
  for (int r = 0; r <= order; ++r) {
    if (!(lhs[r] == rhs[r])) {
      report.add(name, false, "differs at u^-" + std::to_string(r) + ", max |residual| = " + to_string((lhs[r] - rhs[r]).max_abs()));
      return;
    }
  }
  report.add(name, true, "equal to order " + std::to_string(order));
}

}  // namespace detail

/// b(u) = h_1(u) h_2(u)^{-1}; throws Violation unless every coefficient commutes
/// with every coefficient of t_11, t_12, t_21, t_22.
inline OperatorSeries berezinian(const GaussFactors& g, const OperatorGrid& t) {
  const OperatorSeries b = g.h_at(0) * g.h_at(1).inverse();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (!detail::series_commute(b, t(i, j)))
        throw Violation("b(u) does not commute with t_" + std::to_string(i + 1) + std::to_string(j + 1));
  return b;
}

/// Reconstruction and quasideterminant checks of the Gauss factors of a representation.
inline Report verify_gauss(const Representation& rep, int order) {
  Report report;
  report.command = "verify gauss";
  ReportTimer timer(report);
  report.info["context"] = rep.context.name();
  report.info["module"] = rep.label;
  report.info["order"] = std::to_string(order);
  const OperatorGrid t = rep.expand(order);
  const GaussFactors g = gauss_decompose(t);
  const OperatorGrid prod = g.product();
  const std::size_t n = t.size();
  bool ok = true;
  std::string detail = "F H E = T to order " + std::to_string(order);
  for (std::size_t i = 0; i < n && ok; ++i)
    for (std::size_t j = 0; j < n && ok; ++j)
      if (!(prod(i, j) == t(i, j))) {
        ok = false;
        detail = "F H E differs from T at entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
  report.add("reconstruction", ok, detail);
  bool shape = true;
  for (std::size_t i = 0; i < n; ++i) shape = shape && g.h_at(i)[0].is_identity();
  report.add("h_i = 1 + O(u^-1)", shape);
  detail::add_series_check(report, "h2 quasideterminant", g.h_at(1), quasideterminant_h2(t));
  if (n >= 3) detail::add_series_check(report, "h3 quasideterminant", g.h_at(2), quasideterminant_h3(t));
  if (rep.context.parity(0) == rep.context.parity(1)) return report;
  try {
    berezinian(g, t);
    report.add("berezinian central in the gl(1|1) block", true);
  } catch (const Violation& e) {
    report.add("berezinian central in the gl(1|1) block", false, e.what());
  }
  return report;
}

/// h_3(u) = c(u-1) b(u) h_1(u-1)^{-1}, for the parity sequence 10.
inline Report verify_h3_identity(const Representation& rep, int order) {
  Report report;
  report.command = "verify h3";
  if (rep.context.sequence_string() != "10") throw ContextMismatch("the h3 identity is stated for the parity sequence 10");
  const OperatorGrid t = rep.expand(order);
  const GaussFactors g = gauss_decompose(t);
  const OperatorSeries c = central_operator_series(rep, order);
  const OperatorSeries b = berezinian(g, t);
  const OperatorSeries rhs = c.shifted(Rational(-1)) * b * g.h_at(0).shifted(Rational(-1)).inverse();
  detail::add_series_check(report, "h3(u) = c(u-1) b(u) h1(u-1)^-1", g.h_at(2), rhs);
  return report;
}

}  // namespace yosp
