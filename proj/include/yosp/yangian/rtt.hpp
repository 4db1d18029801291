#pragma once

#include <string>
#include <utility>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/report.hpp"
#include "yosp/superlinalg/r_matrix.hpp"
#include "yosp/yangian/representation.hpp"

namespace yosp {

/// T_a(u) = sum e_ij (x) t_ij(u) (-1)^{|i||j| + |j|} placed on leg a (0 or 1)
/// of V (x) V (x) M.
inline SparseMatrix leg_operator(const AlgebraContext& ctx, const Parities& module, const PointGrid& t, std::size_t leg) {
  const Parities p = ctx.parities();
  const std::size_t n = ctx.dim();
  const std::vector<Parities> spaces{p, p, module};
  SparseMatrix out(n * n * module.size(), n * n * module.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (t(i, j).is_zero()) continue;
      const int s = koszul_sign(ctx.parity(i) * ctx.parity(j) + ctx.parity(j));
      std::vector<SparseMatrix> ops{SparseMatrix::identity(n), SparseMatrix::identity(n), t(i, j)};
      ops[leg] = SparseMatrix::unit(n, i, j);
      out += graded_kron(ops, spaces) * Rational(s);
    }
  return out;
}

/// R(u-v) T1(u) T2(v) - T2(v) T1(u) R(u-v) on V (x) V (x) M.
inline SparseMatrix rtt_residual(const Representation& rep, const Rational& u, const Rational& v) {
  const AlgebraContext& ctx = rep.context;
  const Parities p = ctx.parities();
  const SparseMatrix r = r_matrix(ctx, u - v).embed({p, p, rep.module}, 0, 1);
  const PointGrid tu = rep.at(u), tv = rep.at(v);
  const SparseMatrix t1 = leg_operator(ctx, rep.module, tu, 0);
  const SparseMatrix t2 = leg_operator(ctx, rep.module, tv, 1);
  return r * t1 * t2 - t2 * t1 * r;
}

inline Report verify_rtt(const Representation& rep, const std::vector<std::pair<Rational, Rational>>& samples) {
  Report report;
  report.command = "verify rtt";
  ReportTimer timer(report);
  report.info["context"] = rep.context.name();
  report.info["module"] = rep.label;
  for (const auto& [u, v] : samples) {
    const std::string name = "rtt(u=" + to_string(u) + ", v=" + to_string(v) + ")";
    if (is_r_pole(rep.context, u - v)) {
      report.skip(name, "skipped, u - v is a pole of R");
      continue;
    }
    SparseMatrix res;
    try {
      res = rtt_residual(rep, u, v);
    } catch (const PoleError& e) {
      report.skip(name, std::string("skipped, ") + e.what());
      continue;
    } catch (const SingularSeries& e) {
      report.skip(name, std::string("skipped, ") + e.what());
      continue;
    }
    auto& c = report.add(name, res.is_zero(), "max |residual| = " + to_string(res.max_abs()));
    if (!res.is_zero()) {
      auto [r, col] = res.first_nonzero();
      c.detail += ", first nonzero at (" + std::to_string(r) + "," + std::to_string(col) + ")";
    }
  }
  return report;
}

}  // namespace yosp
