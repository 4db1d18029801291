#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/hw/highest_weight.hpp"

namespace yosp {

/// Rows Gamma_1 >= Gamma_2 >= ... > 0 (trailing zeros dropped).
struct YoungDiagram {
  std::vector<int> rows;

  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> r) : rows(std::move(r)) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i] < 0 || (i && rows[i] > rows[i - 1])) throw InvalidInput("Young diagram rows must be weakly decreasing and nonnegative");
  }

  int row(std::size_t i) const { return i < rows.size() ? rows[i] : 0; }
  int size() const {
    int s = 0;
    for (int r : rows) s += r;
    return s;
  }
  /// Column lengths Gamma'_1, Gamma'_2, ...
  std::vector<int> conjugate() const {
    std::vector<int> cols(static_cast<std::size_t>(row(0)), 0);
    for (int r : rows)
      for (int j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
    return cols;
  }
  bool in_hook(int m, int n) const { return row(static_cast<std::size_t>(m)) <= n; }

  friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) { return a.rows == b.rows; }
};

/// (-Gamma_1, ..., -Gamma_m, nu_1, ..., nu_n) with nu_j = max(Gamma'_j - m, 0).
inline std::vector<int> sharp(const YoungDiagram& g, int m, int n) {
  if (!g.in_hook(m, n)) throw InvalidInput("diagram is not contained in the (m,n)-hook");
  std::vector<int> out;
  for (int i = 0; i < m; ++i) out.push_back(-g.row(static_cast<std::size_t>(i)));
  const auto cols = g.conjugate();
  for (int j = 0; j < n; ++j) out.push_back(std::max((j < static_cast<int>(cols.size()) ? cols[static_cast<std::size_t>(j)] : 0) - m, 0));
  return out;
}

/// Every diagram in the (m,n)-hook with at most `max_size` boxes.
inline std::vector<YoungDiagram> hook_diagrams(int m, int n, int max_size) {
  std::vector<YoungDiagram> out;
  std::vector<int> rows;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    out.emplace_back(rows);
    const std::size_t i = rows.size();
    const int limit = std::min(remaining, static_cast<int>(i) >= m ? std::min(cap, n) : cap);
    for (int r = 1; r <= limit; ++r) {
      rows.push_back(r);
      rec(remaining - r, r);
      rows.pop_back();
    }
  };
  rec(max_size, max_size);
  return out;
}

/// lambda_i(u) = 1 + lambda_i u^-1 for i = 1..m+n, lambda_{(m+n)'}(u) = (u-1)/(u+lambda_{m+n}-1).
struct LinearWeight {
  AlgebraContext context;
  std::vector<Rational> values;

  LinearWeight(AlgebraContext ctx, std::vector<Rational> v) : context(std::move(ctx)), values(std::move(v)) {
    if (values.size() != static_cast<std::size_t>(context.rank())) throw InvalidInput("linear weight needs m+n values");
  }

  HighestWeight highest_weight() const {
    std::vector<FactoredSeries> comps;
    for (const auto& a : values) comps.push_back(FactoredSeries::linear(a));
    const Polynomial u = Polynomial::variable();
    FactoredSeries last = FactoredSeries::from_rational(RationalFunction(u - Polynomial(1), u + Polynomial(values.back() - 1)));
    return HighestWeight(context, comps, last);
  }
};

struct LinearClassification {
  bool finite = false;
  std::optional<YoungDiagram> diagram;
  std::string reason;
};

/// lambda_1 <- ... <- lambda_m = -l and lambda_{m+1} -> ... -> lambda_{m+l} -> 0 = lambda_{m+l+1} = ... = lambda_{m+n}
/// (for l >= n: lambda_{m+1} -> ... -> lambda_{m+n} -> 0).
inline LinearClassification classify_linear(const LinearWeight& w) {
  const int m = w.context.m(), n = w.context.n();
  if (m < 1 || n < 1) throw NotApplicable("the linear classification is stated for m >= 1 and n >= 1");
  if (w.context.sequence_string() != std::string(static_cast<std::size_t>(m), '1') + std::string(static_cast<std::size_t>(n), '0'))
    throw ContextMismatch("the linear classification is stated for the standard parity sequence");
  const auto& v = w.values;
  auto lam = [&](int i) -> const Rational& { return v[static_cast<std::size_t>(i - 1)]; };
  LinearClassification out;
  for (int i = 1; i < m; ++i)
    if (!arrow_scalar(lam(i + 1), lam(i))) {
      out.reason = "lambda_" + std::to_string(i) + " <- lambda_" + std::to_string(i + 1) + " fails";
      return out;
    }
  if (!arrow_scalar(Rational(0), lam(m))) {
    out.reason = "lambda_" + std::to_string(m) + " is not a nonpositive integer";
    return out;
  }
  const int l = static_cast<int>(Rational(-lam(m)).get_num().get_si());
  const int top = std::min(l, n);
  for (int j = 1; j <= top; ++j) {
    const Rational next = j < top ? lam(m + j + 1) : Rational(0);
    if (!arrow_scalar(lam(m + j), next)) {
      out.reason = "lambda_" + std::to_string(m + j) + " -> " + (j < top ? "lambda_" + std::to_string(m + j + 1) : std::string("0")) + " fails";
      return out;
    }
  }
  for (int j = top + 1; j <= n; ++j)
    if (lam(m + j) != 0) {
      out.reason = "lambda_" + std::to_string(m + j) + " must vanish (l = " + std::to_string(l) + ")";
      return out;
    }
  std::vector<int> rows;
  for (int i = 1; i <= m; ++i) rows.push_back(static_cast<int>(Rational(-lam(i)).get_num().get_si()));
  std::vector<int> nu;
  for (int j = 1; j <= n; ++j) nu.push_back(static_cast<int>(lam(m + j).get_num().get_si()));
  for (int k = 1; !nu.empty() && k <= nu.front(); ++k) {
    int count = 0;
    for (int x : nu) count += x >= k;
    rows.push_back(count);
  }
  out.finite = true;
  out.diagram = YoungDiagram(rows);
  out.reason = "l = " + std::to_string(l);
  return out;
}

}  // namespace yosp
