#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/report.hpp"
#include "yosp/series/truncated_series.hpp"
#include "yosp/superlinalg/graded.hpp"
#include "yosp/yangian/representation.hpp"

namespace yosp {

/// A vector-valued series sum_r v_r u^{-r}.
using VectorSeries = TruncatedSeries<Vector>;

/// xi_d = sum over permutations s of sgn(s) e_{s(1)} (x) ... (x) e_{s(d)}
inline Vector antisymmetrizer_vector(const AlgebraContext& ctx, int d) {
  if (d < 1 || static_cast<std::size_t>(d) > ctx.dim()) throw InvalidInput("antisymmetrizer needs 1 <= d <= N");
  const std::size_t n = ctx.dim();
  std::vector<std::size_t> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t total = 1;
  for (int k = 0; k < d; ++k) total *= n;
  Vector out(total);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) ++inversions;
    std::size_t idx = 0;
    for (auto p : perm) idx = idx * n + p;
    out[idx] += inversions % 2 ? -1 : 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// s(u) v, coefficientwise.
inline std::vector<Vector> apply_series(const OperatorSeries& s, const Vector& v) {
  std::vector<Vector> out;
  for (int r = 0; r <= s.order(); ++r) out.push_back(s[r] * v);
  return out;
}

/// Scalar c with x = c v, if any.
inline std::optional<Rational> proportionality(const Vector& x, const Vector& v) {
  std::size_t pivot = v.size();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == v.size()) return std::nullopt;
  const Rational c = x[pivot] / v[pivot];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (x[i] != c * v[i]) return std::nullopt;
  return c;
}

/// Eigenvalue series of s(u) on v; nullopt if v is not an eigenvector to the given order.
inline std::optional<ScalarSeries> eigenvalue_series(const OperatorSeries& s, const Vector& v) {
  std::vector<Rational> c;
  for (int r = 0; r <= s.order(); ++r) {
    auto k = proportionality(s[r] * v, v);
    if (!k) return std::nullopt;
    c.push_back(*k);
  }
  return ScalarSeries(std::move(c));
}

/// Diagonal eigenvalues lambda_1..lambda_N (all indices, primed ones included)
/// together with the annihilation certificate.
struct ExtractedWeight {
  std::vector<ScalarSeries> components;
  Report certificate;
  bool ok() const { return certificate.passed(); }
};

inline ExtractedWeight extract_highest_weight(const Representation& rep, const Vector& xi, int order) {
  if (is_zero(xi)) throw InvalidInput("highest vector candidate is zero");
  if (xi.size() != rep.dim()) throw ContextMismatch("vector does not live in the module");
  ExtractedWeight out;
  out.certificate.command = "extract highest weight";
  out.certificate.info["module"] = rep.label;
  const OperatorGrid t = rep.expand(order);
  const std::size_t n = t.size();
  bool annihilated = true;
  for (std::size_t i = 0; i < n && annihilated; ++i)
    for (std::size_t j = i + 1; j < n && annihilated; ++j) {
      const auto images = apply_series(t(i, j), xi);
      for (int r = 0; r <= order; ++r)
        if (!is_zero(images[static_cast<std::size_t>(r)])) {
          annihilated = false;
          out.certificate.add("t_ij xi = 0 for i < j", false,
                              "t_" + std::to_string(i + 1) + "," + std::to_string(j + 1) + " at u^-" + std::to_string(r) +
                                  " does not kill xi")
              .witness("i,j,r", Polynomial(std::vector<Rational>{Rational(static_cast<long>(i + 1)), Rational(static_cast<long>(j + 1)), Rational(r)}));
          break;
        }
    }
  if (annihilated) out.certificate.add("t_ij xi = 0 for i < j", true, "checked to order " + std::to_string(order));
  for (std::size_t i = 0; i < n; ++i) {
    auto ev = eigenvalue_series(t(i, i), xi);
    if (!ev) {
      out.certificate.add("t_" + std::to_string(i + 1) + std::to_string(i + 1) + " eigenvector", false, "xi is not an eigenvector");
      out.components.push_back(ScalarSeries::one(Rational(1), order));
      continue;
    }
    out.components.push_back(*ev);
  }
  return out;
}

/// The module of the d-fold shifted tensor power with shifts (d-1, ..., 1, 0), or
/// (-(d-1), ..., -1, 0) when `flat`.
inline Representation sharp_tensor(const AlgebraContext& ctx, int d, bool flat = false) {
  if (d < 1) throw InvalidInput("tensor power needs d >= 1");
  const Representation v = vector_representation(ctx);
  std::vector<Representation> reps(static_cast<std::size_t>(d), v);
  std::vector<Rational> shifts;
  for (int k = d - 1; k >= 0; --k) shifts.push_back(Rational(flat ? -k : k));
  Representation rep = tensor_shifted(reps, shifts);
  rep.label = std::string(flat ? "flat" : "sharp") + "^" + std::to_string(d) + "(" + ctx.sequence_string() + ")";
  return rep;
}

}  // namespace yosp
