#pragma once

#include <cstdint>
#include <vector>

#include "yosp/superlinalg/context.hpp"
#include "yosp/superlinalg/sparse_matrix.hpp"

namespace yosp {

/// Parities of the basis e_a (x) e_b of V1 (x) V2, first factor most significant.
inline Parities tensor_parities(const Parities& pa, const Parities& pb) {
  Parities out;
  out.reserve(pa.size() * pb.size());
  for (auto x : pa)
    for (auto y : pb) out.push_back(static_cast<std::uint8_t>((x + y) & 1u));
  return out;
}

/// a (x) b acting on V1 (x) V2 under the Koszul rule
///     (a (x) b)(x (x) y) = (-1)^{|b||x|} a x (x) b y,
/// evaluated entrywise: the entry b_{rc} has parity |r| + |c|.
inline SparseMatrix graded_kron(const SparseMatrix& a, const Parities& pa, const SparseMatrix& b, const Parities& pb) {
  const std::size_t nb_rows = b.rows(), nb_cols = b.cols();
  SparseMatrix out(a.rows() * nb_rows, a.cols() * nb_cols);
  for (std::size_t ra = 0; ra < a.rows(); ++ra) {
    const auto& row_a = a.row(ra);
    if (row_a.empty()) continue;
    for (std::size_t rb = 0; rb < nb_rows; ++rb) {
      const auto& row_b = b.row(rb);
      if (row_b.empty()) continue;
      const std::size_t r = ra * nb_rows + rb;
      for (const auto& ea : row_a) {
        for (const auto& eb : row_b) {
          unsigned exponent = ((pb[rb] + pb[eb.col]) & 1u) & pa[ea.col];
          Rational v = ea.value * eb.value;
          if (exponent) v = -v;
          out.push_back(r, static_cast<std::uint32_t>(ea.col * nb_cols + eb.col), std::move(v));
        }
      }
    }
  }
  return out;
}

/// Graded tensor product of several operators, folded from the left.
inline SparseMatrix graded_kron(const std::vector<SparseMatrix>& ops, const std::vector<Parities>& spaces) {
  if (ops.empty() || ops.size() != spaces.size()) throw InvalidInput("graded_kron needs matching operator and space lists");
  SparseMatrix acc = ops[0];
  Parities pacc = spaces[0];
  for (std::size_t k = 1; k < ops.size(); ++k) {
    acc = graded_kron(acc, pacc, ops[k], spaces[k]);
    pacc = tensor_parities(pacc, spaces[k]);
  }
  return acc;
}

/// Plain tensor product of vectors in the basis e_a (x) e_b.
inline Vector kron(const Vector& x, const Vector& y) {
  Vector out;
  out.reserve(x.size() * y.size());
  for (const auto& a : x)
    for (const auto& b : y) out.push_back(a * b);
  return out;
}

inline Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v(dim, Rational(0));
  v.at(i) = 1;
  return v;
}

}  // namespace yosp
