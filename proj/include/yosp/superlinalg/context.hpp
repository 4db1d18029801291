#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "yosp/errors.hpp"

namespace yosp {

/// Parity (0 even, 1 odd) of each basis vector of a graded space.
using Parities = std::vector<std::uint8_t>;

inline int koszul_sign(unsigned exponent) { return (exponent & 1u) ? -1 : 1; }

/// Ambient data of the orthosymplectic Yangian for C^{2n|2m} and a parity
/// sequence s_1..s_{m+n} with exactly n zeros.
///
/// Indices are 0-based: i = 0..N-1 with N = 2(m+n); the involution is
/// i' = N - 1 - i, so the 1-based labels 1, 2, ..., 1' become 0, 1, ..., N-1.
class AlgebraContext {
 public:
  AlgebraContext() = default;

  /// Parses a string of '0'/'1'; m counts the ones and n the zeros.
  static AlgebraContext from_parity(std::string_view sequence) {
    if (sequence.empty()) throw InvalidInput("empty parity sequence");
    AlgebraContext ctx;
    for (char ch : sequence) {
      if (ch != '0' && ch != '1') throw InvalidInput("parity sequence must contain only 0 and 1: '" + std::string(sequence) + "'");
      ctx.s_.push_back(static_cast<std::uint8_t>(ch - '0'));
      (ch == '1' ? ctx.m_ : ctx.n_) += 1;
    }
    return ctx;
  }

  /// Standard sequence 1...1 0...0 (m ones, n zeros).
  static AlgebraContext standard(int m, int n) {
    if (m < 0 || n < 0 || m + n == 0) throw InvalidInput("context needs m, n >= 0 with m + n >= 1");
    return from_parity(std::string(static_cast<std::size_t>(m), '1') + std::string(static_cast<std::size_t>(n), '0'));
  }

  /// As `from_parity`, additionally checking the sequence against (m, n).
  static AlgebraContext make(int m, int n, std::string_view sequence) {
    AlgebraContext ctx = from_parity(sequence);
    if (ctx.m_ != m || ctx.n_ != n)
      throw InvalidInput("parity sequence '" + std::string(sequence) + "' does not have " + std::to_string(n) +
                         " zeros and " + std::to_string(m) + " ones");
    return ctx;
  }

  int m() const { return m_; }
  int n() const { return n_; }
  int rank() const { return m_ + n_; }
  std::size_t dim() const { return static_cast<std::size_t>(2 * (m_ + n_)); }
  /// kappa = n - m - 1
  int kappa() const { return n_ - m_ - 1; }

  const std::vector<std::uint8_t>& sequence() const { return s_; }
  std::string sequence_string() const {
    std::string out;
    for (auto b : s_) out.push_back(static_cast<char>('0' + b));
    return out;
  }

  std::size_t prime(std::size_t i) const { return dim() - 1 - i; }

  /// Parity of basis index i (extended by parity(i') = parity(i)).
  unsigned parity(std::size_t i) const {
    const std::size_t r = static_cast<std::size_t>(rank());
    return i < r ? s_[i] : s_[dim() - 1 - i];
  }

  /// theta_i = -1 exactly when i lies in the second half and is odd.
  int theta(std::size_t i) const { return (i >= static_cast<std::size_t>(rank()) && parity(i) == 1) ? -1 : 1; }

  Parities parities() const {
    Parities p(dim());
    for (std::size_t i = 0; i < dim(); ++i) p[i] = static_cast<std::uint8_t>(parity(i));
    return p;
  }

  /// Context of the subalgebra on indices 2..2' (the first parity bit removed).
  AlgebraContext reduced() const {
    if (rank() < 2) throw InvalidInput("cannot reduce a rank-1 context");
    return from_parity(sequence_string().substr(1));
  }

  std::string name() const {
    return "osp(" + std::to_string(2 * n_) + "|" + std::to_string(2 * m_) + ") parity " + sequence_string();
  }

  friend bool operator==(const AlgebraContext& a, const AlgebraContext& b) { return a.s_ == b.s_; }

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<std::uint8_t> s_;
};

}  // namespace yosp
