#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/exact/rational.hpp"
#include "yosp/series/ring_traits.hpp"

namespace yosp {

using Vector = std::vector<Rational>;

/// Exact sparse matrix in row-compressed form. Rows hold (column, value)
/// pairs sorted by column with no stored zeros.
class SparseMatrix {
 public:
  struct Entry {
    std::uint32_t col;
    Rational value;
  };
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({static_cast<std::uint32_t>(i), Rational(1)});
    return m;
  }
  /// Matrix unit e_ij.
  static SparseMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
    SparseMatrix m(n, n);
    m.rows_[i].push_back({static_cast<std::uint32_t>(j), Rational(1)});
    return m;
  }
  static SparseMatrix from_dense(const std::vector<Vector>& dense) {
    SparseMatrix m(dense.size(), dense.empty() ? 0 : dense[0].size());
    for (std::size_t i = 0; i < dense.size(); ++i)
      for (std::size_t j = 0; j < dense[i].size(); ++j)
        if (dense[i][j] != 0) m.rows_[i].push_back({static_cast<std::uint32_t>(j), dense[i][j]});
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t i) const { return rows_[i]; }
  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }
  bool is_zero() const {
    for (const auto& r : rows_)
      if (!r.empty()) return false;
    return true;
  }
  bool is_identity() const {
    if (rows() != cols_) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (rows_[i].size() != 1 || rows_[i][0].col != i || rows_[i][0].value != 1) return false;
    return true;
  }

  Rational get(std::size_t i, std::size_t j) const {
    for (const auto& e : rows_[i])
      if (e.col == j) return e.value;
    return 0;
  }

  /// Adds v to entry (i, j).
  void add_to(std::size_t i, std::size_t j, const Rational& v) {
    if (v == 0) return;
    auto& r = rows_[i];
    auto it = r.begin();
    while (it != r.end() && it->col < j) ++it;
    if (it != r.end() && it->col == j) {
      it->value += v;
      if (it->value == 0) r.erase(it);
    } else {
      r.insert(it, Entry{static_cast<std::uint32_t>(j), v});
    }
  }

  /// Appends to row i; columns must arrive in increasing order.
  void push_back(std::size_t i, std::uint32_t col, Rational v) {
    if (v != 0) rows_[i].push_back({col, std::move(v)});
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, false); }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, true); }
  SparseMatrix& operator+=(const SparseMatrix& o) { return *this = *this + o; }
  SparseMatrix& operator-=(const SparseMatrix& o) { return *this = *this - o; }

  friend SparseMatrix operator*(const SparseMatrix& a, const Rational& s) {
    SparseMatrix out(a.rows(), a.cols_);
    if (s == 0) return out;
    for (std::size_t i = 0; i < a.rows_.size(); ++i) {
      out.rows_[i].reserve(a.rows_[i].size());
      for (const auto& e : a.rows_[i]) out.rows_[i].push_back({e.col, Rational(e.value * s)});
    }
    return out;
  }
  friend SparseMatrix operator*(const Rational& s, const SparseMatrix& a) { return a * s; }
  friend SparseMatrix operator-(const SparseMatrix& a) { return a * Rational(-1); }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows()) throw InvalidInput("matrix product with mismatched shapes");
    SparseMatrix out(a.rows(), b.cols_);
    std::vector<Rational> acc(b.cols_);
    std::vector<char> used(b.cols_, 0);
    std::vector<std::uint32_t> touched;
    Rational tmp;
    for (std::size_t i = 0; i < a.rows_.size(); ++i) {
      touched.clear();
      for (const auto& ea : a.rows_[i]) {
        for (const auto& eb : b.rows_[ea.col]) {
          mpq_mul(tmp.get_mpq_t(), ea.value.get_mpq_t(), eb.value.get_mpq_t());
          if (!used[eb.col]) {
            used[eb.col] = 1;
            acc[eb.col] = tmp;
            touched.push_back(eb.col);
          } else {
            acc[eb.col] += tmp;
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      for (auto c : touched) {
        if (acc[c] != 0) out.rows_[i].push_back({c, acc[c]});
        used[c] = 0;
      }
    }
    return out;
  }

  friend Vector operator*(const SparseMatrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw InvalidInput("matrix-vector product with mismatched shapes");
    Vector out(a.rows(), Rational(0));
    for (std::size_t i = 0; i < a.rows_.size(); ++i)
      for (const auto& e : a.rows_[i]) out[i] += e.value * v[e.col];
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.rows_.size(); ++i) {
      const auto& ra = a.rows_[i];
      const auto& rb = b.rows_[i];
      if (ra.size() != rb.size()) return false;
      for (std::size_t k = 0; k < ra.size(); ++k)
        if (ra[k].col != rb[k].col || ra[k].value != rb[k].value) return false;
    }
    return true;
  }

  /// Exact inverse by Gauss-Jordan elimination; identity is a fast path.
  SparseMatrix inverse() const {
    if (rows() != cols_) throw InvalidInput("inverse of a non-square matrix");
    if (is_identity()) return *this;
    const std::size_t n = cols_;
    std::vector<Vector> a(n, Vector(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& e : rows_[i]) a[i][e.col] = e.value;
      a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a[piv][col] == 0) ++piv;
      if (piv == n) throw SingularSeries("operator is not invertible");
      std::swap(a[piv], a[col]);
      Rational inv = 1 / a[col][col];
      for (auto& x : a[col]) x *= inv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || a[r][col] == 0) continue;
        Rational f = a[r][col];
        for (std::size_t k = col; k < 2 * n; ++k)
          if (a[col][k] != 0) a[r][k] -= f * a[col][k];
      }
    }
    SparseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a[i][n + j] != 0) out.rows_[i].push_back({static_cast<std::uint32_t>(j), a[i][n + j]});
    return out;
  }

  /// Largest absolute entry (0 for the zero matrix).
  Rational max_abs() const {
    Rational best = 0;
    for (const auto& r : rows_)
      for (const auto& e : r)
        if (abs(e.value) > best) best = abs(e.value);
    return best;
  }

  /// First nonzero entry as (row, col), or (-1, -1).
  std::pair<long, long> first_nonzero() const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (!rows_[i].empty()) return {static_cast<long>(i), static_cast<long>(rows_[i][0].col)};
    return {-1, -1};
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (const auto& e : rows_[i]) os << "(" << i << "," << e.col << ")=" << yosp::to_string(e.value) << " ";
    return os.str();
  }

 private:
  static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
    if (a.rows() != b.rows() || a.cols_ != b.cols_) throw InvalidInput("matrix sum with mismatched shapes");
    SparseMatrix out(a.rows(), a.cols_);
    for (std::size_t i = 0; i < a.rows_.size(); ++i) {
      const auto& ra = a.rows_[i];
      const auto& rb = b.rows_[i];
      auto& ro = out.rows_[i];
      ro.reserve(ra.size() + rb.size());
      std::size_t p = 0, q = 0;
      while (p < ra.size() || q < rb.size()) {
        if (q == rb.size() || (p < ra.size() && ra[p].col < rb[q].col)) {
          ro.push_back(ra[p++]);
        } else if (p == ra.size() || rb[q].col < ra[p].col) {
          ro.push_back({rb[q].col, subtract ? Rational(-rb[q].value) : rb[q].value});
          ++q;
        } else {
          Rational v = subtract ? Rational(ra[p].value - rb[q].value) : Rational(ra[p].value + rb[q].value);
          if (v != 0) ro.push_back({ra[p].col, std::move(v)});
          ++p;
          ++q;
        }
      }
    }
    return out;
  }

  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

template <>
struct RingTraits<SparseMatrix> {
  static SparseMatrix zero_like(const SparseMatrix& x) { return SparseMatrix(x.rows(), x.cols()); }
  static SparseMatrix one_like(const SparseMatrix& x) { return SparseMatrix::identity(x.rows()); }
  static bool is_zero(const SparseMatrix& x) { return x.is_zero(); }
  static SparseMatrix inverse(const SparseMatrix& x) { return x.inverse(); }
  static SparseMatrix scale(const SparseMatrix& x, const Rational& c) { return x * c; }
};

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace yosp
