#pragma once

// Exact integer linear algebra: dense big-integer matrices with Smith normal
// form, and machine-integer matrices over Z/N (echelon insertion, Howell
// form, Smith form with transforms).

#include "schur/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schur {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;
  IntMatrix transpose() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);  // row dst += k*row src
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);  // col dst += k*col src
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

// Determinant by fraction-free elimination (Bareiss).
BigInt determinant(const IntMatrix& a);

struct SNFResult {
  IntMatrix S, U, V;
  std::vector<BigInt> diagonal() const;  // min(rows, cols) entries
};

// S = U*A*V with unimodular U, V and d1 | d2 | ... on the diagonal.
// Pivot rule: smallest absolute value, ties by lowest row then column.
SNFResult snf(const IntMatrix& a);

// ---------------------------------------------------------------------------
// Column-sparse matrices with small integer entries (bar complex boundaries)

struct SparseColumnMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::size_t, i64>>> columns;
  IntMatrix to_dense() const;
};

// ---------------------------------------------------------------------------
// Matrices over Z/N with entries in [0, N)

struct ModMatrix {
  std::size_t rows = 0, cols = 0;
  i64 modulus = 1;
  std::vector<i64> data;

  ModMatrix() = default;
  ModMatrix(std::size_t r, std::size_t c, i64 n) : rows(r), cols(c), modulus(n), data(r * c, 0) {}
  static ModMatrix identity(std::size_t n, i64 modulus);
  i64& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  i64 operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  ModMatrix operator*(const ModMatrix& o) const;
};

struct ModSNFResult {
  // P*A*Q = D over Z/N. `invariants[k]` = gcd(D_kk, N) for k < min(rows, cols)
  // with a divisibility chain; Q and Q^{-1} are present when requested.
  std::vector<i64> invariants;
  ModMatrix D;
  std::optional<ModMatrix> Q, Qinv;
};

ModSNFResult snf_mod(ModMatrix a, bool want_q);

// Upper echelon basis of a Z/N row module built by incremental insertion.
// Span-preserving; rows are indexed by their pivot column.
class ModEchelon {
 public:
  ModEchelon(std::size_t width, i64 modulus);
  void insert(std::vector<i64> v);
  std::size_t width() const { return width_; }
  i64 modulus() const { return n_; }
  // Dense square matrix whose row c is the basis row with pivot c (zero if none).
  ModMatrix as_square() const;

 private:
  std::size_t width_;
  i64 n_;
  std::vector<std::vector<i64>> rows_;  // rows_[c] empty when no pivot at c
};

// Howell form over Z/N: the rows with zeros in the first k columns span every
// element of the row module with that property. Supports membership tests
// with recorded combination coefficients.
class HowellBasis {
 public:
  HowellBasis(std::size_t width, i64 modulus);
  void insert(std::vector<i64> v);
  // Reduces v by the basis; returns the remainder (zero iff v is in the span).
  // With `upto` < width only pivots in columns [0, upto) are used, which
  // decides membership in the projection onto those columns.
  std::vector<i64> reduce(std::vector<i64> v, std::size_t upto = static_cast<std::size_t>(-1)) const;
  bool contains(const std::vector<i64>& v) const;
  std::size_t width() const { return width_; }
  i64 modulus() const { return n_; }
  // Basis rows with their pivot column, in increasing pivot order.
  std::vector<std::pair<std::size_t, std::vector<i64>>> rows() const;

 private:
  void insert_from(std::vector<i64> v, std::size_t start);
  std::size_t width_;
  i64 n_;
  std::vector<std::vector<i64>> rows_;
};

}  // namespace schur
