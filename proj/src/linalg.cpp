#include "schur/linalg.hpp"

#include <algorithm>

namespace schur {

// ===========================================================================
// IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InvalidInput("matrix rows have unequal length");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidInput("matrix product: dimension mismatch");
  IntMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) out(i, j) += a * o(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    if ((*this)(src, j) != 0) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    if ((*this)(i, src) != 0) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("determinant of a non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<BigInt> SNFResult::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t k = 0; k < std::min(S.rows(), S.cols()); ++k) d.push_back(S(k, k));
  return d;
}

namespace {

// Quotient rounded to nearest so the remainder is at most |p|/2 in size.
BigInt nearest_quotient(const BigInt& a, const BigInt& p) {
  BigInt q = a / p;
  BigInt r = a - q * p;
  BigInt r2 = 2 * abs(r), ap = abs(p);
  if (r2 > ap) q += ((r < 0) == (p < 0)) ? 1 : -1;
  return q;
}

}  // namespace

SNFResult snf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SNFResult res{a, IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix& S = res.S;
  IntMatrix& U = res.U;
  IntMatrix& V = res.V;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Global pivot: smallest |entry|, ties by lowest row then column.
    bool found = false;
    std::size_t pi = 0, pj = 0;
    BigInt best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (S(i, j) == 0) continue;
        BigInt v = abs(S(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    S.swap_rows(t, pi);
    U.swap_rows(t, pi);
    S.swap_cols(t, pj);
    V.swap_cols(t, pj);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        BigInt q = nearest_quotient(S(i, t), S(t, t));
        S.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        BigInt q = nearest_quotient(S(t, j), S(t, t));
        S.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
      }
      // A nonzero remainder is smaller than the pivot: it becomes the pivot.
      std::size_t bi = 0, bj = 0;
      BigInt bv = abs(S(t, t));
      bool smaller = false;
      for (std::size_t i = t + 1; i < m; ++i)
        if (S(i, t) != 0 && abs(S(i, t)) < bv) {
          bv = abs(S(i, t));
          bi = i;
          bj = t;
          smaller = true;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (S(t, j) != 0 && abs(S(t, j)) < bv) {
          bv = abs(S(t, j));
          bi = t;
          bj = j;
          smaller = true;
        }
      if (smaller) {
        S.swap_rows(t, bi);
        U.swap_rows(t, bi);
        S.swap_cols(t, bj);
        V.swap_cols(t, bj);
        continue;
      }
      for (std::size_t i = t + 1; i < m && !dirty; ++i)
        if (S(i, t) != 0) dirty = true;
      for (std::size_t j = t + 1; j < n && !dirty; ++j)
        if (S(t, j) != 0) dirty = true;
      if (dirty) continue;
      // Divisibility: pull in a row whose entries the pivot does not divide.
      for (std::size_t i = t + 1; i < m && !dirty; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            S.add_row_multiple(t, i, 1);
            U.add_row_multiple(t, i, 1);
            dirty = true;
            break;
          }
      if (!dirty) break;
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
  }
  return res;
}

IntMatrix SparseColumnMatrix::to_dense() const {
  IntMatrix d(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [r, v] : columns[c]) d(r, c) += v;
  return d;
}

// ===========================================================================
// ModMatrix

ModMatrix ModMatrix::identity(std::size_t n, i64 modulus) {
  ModMatrix m(n, n, modulus);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1 % modulus;
  return m;
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  if (cols != o.rows || modulus != o.modulus) throw InvalidInput("modular matrix product: shape or modulus mismatch");
  ModMatrix out(rows, o.cols, modulus);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      i64 a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols; ++j) out(i, j) = (out(i, j) + mul_mod(a, o(k, j), modulus)) % modulus;
    }
  return out;
}

namespace {

struct ModSmith {
  ModMatrix& A;
  ModMatrix* Q;
  ModMatrix* Qinv;
  i64 N;

  void row_combine(std::size_t dst, std::size_t src, i64 k) {  // row dst += k row src
    k = mod_floor(k, N);
    if (k == 0) return;
    for (std::size_t j = 0; j < A.cols; ++j) {
      i64 s = A(src, j);
      if (s) A(dst, j) = (A(dst, j) + mul_mod(k, s, N)) % N;
    }
  }
  void row_scale(std::size_t r, i64 u) {
    for (std::size_t j = 0; j < A.cols; ++j) A(r, j) = mul_mod(A(r, j), u, N);
  }
  // Rows (t, i) <- [[p, q], [-a/g, b/g]] (t, i).
  void row_mix(std::size_t t, std::size_t i, i64 p, i64 q, i64 c, i64 d) {
    for (std::size_t j = 0; j < A.cols; ++j) {
      i64 x = A(t, j), y = A(i, j);
      if (!x && !y) continue;
      A(t, j) = (mul_mod(p, x, N) + mul_mod(q, y, N)) % N;
      A(i, j) = (mul_mod(c, x, N) + mul_mod(d, y, N)) % N;
    }
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < A.cols; ++j) std::swap(A(a, j), A(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < A.rows; ++i) std::swap(A(i, a), A(i, b));
    if (Q) {
      for (std::size_t i = 0; i < Q->rows; ++i) std::swap((*Q)(i, a), (*Q)(i, b));
      for (std::size_t j = 0; j < Qinv->cols; ++j) std::swap((*Qinv)(a, j), (*Qinv)(b, j));
    }
  }
  // col dst += k col src (and the inverse row operation on Qinv).
  void col_combine(std::size_t dst, std::size_t src, i64 k) {
    k = mod_floor(k, N);
    if (k == 0) return;
    for (std::size_t i = 0; i < A.rows; ++i) {
      i64 s = A(i, src);
      if (s) A(i, dst) = (A(i, dst) + mul_mod(k, s, N)) % N;
    }
    if (Q) {
      for (std::size_t i = 0; i < Q->rows; ++i) {
        i64 s = (*Q)(i, src);
        if (s) (*Q)(i, dst) = ((*Q)(i, dst) + mul_mod(k, s, N)) % N;
      }
      i64 nk = mod_floor(-k, N);
      for (std::size_t j = 0; j < Qinv->cols; ++j) {
        i64 s = (*Qinv)(dst, j);
        if (s) (*Qinv)(src, j) = ((*Qinv)(src, j) + mul_mod(nk, s, N)) % N;
      }
    }
  }
  // Columns (t, j): new_t = p col_t + q col_j, new_j = c col_t + d col_j with
  // p d - q c = 1.
  void col_mix(std::size_t t, std::size_t j, i64 p, i64 q, i64 c, i64 d) {
    auto mix = [&](ModMatrix& M) {
      for (std::size_t i = 0; i < M.rows; ++i) {
        i64 x = M(i, t), y = M(i, j);
        if (!x && !y) continue;
        M(i, t) = (mul_mod(p, x, N) + mul_mod(q, y, N)) % N;
        M(i, j) = (mul_mod(c, x, N) + mul_mod(d, y, N)) % N;
      }
    };
    mix(A);
    if (Q) {
      mix(*Q);
      // Inverse of [[p, c], [q, d]] (acting on columns) is [[d, -c], [-q, p]];
      // applied to rows of Qinv.
      ModMatrix& R = *Qinv;
      for (std::size_t k = 0; k < R.cols; ++k) {
        i64 x = R(t, k), y = R(j, k);
        if (!x && !y) continue;
        R(t, k) = (mul_mod(d, x, N) + mul_mod(mod_floor(-c, N), y, N)) % N;
        R(j, k) = (mul_mod(mod_floor(-q, N), x, N) + mul_mod(p, y, N)) % N;
      }
    }
  }

  void run() {
    const std::size_t r = A.rows, c = A.cols;
    for (std::size_t t = 0; t < std::min(r, c); ++t) {
      bool found = false;
      std::size_t pi = 0, pj = 0;
      i64 best = 0;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          i64 v = A(i, j);
          if (!v) continue;
          i64 g = gcd64(v, N);
          if (!found || g < best) {
            found = true;
            best = g;
            pi = i;
            pj = j;
          }
        }
      if (!found) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        row_scale(t, unit_normalizer(A(t, t), N));
        i64 g = A(t, t);  // divides N
        bool changed = false;
        for (std::size_t i = t + 1; i < r; ++i) {
          i64 a = A(i, t);
          if (!a) continue;
          if (a % g == 0) {
            row_combine(i, t, -(a / g));
          } else {
            Xgcd64 e = xgcd64(g, a);
            row_mix(t, i, mod_floor(e.x, N), mod_floor(e.y, N), mod_floor(-(a / e.g), N), g / e.g);
            row_scale(t, unit_normalizer(A(t, t), N));
            g = A(t, t);
            changed = true;
          }
        }
        for (std::size_t j = t + 1; j < c; ++j) {
          i64 a = A(t, j);
          if (!a) continue;
          if (a % g == 0) {
            col_combine(j, t, -(a / g));
          } else {
            Xgcd64 e = xgcd64(g, a);
            col_mix(t, j, mod_floor(e.x, N), mod_floor(e.y, N), mod_floor(-(a / e.g), N), g / e.g);
            i64 u = unit_normalizer(A(t, t), N);
            row_scale(t, u);
            g = A(t, t);
            changed = true;
          }
        }
        if (changed) continue;
        bool column_clear = true;
        for (std::size_t i = t + 1; i < r && column_clear; ++i) column_clear = A(i, t) == 0;
        if (!column_clear) continue;
        bool pulled = false;
        for (std::size_t i = t + 1; i < r && !pulled; ++i)
          for (std::size_t j = t + 1; j < c; ++j)
            if (A(i, j) % g != 0) {
              row_combine(t, i, 1);
              pulled = true;
              break;
            }
        if (!pulled) break;
      }
    }
  }
};

}  // namespace

ModSNFResult snf_mod(ModMatrix a, bool want_q) {
  const i64 N = a.modulus;
  if (N < 1) throw InvalidInput("snf_mod: modulus must be positive");
  for (auto& v : a.data) v = mod_floor(v, N);
  ModSNFResult res;
  if (want_q) {
    res.Q = ModMatrix::identity(a.cols, N);
    res.Qinv = ModMatrix::identity(a.cols, N);
  }
  ModSmith sm{a, want_q ? &*res.Q : nullptr, want_q ? &*res.Qinv : nullptr, N};
  sm.run();
  for (std::size_t k = 0; k < std::min(a.rows, a.cols); ++k) res.invariants.push_back(gcd64(a(k, k), N));
  res.D = std::move(a);
  return res;
}

// ===========================================================================
// Echelon insertion over Z/N

ModEchelon::ModEchelon(std::size_t width, i64 modulus) : width_(width), n_(modulus), rows_(width) {}

namespace {

void normalize_row(std::vector<i64>& row, std::size_t c, i64 N) {
  i64 u = unit_normalizer(row[c], N);
  if (u == 1) return;
  for (std::size_t j = c; j < row.size(); ++j)
    if (row[j]) row[j] = mul_mod(row[j], u, N);
}

// Replaces (row, v) by an invertible combination that zeroes v[c].
// Returns true when the pivot row changed.
bool eliminate(std::vector<i64>& row, std::vector<i64>& v, std::size_t c, i64 N) {
  i64 p = row[c], a = v[c];
  const std::size_t w = v.size();
  if (a % p == 0) {
    i64 k = mod_floor(-(a / p), N);
    for (std::size_t j = c; j < w; ++j)
      if (row[j]) v[j] = (v[j] + mul_mod(k, row[j], N)) % N;
    return false;
  }
  Xgcd64 e = xgcd64(p, a);
  i64 x = mod_floor(e.x, N), y = mod_floor(e.y, N), s = mod_floor(-(a / e.g), N), t = p / e.g;
  for (std::size_t j = c; j < w; ++j) {
    i64 r0 = row[j], v0 = v[j];
    if (!r0 && !v0) continue;
    row[j] = (mul_mod(x, r0, N) + mul_mod(y, v0, N)) % N;
    v[j] = (mul_mod(s, r0, N) + mul_mod(t, v0, N)) % N;
  }
  normalize_row(row, c, N);
  return true;
}

}  // namespace

void ModEchelon::insert(std::vector<i64> v) {
  if (v.size() != width_) throw InvalidInput("echelon insert: width mismatch");
  for (auto& x : v) x = mod_floor(x, n_);
  for (std::size_t c = 0; c < width_; ++c) {
    if (!v[c]) continue;
    if (rows_[c].empty()) {
      normalize_row(v, c, n_);
      rows_[c] = std::move(v);
      return;
    }
    eliminate(rows_[c], v, c, n_);
  }
}

ModMatrix ModEchelon::as_square() const {
  ModMatrix m(width_, width_, n_);
  for (std::size_t c = 0; c < width_; ++c)
    if (!rows_[c].empty())
      for (std::size_t j = 0; j < width_; ++j) m(c, j) = rows_[c][j];
  return m;
}

// ===========================================================================
// Howell form over Z/N

HowellBasis::HowellBasis(std::size_t width, i64 modulus) : width_(width), n_(modulus), rows_(width) {}

void HowellBasis::insert(std::vector<i64> v) {
  if (v.size() != width_) throw InvalidInput("howell insert: width mismatch");
  for (auto& x : v) x = mod_floor(x, n_);
  insert_from(std::move(v), 0);
}

void HowellBasis::insert_from(std::vector<i64> v, std::size_t start) {
  std::vector<std::pair<std::vector<i64>, std::size_t>> work;
  work.emplace_back(std::move(v), start);
  while (!work.empty()) {
    auto [w, from] = std::move(work.back());
    work.pop_back();
    for (std::size_t c = from; c < width_; ++c) {
      if (!w[c]) continue;
      bool new_pivot_row = false;
      bool absorbed = false;
      if (rows_[c].empty()) {
        normalize_row(w, c, n_);
        rows_[c] = std::move(w);
        new_pivot_row = absorbed = true;
      } else {
        new_pivot_row = eliminate(rows_[c], w, c, n_);
      }
      if (new_pivot_row) {
        // Annihilator closure: (N/g) * row has a zero at c and must stay in
        // the span of the rows below.
        i64 g = rows_[c][c];
        if (g > 1) {
          i64 k = n_ / g;
          std::vector<i64> ann(width_, 0);
          bool any = false;
          for (std::size_t j = c + 1; j < width_; ++j) {
            ann[j] = mul_mod(k, rows_[c][j], n_);
            any = any || ann[j];
          }
          if (any) work.emplace_back(std::move(ann), c + 1);
        }
      }
      if (absorbed) break;
    }
  }
}

std::vector<i64> HowellBasis::reduce(std::vector<i64> v, std::size_t upto) const {
  if (v.size() != width_) throw InvalidInput("howell reduce: width mismatch");
  for (auto& x : v) x = mod_floor(x, n_);
  for (std::size_t c = 0; c < std::min(upto, width_); ++c) {
    if (!v[c]) continue;
    if (rows_[c].empty()) return v;
    i64 p = rows_[c][c];
    if (v[c] % p != 0) return v;
    i64 k = mod_floor(-(v[c] / p), n_);
    for (std::size_t j = c; j < width_; ++j)
      if (rows_[c][j]) v[j] = (v[j] + mul_mod(k, rows_[c][j], n_)) % n_;
  }
  return v;
}

bool HowellBasis::contains(const std::vector<i64>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](i64 x) { return x == 0; });
}

std::vector<std::pair<std::size_t, std::vector<i64>>> HowellBasis::rows() const {
  std::vector<std::pair<std::size_t, std::vector<i64>>> out;
  for (std::size_t c = 0; c < width_; ++c)
    if (!rows_[c].empty()) out.emplace_back(c, rows_[c]);
  return out;
}

}  // namespace schur
