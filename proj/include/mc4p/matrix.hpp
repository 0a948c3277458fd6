#pragma once
// Dense matrices over an exact field, with the operations the monodromy and
// convolution layers need: product, inverse, rank, kernel bases, Berkowitz
// characteristic polynomials (division-free, any dimension up to the guard)
// and Jordan types computed from rank sequences against a caller-supplied
// candidate eigenvalue list.

#include <algorithm>
#include <string>
#include <vector>

#include "mc4p/errors.hpp"
#include "mc4p/field_traits.hpp"
#include "mc4p/poly.hpp"

namespace mc4p {

template <class F>
class Matrix {
 public:
  Matrix(long rows, long cols, const F& fill)
      : rows_(rows), cols_(cols), e_(rows * cols, fill) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
  }

  static Matrix identity(long n, const F& exemplar) {
    Matrix m(n, n, field_zero_like(exemplar));
    F one = field_one_like(exemplar);
    for (long i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    if (rows.empty() || rows[0].empty())
      throw DimensionError("matrix needs at least one entry");
    Matrix m(rows.size(), rows[0].size(), field_zero_like(rows[0][0]));
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows[0].size())
        throw DimensionError("ragged matrix rows");
      for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  F& at(long i, long j) { return e_[i * cols_ + j]; }
  const F& at(long i, long j) const { return e_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_, field_zero_like(a.e_[0]));
    for (long i = 0; i < a.rows_; ++i)
      for (long k = 0; k < a.cols_; ++k) {
        const F& aik = a.at(i, k);
        if (field_is_zero(aik)) continue;
        for (long j = 0; j < b.cols_; ++j) {
          const F& bkj = b.at(k, j);
          if (!field_is_zero(bkj)) r.at(i, j) = r.at(i, j) + aik * bkj;
        }
      }
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DimensionError("matrix sum shape mismatch");
    Matrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DimensionError("matrix difference shape mismatch");
    Matrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] - b.e_[i];
    return r;
  }

  Matrix scaled(const F& s) const {
    Matrix r = *this;
    for (F& v : r.e_) v = v * s;
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.e_.size(); ++i)
      if (!field_is_zero(a.e_[i] - b.e_[i])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  F trace() const {
    if (!is_square()) throw DimensionError("trace of non-square matrix");
    F t = field_zero_like(e_[0]);
    for (long i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
  }

  Matrix pow(long k) const;

  std::string key() const {
    std::string s = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
    for (const F& v : e_) s += field_key_of(v) + ";";
    return s;
  }

 private:
  static std::string field_key_of(const F& v);

  long rows_, cols_;
  std::vector<F> e_;
};

template <>
inline std::string Matrix<CycNum>::field_key_of(const CycNum& v) { return v.key(); }
template <>
inline std::string Matrix<Rat>::field_key_of(const Rat& v) { return v.get_str(); }

// Row echelon reduction in place.  Pivots are chosen within each column to
// minimize field_complexity, which keeps cyclotomic entry growth tame.
// Returns the pivot columns.
template <class F>
std::vector<long> echelonize(Matrix<F>& m) {
  std::vector<long> pivots;
  long row = 0;
  for (long col = 0; col < m.cols() && row < m.rows(); ++col) {
    long best = -1;
    size_t best_size = 0;
    for (long r = row; r < m.rows(); ++r) {
      if (field_is_zero(m.at(r, col))) continue;
      size_t sz = field_complexity(m.at(r, col));
      if (best < 0 || sz < best_size) {
        best = r;
        best_size = sz;
      }
    }
    if (best < 0) continue;
    if (best != row)
      for (long j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(best, j));
    F inv = field_inv(m.at(row, col));
    for (long j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
    for (long r = 0; r < m.rows(); ++r) {
      if (r == row || field_is_zero(m.at(r, col))) continue;
      F f = m.at(r, col);
      for (long j = col; j < m.cols(); ++j)
        m.at(r, j) = m.at(r, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
long rank(const Matrix<F>& m) {
  Matrix<F> copy = m;
  return (long)echelonize(copy).size();
}

// Basis of the right kernel {v : m v = 0}; one vector per free column of the
// reduced echelon form, in ascending free-column order.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
  Matrix<F> r = m;
  std::vector<long> pivots = echelonize(r);
  F zero = field_zero_like(m.at(0, 0));
  F one = field_one_like(m.at(0, 0));
  std::vector<bool> is_pivot(m.cols(), false);
  for (long p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (long free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), zero);
    v[free] = one;
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      v[pivots[pi]] = -r.at((long)pi, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Incrementally maintained row space in reduced echelon form; add() doubles
// as an exact membership test.  Used for span closures and for completing
// subspaces to bases.
template <class F>
class RowSpan {
 public:
  // Returns true when v was outside the span and has been added.
  bool add(std::vector<F> v) {
    for (size_t i = 0; i < rows_.size(); ++i)
      if (!field_is_zero(v[pivots_[i]])) axpy(v, rows_[i], v[pivots_[i]]);
    size_t j = 0;
    while (j < v.size() && field_is_zero(v[j])) ++j;
    if (j == v.size()) return false;
    F inv = field_inv(v[j]);
    for (F& e : v) e = e * inv;
    for (size_t i = 0; i < rows_.size(); ++i)
      if (!field_is_zero(rows_[i][j])) axpy(rows_[i], v, rows_[i][j]);
    pivots_.push_back(j);
    rows_.push_back(std::move(v));
    return true;
  }

  long dim() const { return (long)rows_.size(); }

 private:
  static void axpy(std::vector<F>& v, const std::vector<F>& row, F factor) {
    for (size_t k = 0; k < v.size(); ++k) v[k] = v[k] - factor * row[k];
  }

  std::vector<std::vector<F>> rows_;
  std::vector<size_t> pivots_;
};

template <class F>
Matrix<F> mat_inv(const Matrix<F>& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  long n = m.rows();
  F zero = field_zero_like(m.at(0, 0));
  Matrix<F> aug(n, 2 * n, zero);
  F one = field_one_like(m.at(0, 0));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = one;
  }
  std::vector<long> pivots = echelonize(aug);
  if ((long)pivots.size() != n || pivots.back() != n - 1)
    throw SingularError("matrix is singular");
  Matrix<F> inv(n, n, zero);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

template <class F>
Matrix<F> Matrix<F>::pow(long k) const {
  if (!is_square()) throw DimensionError("power of non-square matrix");
  if (k < 0) return mat_inv(*this).pow(-k);
  Matrix<F> base = *this;
  Matrix<F> acc = identity(rows_, e_[0]);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

constexpr long kCharPolyDimensionGuard = 12;

// Berkowitz' division-free algorithm; returns det(tI - A), monic of degree n.
template <class F>
Poly<F> char_poly(const Matrix<F>& a) {
  if (!a.is_square()) throw DimensionError("char_poly of non-square matrix");
  long n = a.rows();
  if (n > kCharPolyDimensionGuard)
    throw DimensionError("char_poly dimension guard exceeded (max 12)");
  F zero = field_zero_like(a.at(0, 0));
  F one = field_one_like(a.at(0, 0));

  // p holds coefficients of det(tI - A_m) for the leading principal m x m
  // submatrix, highest power first: p[0] t^m + p[1] t^{m-1} + ...
  std::vector<F> p{one};
  for (long m = 1; m <= n; ++m) {
    // Toeplitz column: t[0]=1, t[1]=-a_mm, t[k]=-(R M^{k-2} C), k=2..m
    std::vector<F> t(m + 1, zero);
    t[0] = one;
    t[1] = -a.at(m - 1, m - 1);
    if (m >= 2) {
      std::vector<F> v(m - 1, zero);               // M^k C, k = 0,1,...
      for (long i = 0; i < m - 1; ++i) v[i] = a.at(i, m - 1);
      for (long k = 2; k <= m; ++k) {
        F dot = zero;
        for (long i = 0; i < m - 1; ++i)
          if (!field_is_zero(v[i])) dot = dot + a.at(m - 1, i) * v[i];
        t[k] = -dot;
        if (k < m) {
          std::vector<F> nv(m - 1, zero);
          for (long i = 0; i < m - 1; ++i)
            for (long j = 0; j < m - 1; ++j)
              if (!field_is_zero(v[j])) nv[i] = nv[i] + a.at(i, j) * v[j];
          v = std::move(nv);
        }
      }
    }
    std::vector<F> np(m + 1, zero);
    for (long i = 0; i < (long)p.size(); ++i)
      for (long k = 0; k + i <= m; ++k)
        np[i + k] = np[i + k] + t[k] * p[i];
    p = std::move(np);
  }
  // convert to ascending-coefficient Poly
  std::vector<F> asc(p.rbegin(), p.rend());
  return Poly<F>(zero, std::move(asc));
}

// Jordan block structure.  Blocks are (eigenvalue, size) pairs sorted by the
// eigenvalue's serialization then size, so equal structures compare equal.
struct JordanBlock {
  CycNum eigenvalue;
  long size;
};

using JordanType = std::vector<JordanBlock>;

inline bool operator==(const JordanBlock& a, const JordanBlock& b) {
  return a.size == b.size && a.eigenvalue.eq(b.eigenvalue);
}
inline bool operator==(const JordanType& a, const JordanType& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

// Computes the Jordan type assuming every eigenvalue is in `candidates`
// (checked: the characteristic polynomial must split as a product of
// (t - c) over the candidate list, else EigenvalueError).
JordanType jordan_type(const Matrix<CycNum>& a, const std::vector<CycNum>& candidates);

}  // namespace mc4p
