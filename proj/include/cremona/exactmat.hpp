#pragma once

// Dense exact linear algebra over Z and Q.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cremona/error.hpp"

namespace cremona {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Row-major dense matrix. rows >= 1 and cols >= 1 always hold.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
      throw Error(ErrorCode::dimension_mismatch, "matrix dimensions must be positive");
    }
  }

  Matrix(std::initializer_list<std::initializer_list<T>> rows)
      : Matrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw Error(ErrorCode::dimension_mismatch, "ragged matrix literal");
      }
      std::size_t c = 0;
      for (const auto& v : row) (*this)(r, c++) = v;
      ++r;
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& columns) {
    if (columns.empty()) throw Error(ErrorCode::dimension_mismatch, "no columns");
    Matrix m(columns.front().size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != m.rows_) {
        throw Error(ErrorCode::dimension_mismatch, "columns of unequal length");
      }
      for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  void set_column(std::size_t c, std::span<const T> values) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, std::span<const Integer> x);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix to_rational(const IntMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination with full pivoting.
/// Pivot ties go to the lowest row, then the lowest column.
Integer det_exact(const IntMatrix& m);

/// Exact inverse, computed as adj(M) / det(M).
RatMatrix inverse_rational(const IntMatrix& m);

/// Adjugate (transposed cofactor matrix). adj(M) * M = det(M) * I.
IntMatrix adjugate(const IntMatrix& m);

/// det(G + D) for diagonal D, expanded as
///   sum over subsets S of [n] of (prod_{i in S} d_i) * (principal minor of G on [n] \ S).
/// Minors are evaluated by permutation expansion, so the result never goes
/// through elimination; intended as an independent check, n <= 8.
Integer det_diag_perturbation(const IntMatrix& g, const IntMatrix& d);

/// Principal minor of g on the index set encoded by `keep` (bit i set = keep i).
/// Permutation expansion; the empty minor is 1.
Integer principal_minor_leibniz(const IntMatrix& g, unsigned keep);

namespace serial {
/// Single-threaded reference for det_diag_perturbation.
Integer det_diag_perturbation(const IntMatrix& g, const IntMatrix& d);
}  // namespace serial

Integer sum(std::span<const Integer> v);
bool is_nonnegative(std::span<const Integer> v);
std::string to_string(std::span<const Integer> v);
std::string to_string(const IntMatrix& m);

}  // namespace cremona
