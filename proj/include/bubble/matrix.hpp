#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "bubble/laurent.hpp"
#include "bubble/number_field.hpp"

namespace bubble {

// Dense matrix over an exact scalar ring (Laurent or Algebraic).  Gram
// matrices at desk scale stay small, so no sparse machinery.
template <class T>
class Matrix {
 public:
  Matrix(long rows, long cols, T zero)
      : rows_(rows), cols_(cols), zero_(std::move(zero)),
        a_(static_cast<std::size_t>(rows * cols), zero_) {
    if (rows < 0 || cols < 0)
      throw std::invalid_argument("Matrix: negative dimension");
  }

  static Matrix identity(long n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (long i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& at(long r, long c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
  const T& at(long r, long c) const {
    return a_[static_cast<std::size_t>(r * cols_ + c)];
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_, zero_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix r(a.rows_, b.cols_, a.zero_);
    for (long i = 0; i < a.rows_; ++i)
      for (long k = 0; k < a.cols_; ++k)
        for (long j = 0; j < b.cols_; ++j)
          r.at(i, j) += a.at(i, k) * b.at(k, j);
    return r;
  }

 private:
  long rows_, cols_;
  T zero_;
  std::vector<T> a_;
};

template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      for (long k = 0; k < b.rows(); ++k)
        for (long l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
  return r;
}

template <class T>
Matrix<T> block_diagonal(const std::vector<Matrix<T>>& blocks, const T& zero) {
  long n = 0;
  for (const auto& b : blocks) {
    if (b.rows() != b.cols())
      throw std::invalid_argument("block_diagonal: blocks must be square");
    n += b.rows();
  }
  Matrix<T> r(n, n, zero);
  long off = 0;
  for (const auto& b : blocks) {
    for (long i = 0; i < b.rows(); ++i)
      for (long j = 0; j < b.cols(); ++j) r.at(off + i, off + j) = b.at(i, j);
    off += b.rows();
  }
  return r;
}

// Fraction-free (Bareiss) determinant over an integral domain; div must
// perform the exact division a/b.
template <class T, class IsZero, class Div>
T bareiss_determinant(Matrix<T> m, const T& one, IsZero is_zero, Div div) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix not square");
  const long n = m.rows();
  if (n == 0) return one;
  T prev = one;
  bool negate = false;
  for (long k = 0; k + 1 < n; ++k) {
    long pivot = -1;
    for (long i = k; i < n; ++i)
      if (!is_zero(m.at(i, k))) {
        pivot = i;
        break;
      }
    if (pivot < 0) return m.zero();
    if (pivot != k) {
      for (long j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      negate = !negate;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j)
        m.at(i, j) =
            div(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
      m.at(i, k) = m.zero();
    }
    prev = m.at(k, k);
  }
  T det = m.at(n - 1, n - 1);
  if (negate) {
    T neg = m.zero() - det;
    return neg;
  }
  return det;
}

// default guard for symbolic determinants; overridable via the
// BUBBLE_MAX_SYMBOLIC_DIM environment variable
long symbolic_dim_limit();

// Exact determinant of a Laurent-entry matrix (valid over the integral
// domain of Laurent polynomials).  Guarded against blow-up above the
// symbolic dimension limit.
Laurent determinant(const Matrix<Laurent>& m, long max_dim = -1);

// Exact determinant over a number field.
Algebraic determinant(const Matrix<Algebraic>& m);

// Exact rank by Gaussian elimination over the field of the entries.
long rank(const Matrix<Algebraic>& m);

// Ranking a generic (Laurent) matrix is not defined; specialize first.
long rank(const Matrix<Laurent>&);

}  // namespace bubble
