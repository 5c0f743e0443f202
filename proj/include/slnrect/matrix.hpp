#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "slnrect/scalar.hpp"
#include "slnrect/unipoly.hpp"

namespace slnrect {

/// Dense row-major matrix over an exact ring (Scalar or UniPoly).
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1L);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not chain");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Copy without row `r` and column `c`.
  Matrix minor(std::size_t r, std::size_t c) const {
    Matrix out(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
        if (j == c) continue;
        out(oi, oj++) = (*this)(i, j);
      }
      ++oi;
    }
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<UniPoly>;

inline Scalar exact_quotient(const Scalar& a, const Scalar& b) { return a / b; }
inline UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) { return exact_div(a, b); }

/// Fraction-free (Bareiss) determinant; every division is exact.
template <class T>
T determinant(Matrix<T> m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1L);
  T sign(1L);
  T prev(1L);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return T();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_quotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Classical adjugate: adj(A) * A = det(A) * I.
template <class T>
Matrix<T> adjugate(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  Matrix<T> out(n, n);
  if (n == 1) {
    out(0, 0) = T(1L);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T c = determinant(a.minor(i, j));
      out(j, i) = ((i + j) % 2 == 0) ? c : -c;
    }
  }
  return out;
}

/// Rank over the Gaussian rationals.
std::size_t rank(ScalarMatrix a);

/// Inverse of an invertible scalar matrix.
ScalarMatrix inverse(const ScalarMatrix& a);

/// One solution of a * x = b (free unknowns set to zero), or nothing when
/// the system is inconsistent.
std::optional<std::vector<Scalar>> solve_linear(ScalarMatrix a, std::vector<Scalar> b);

/// Entrywise evaluation of a polynomial matrix.
ScalarMatrix evaluate(const PolyMatrix& m, const Scalar& t0);

}  // namespace slnrect
