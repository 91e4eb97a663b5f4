#ifndef SBL_MATRIX_HPP
#define SBL_MATRIX_HPP

#include <vector>

#include "sbl/poly.hpp"
#include "sbl/rational.hpp"

namespace sbl {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, T init = T())
      : rows_(rows), cols_(cols), data_(rows * cols, init) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n, T(0));
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_, b.cols_, T(0));
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

/// Fraction-free (Bareiss) determinant over the polynomial ring; every
/// division is exact.
Poly bareiss_det(Matrix<Poly> m);

/// Rank of a rational matrix by exact Gaussian elimination.
int rational_rank(Matrix<Rational> m);

}  // namespace sbl

#endif
