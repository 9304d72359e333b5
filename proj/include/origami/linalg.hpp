#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "origami/rational.hpp"

namespace origami {

/// Dense row-major matrix. Used with std::int64_t for integral chain data and
/// with Rational for exact row reduction.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("matrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using QMatrix = Matrix<Rational>;
using IntVector = std::vector<std::int64_t>;
using QVector = std::vector<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);
QMatrix to_rational(const IntMatrix& m);

/// Builds a matrix whose columns are the given vectors (all of equal length).
IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t length);

/// Reduced row echelon form over Q. Pivot columns are written to `pivots`.
QMatrix rref(QMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const QMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column, scaled to be integral
/// and primitive.
std::vector<IntVector> integer_nullspace(const IntMatrix& m);

/// Diagonal of the Smith normal form (nonzero invariant factors, each dividing
/// the next, all positive). Zero factors are omitted, so the length is the rank.
std::vector<std::int64_t> smith_invariants(IntMatrix m);

/// Exact determinant of a square integer matrix via fraction-free elimination.
std::int64_t determinant(const IntMatrix& m);

std::int64_t dot(const IntVector& a, const IntVector& b);

std::string to_string(const IntMatrix& m);

}  // namespace origami
