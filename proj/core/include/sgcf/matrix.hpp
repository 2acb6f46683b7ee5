#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "sgcf/error.hpp"
#include "sgcf/rational.hpp"

namespace sgcf {

using IntVector = std::vector<BigInt>;
using RatVector = std::vector<BigRational>;

/// Dense row-major matrix. Dimensions are fixed at construction.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::dimension, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<BigRational>;

RatMatrix to_rational(const IntMatrix& a);

/// Converts a matrix whose entries are all integral; throws integrality otherwise.
IntMatrix to_integer(const RatMatrix& a);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);

IntVector mat_vec(const IntMatrix& a, std::span<const BigInt> x);
RatVector mat_vec(const RatMatrix& a, std::span<const BigRational> x);
RatVector mat_vec(const RatMatrix& a, std::span<const BigInt> x);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det(const IntMatrix& a);

/// Exact inverse over the rationals; throws singular when det(a) == 0.
RatMatrix invert(const IntMatrix& a);

/// u * a * v = diag(d), with u and v unimodular and d_i | d_{i+1}, d_i >= 0.
struct SNFDecomposition {
  IntVector d;
  IntMatrix u;
  IntMatrix v;
};

SNFDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace sgcf
