#include "sgcf/matrix.hpp"

#include <string>
#include <utility>

namespace sgcf {
namespace {

void require_square(std::size_t rows, std::size_t cols, const char* what) {
  if (rows != cols) {
    throw Error(ErrorCode::dimension, std::string(what) + ": matrix is " + std::to_string(rows) +
                                          "x" + std::to_string(cols) + ", expected square");
  }
}

template <class M>
void require_product(const M& a, std::size_t inner, const char* what) {
  if (a.cols() != inner) {
    throw Error(ErrorCode::dimension, std::string(what) + ": inner dimensions " +
                                          std::to_string(a.cols()) + " and " +
                                          std::to_string(inner) + " do not conform");
  }
}

}  // namespace

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = BigRational(a(i, j));
  return r;
}

IntMatrix to_integer(const RatMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_integer()) {
        throw Error(ErrorCode::integrality, "entry (" + std::to_string(i) + "," +
                                                std::to_string(j) + ") = " + a(i, j).str() +
                                                " is not an integer");
      }
      r(i, j) = a(i, j).numerator();
    }
  }
  return r;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  require_product(a, b.rows(), "multiply");
  IntMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  require_product(a, b.rows(), "multiply");
  RatMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).sign() == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

IntVector mat_vec(const IntMatrix& a, std::span<const BigInt> x) {
  require_product(a, x.size(), "mat_vec");
  IntVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * x[j];
  return r;
}

RatVector mat_vec(const RatMatrix& a, std::span<const BigRational> x) {
  require_product(a, x.size(), "mat_vec");
  RatVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * x[j];
  return r;
}

RatVector mat_vec(const RatMatrix& a, std::span<const BigInt> x) {
  require_product(a, x.size(), "mat_vec");
  RatVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * BigRational(x[j]);
  return r;
}

BigInt det(const IntMatrix& a) {
  require_square(a.rows(), a.cols(), "det");
  const std::size_t n = a.rows();
  if (n == 0) return 1;

  IntMatrix m = a;
  BigInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        // Sylvester's identity makes this division exact.
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  BigInt result = m(n - 1, n - 1);
  if (sign < 0) result = -result;
  return result;
}

RatMatrix invert(const IntMatrix& a) {
  require_square(a.rows(), a.cols(), "invert");
  const std::size_t n = a.rows();
  RatMatrix work = to_rational(a);
  RatMatrix inv = RatMatrix::identity(n);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).sign() == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::singular, "matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const BigRational p = work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work(i, col).sign() == 0) continue;
      const BigRational f = work(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= f * work(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace sgcf
