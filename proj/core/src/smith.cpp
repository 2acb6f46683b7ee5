#include <utility>

#include "sgcf/matrix.hpp"

namespace sgcf {
namespace {

// Row/column operations applied simultaneously to the working matrix and
// the accumulated transform, so that u * a * v stays equal to `work`.
struct Reducer {
  IntMatrix work;
  IntMatrix u;
  IntMatrix v;

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < work.cols(); ++j) std::swap(work(r1, j), work(r2, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(r1, j), u(r2, j));
  }

  void swap_cols(std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < work.rows(); ++i) std::swap(work(i, c1), work(i, c2));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, c1), v(i, c2));
  }

  // row[target] -= factor * row[source]
  void add_row(std::size_t target, std::size_t source, const BigInt& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < work.cols(); ++j) work(target, j) -= factor * work(source, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(target, j) -= factor * u(source, j);
  }

  // col[target] -= factor * col[source]
  void add_col(std::size_t target, std::size_t source, const BigInt& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < work.rows(); ++i) work(i, target) -= factor * work(i, source);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, target) -= factor * v(i, source);
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < work.cols(); ++j) work(r, j) = -work(r, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
  }

  // Moves the entry of least nonzero magnitude in the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    bool found = false;
    std::size_t best_r = t, best_c = t;
    BigInt best;
    for (std::size_t i = t; i < work.rows(); ++i) {
      for (std::size_t j = t; j < work.cols(); ++j) {
        if (work(i, j) == 0) continue;
        BigInt mag = abs(work(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          best_r = i;
          best_c = j;
        }
      }
    }
    if (!found) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }

  // Clears row t and column t outside the pivot; returns false when some
  // remainder survived and the pivot has to be chosen again.
  bool clear_cross(std::size_t t) {
    bool clean = true;
    for (std::size_t i = t + 1; i < work.rows(); ++i) {
      if (work(i, t) == 0) continue;
      add_row(i, t, BigInt(work(i, t) / work(t, t)));
      if (work(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < work.cols(); ++j) {
      if (work(t, j) == 0) continue;
      add_col(j, t, BigInt(work(t, j) / work(t, t)));
      if (work(t, j) != 0) clean = false;
    }
    return clean;
  }

  // Finds a trailing entry the pivot does not divide and folds its row in.
  bool enforce_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < work.rows(); ++i) {
      for (std::size_t j = t + 1; j < work.cols(); ++j) {
        if (work(i, j) % work(t, t) != 0) {
          add_row(t, i, BigInt(-1));
          return false;
        }
      }
    }
    return true;
  }
};

}  // namespace

SNFDecomposition smith_normal_form(const IntMatrix& a) {
  Reducer r{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  const std::size_t diag = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < diag; ++t) {
    if (!r.place_pivot(t)) break;
    while (true) {
      if (!r.clear_cross(t)) {
        r.place_pivot(t);
        continue;
      }
      if (!r.enforce_divisibility(t)) {
        r.place_pivot(t);
        continue;
      }
      break;
    }
    if (r.work(t, t) < 0) r.negate_row(t);
  }

  SNFDecomposition out;
  out.d.resize(diag);
  for (std::size_t i = 0; i < diag; ++i) out.d[i] = r.work(i, i);
  out.u = std::move(r.u);
  out.v = std::move(r.v);
  return out;
}

}  // namespace sgcf
