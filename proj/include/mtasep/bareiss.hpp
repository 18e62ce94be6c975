#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <utility>
#include <vector>

namespace mtasep {

/// Upper-trapezoidal form produced by fraction-free (Bareiss) elimination.
///
/// `reduced` holds the eliminated matrix with rows and columns permuted;
/// column k of `reduced` is column `column_order[k]` of the input. The first
/// `rank` diagonal entries are the nonzero pivots, and each pivot equals the
/// determinant of the leading principal minor of the permuted input, so all
/// entries stay in the scalar ring.
template <typename Scalar>
struct FractionFreeEchelon {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix reduced;
  std::vector<Eigen::Index> column_order;
  Eigen::Index rank = 0;
};

/// Bareiss elimination with row and column pivoting on an integral-domain
/// scalar. Every division performed is exact.
template <typename Scalar>
FractionFreeEchelon<Scalar> fraction_free_echelon(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
  FractionFreeEchelon<Scalar> out;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  out.column_order.resize(static_cast<std::size_t>(cols));
  for (Eigen::Index j = 0; j < cols; ++j) out.column_order[static_cast<std::size_t>(j)] = j;

  Scalar previous = 1;
  Scalar scratch;
  Eigen::Index k = 0;
  for (; k < rows && k < cols; ++k) {
    Eigen::Index pivot_row = -1;
    Eigen::Index pivot_col = -1;
    for (Eigen::Index j = k; j < cols && pivot_row < 0; ++j) {
      for (Eigen::Index i = k; i < rows; ++i) {
        if (a(i, j) != 0) {
          pivot_row = i;
          pivot_col = j;
          break;
        }
      }
    }
    if (pivot_row < 0) break;
    if (pivot_row != k) a.row(k).swap(a.row(pivot_row));
    if (pivot_col != k) {
      a.col(k).swap(a.col(pivot_col));
      std::swap(out.column_order[static_cast<std::size_t>(k)],
                out.column_order[static_cast<std::size_t>(pivot_col)]);
    }
    const Scalar& pivot = a(k, k);
    for (Eigen::Index i = k + 1; i < rows; ++i) {
      const Scalar factor = a(i, k);
      for (Eigen::Index j = k + 1; j < cols; ++j) {
        scratch = pivot * a(i, j);
        if (factor != 0) scratch -= factor * a(k, j);
        a(i, j) = scratch / previous;
      }
      a(i, k) = 0;
    }
    previous = pivot;
  }
  out.rank = k;
  out.reduced = std::move(a);
  return out;
}

}  // namespace mtasep
