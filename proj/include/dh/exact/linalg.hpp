#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dh/exact/param_poly.hpp"
#include "dh/exact/rational.hpp"
#include "dh/exact/sparse_matrix.hpp"

namespace dh::exact {

using Vector = std::vector<Rational>;
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column

/// Reduced row echelon form of a rational matrix.
/// Pivot rule: leftmost column, then the candidate row with the smallest
/// support, then the lowest row index.
struct EchelonForm {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;           // one per pivot, pivot entry == 1
  std::vector<std::size_t> pivot_cols;   // increasing
};

EchelonForm row_reduce(std::vector<SparseRow> rows, std::size_t cols);
EchelonForm row_reduce(const SparseMatrix<Rational>& m);

std::size_t rank(const SparseMatrix<Rational>& m);
std::size_t rank(const std::vector<SparseRow>& rows, std::size_t cols);

/// Basis of the right kernel, one vector per free column (1 at the free
/// column, zero at every other free column).
std::vector<Vector> nullspace_basis(const SparseMatrix<Rational>& m);
std::vector<Vector> nullspace_basis(const std::vector<SparseRow>& rows, std::size_t cols);

/// Some x with m x = b, or nullopt when inconsistent. Free variables are 0.
std::optional<Vector> solve(const SparseMatrix<Rational>& m, const Vector& b);

/// Dimension of the intersection of the row spaces of a and b.
std::size_t intersection_dim(const std::vector<SparseRow>& a, const std::vector<SparseRow>& b,
                             std::size_t cols);

/// Multiplicative identity of a ring; specialize where Ring(1) means something else.
template <class Ring>
struct RingOne {
  static Ring get() { return Ring(1); }
};

/// Fraction-free (Bareiss) determinant over an integral domain with exact
/// division. Row swaps are used for zero pivots.
template <class Ring>
Ring det_bareiss(std::vector<std::vector<Ring>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return RingOne<Ring>::get();
  bool negate = false;
  Ring prev = RingOne<Ring>::get();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (coeff_is_zero(a[k][k])) {
      std::size_t swap = k + 1;
      while (swap < n && coeff_is_zero(a[swap][k])) ++swap;
      if (swap == n) return Ring{};
      std::swap(a[k], a[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Ring v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = divide_exact(std::move(v), prev);
      }
      a[i][k] = Ring{};
    }
    prev = a[k][k];
  }
  Ring d = a[n - 1][n - 1];
  return negate ? -d : d;
}

ParamPoly det(const SparseMatrix<ParamPoly>& m);

}  // namespace dh::exact
