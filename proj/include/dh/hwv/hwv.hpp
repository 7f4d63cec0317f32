#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "dh/dpoly/diff_poly.hpp"
#include "dh/exact/linalg.hpp"
#include "dh/exact/rational.hpp"
#include "dh/tableaux/symmetric_group.hpp"
#include "dh/tableaux/tableaux.hpp"

namespace dh::hwv {

using dpoly::DiffPoly;
using exact::Rational;
using tableaux::GroupAlgebraElem;
using tableaux::Partition;
using tableaux::Permutation;
using tableaux::Tableau;

/// Sparse element of (Q^{k+1})^{tensor d}; basis tensors are index vectors in {0..k}^d.
class Tensor {
 public:
  using Index = std::vector<unsigned>;
  using Terms = std::map<Index, Rational>;

  Tensor(unsigned d, unsigned k) : d_(d), k_(k) {}
  /// Throws std::out_of_range if an index exceeds k.
  static Tensor basis(const Index& index, unsigned k);

  [[nodiscard]] unsigned factors() const { return d_; }
  [[nodiscard]] unsigned local_max() const { return k_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(const Index& index) const;
  void add(const Index& index, const Rational& c);

  [[nodiscard]] Tensor scaled(const Rational& c) const;
  friend Tensor operator+(const Tensor& a, const Tensor& b);
  friend Tensor operator-(const Tensor& a, const Tensor& b);
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.d_ == b.d_ && a.k_ == b.k_ && a.terms_ == b.terms_;
  }

  /// Dense coordinate of a basis index: base-(k+1) digits, first factor most significant.
  [[nodiscard]] std::size_t position(const Index& index) const;
  [[nodiscard]] std::size_t dimension() const;
  [[nodiscard]] exact::SparseRow to_row() const;

 private:
  void check(const Index& index) const;
  unsigned d_, k_;
  Terms terms_;
};

/// All basis indices of (Q^{k+1})^{tensor d}, lexicographic.
std::vector<Tensor::Index> basis_indices(unsigned d, unsigned k);

/// det(X_b^(seq_a)) over a, b = 0..r. Throws std::invalid_argument if r > N.
DiffPoly column_det(const std::vector<unsigned>& seq, unsigned n);

/// Product of the column determinants of T (entries are derivative orders).
DiffPoly d_t(const Tableau& t, unsigned n);

/// D_T for every semistandard T of shape lambda filled from {0..k}. Empty
/// when lambda has more than N+1 rows (the space is zero).
std::vector<std::pair<Tableau, DiffPoly>> hwv_basis(const Partition& lambda, unsigned k, unsigned n);

/// Basis tensor read off T row by row.
Tensor tensor_of_tableau(const Tableau& t, unsigned k);

/// (v_1 x ... x v_d) . sigma = v_sigma(1) x ... x v_sigma(d). Satisfies
/// (t . s) . u = t . (s * u).
Tensor tensor_sigma_action(const Tensor& t, const Permutation& sigma);

/// t . g for a group algebra element g.
Tensor tensor_group_action(const Tensor& t, const GroupAlgebraElem& g);

/// c_lambda = c_T for the row-consecutive tableau of shape lambda.
GroupAlgebraElem c_lambda(const Partition& lambda);

/// t . c_lambda. Throws std::invalid_argument if |lambda| differs from the factor count.
Tensor symmetrizer_projection(const Tensor& t, const Partition& lambda);

/// The local nilpotent: index i -> i * (index i-1).
Tensor j_local(const Tensor& t, unsigned position);

/// Sum over ordered tuples of l distinct positions of J applied in those
/// factors (each l-subset counted l! times). Throws unless 1 <= l <= d.
Tensor j_ell(const Tensor& t, unsigned ell);

/// (alpha Id + J) applied in every factor, as coefficients of alpha^0..alpha^d.
std::vector<Tensor> alpha_shift(const Tensor& t);

/// dim of the common kernel of J^(1..d) on (Q^{k+1})^{tensor d}.
std::size_t kernel_dim_full(unsigned d, unsigned k);
/// Basis of that common kernel (reduced echelon form).
std::vector<exact::Vector> kernel_basis(unsigned d, unsigned k);

/// dim of the common kernel intersected with the image of right
/// multiplication by c_lambda.
std::size_t kernel_dim_isotypic(const Partition& lambda, unsigned k);

/// Expresses D_T over the semistandard D_S by an exact solve. Throws
/// std::logic_error if the system is inconsistent.
std::vector<std::pair<Rational, Tableau>> straighten(const Tableau& t, unsigned k, unsigned n);

/// e(sum a_S D_S) = sum a_S tensor_of_tableau(S) . c_lambda. p must lie in
/// the span of hwv_basis(lambda, k, N) with N = p.ambient(); throws
/// std::invalid_argument otherwise or if lambda is too tall.
Tensor e_iso(const DiffPoly& p, const Partition& lambda, unsigned k);

/// Dimension of { P in D_lambda^(k) : P(alpha X^(i) + i X^(i-1)) = alpha^d P },
/// computed on the differential-polynomial side.
std::size_t iso_solution_dim(const Partition& lambda, unsigned k, unsigned n);

}  // namespace dh::hwv
