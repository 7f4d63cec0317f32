#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dh/dpoly/diff_poly.hpp"
#include "dh/exact/param_poly.hpp"
#include "dh/exact/rational.hpp"
#include "json.hpp"

namespace dh::wronskian {

using dpoly::DiffPoly;
using exact::Rational;

/// One column R_j(t) X_{n_j} of a Wronskian. R must have rational coefficients.
struct WronskEntry {
  exact::UniPoly r;
  unsigned var = 0;
};

/// The line (R_1(t) X_{n_1}, ..., R_d(t) X_{n_d}).
struct WronskSpec {
  std::vector<WronskEntry> entries;

  /// (t^{a_1} X_{n_1}, ..., t^{a_d} X_{n_d})
  static WronskSpec monomial(const std::vector<unsigned>& powers, const std::vector<unsigned>& vars);
};

/// The d x d matrix at t = 0: row r, column k holds
/// sum_j binom(r, j) R_k^(r-j)(0) X_{n_k}^(j).
std::vector<std::vector<DiffPoly>> wronskian_matrix(const WronskSpec& spec, unsigned n);

/// det of wronskian_matrix; differentially homogeneous of degree d or zero.
DiffPoly build_wronskian(const WronskSpec& spec, unsigned n);

/// Data (m, alpha) indexing one canonical basis element.
struct CanonicalDatum {
  std::vector<unsigned> m;                   // N+1 entries, |m| = d
  std::vector<std::vector<unsigned>> alphas;  // one increasing run per nonzero m_i, in index order

  [[nodiscard]] unsigned degree() const;
  [[nodiscard]] std::vector<unsigned> flat_alpha() const;
  /// Variable index of each Wronskian column, aligned with flat_alpha().
  [[nodiscard]] std::vector<unsigned> column_vars() const;
  [[nodiscard]] WronskSpec spec() const;
  friend bool operator==(const CanonicalDatum&, const CanonicalDatum&) = default;
};

/// Checks the run conditions: 0 <= a_1 < ... < a_{m_i} < m_{i_1} + ... + m_{i_l}.
bool is_valid(const CanonicalDatum& datum);

/// All data for (N, d), lexicographic in m and then in the flattened alpha.
std::vector<CanonicalDatum> canonical_data(unsigned n, unsigned d);

struct BasisElement {
  CanonicalDatum datum;
  DiffPoly poly;
};

/// The (N+1)^d canonical basis of differentially homogeneous polynomials of
/// degree d. `jobs` > 1 builds elements on that many threads.
std::vector<BasisElement> enumerate_canonical_basis(unsigned n, unsigned d, unsigned jobs = 1);

/// Wronsk(t^{a_1} Y_1, ..., t^{a_d} Y_d) over distinct formal variables;
/// Y_i is stored as variable index i-1 (ambient d-1).
DiffPoly build_formal_wronskian(const std::vector<unsigned>& alpha);

/// Linear combination of triangular indices (alpha_i <= i-1), sorted by index.
using FormalCombination = std::vector<std::pair<Rational, std::vector<unsigned>>>;

/// Rewrites Wronsk(t^alpha Y) over the triangular subfamily. Repeatedly takes
/// the leftmost i with alpha_i >= i and solves the vanishing sum
///   sum_{|g| = i} P_{alpha_1..alpha_{i-1}, c + g} = 0,  c = alpha - i e_i,
/// over compositions g of i on positions i..d for the alpha term. Every other
/// term is lexicographically smaller, so the rewriting terminates.
FormalCombination reduce_to_triangular(const std::vector<unsigned>& alpha);

DiffPoly expand(const FormalCombination& combination);

/// Maps Y_i -> X_{vars[i-1]} in a formal Wronskian.
DiffPoly specialize(const DiffPoly& formal, const std::vector<unsigned>& vars, unsigned n);

/// Checks sum_{|a| = i} N^{a_1} v_1 ^ ... ^ N^{a_p} v_p = 0 (p = d - i + 1)
/// coordinate by coordinate on the wedge basis. Throws std::invalid_argument
/// if N^d != 0 or the shapes do not fit.
bool verify_wedge_identity(const std::vector<std::vector<Rational>>& nilpotent,
                           const std::vector<std::vector<Rational>>& vectors, unsigned i);

/// N e_i = i e_{i+1} on C^d (columns are images of basis vectors).
std::vector<std::vector<Rational>> derivation_nilpotent(unsigned d);

/// span rank of { Wronsk(X_{n_1}, (theta+t) X_{n_2}, ..., (theta+t)^{d-1} X_{n_d}) }.
std::size_t theta_family_rank(unsigned n, unsigned d, const Rational& theta);

/// Manifest entry {"m","alpha","order","weight","poly"}; alpha is flattened.
nlohmann::json to_json(const BasisElement& e);
BasisElement basis_element_from_json(const nlohmann::json& j);
nlohmann::json manifest_json(const std::vector<BasisElement>& basis);
std::vector<BasisElement> manifest_from_json(const nlohmann::json& j);

}  // namespace dh::wronskian
