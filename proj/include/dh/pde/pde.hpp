#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dh/exact/linalg.hpp"
#include "dh/exact/rational.hpp"

namespace dh::pde {

using exact::Rational;

/// Polynomial in X_1..X_d over Q, keyed by exponent vectors of length d.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using Terms = std::map<Exponents, Rational>;

  explicit MultiPoly(unsigned nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(const Rational& c, unsigned nvars);
  /// X_i, 1-based as in X_1..X_d.
  static MultiPoly variable(unsigned i, unsigned nvars);

  [[nodiscard]] unsigned nvars() const { return nvars_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for zero.
  [[nodiscard]] int degree() const;
  void add(const Exponents& e, const Rational& c);

  [[nodiscard]] MultiPoly scaled(const Rational& c) const;
  /// d^times / dX_i^times, i 1-based.
  [[nodiscard]] MultiPoly partial(unsigned i, unsigned times = 1) const;
  /// Applies d^{e_1}/dX_1^{e_1} ... d^{e_d}/dX_d^{e_d}.
  [[nodiscard]] MultiPoly partial(const Exponents& e) const;
  [[nodiscard]] std::string to_string() const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check(const Exponents& e) const;
  unsigned nvars_;
  Terms terms_;
};

/// Power-sum operator sum_i d^l / dX_i^l. Throws unless 1 <= l <= nvars.
MultiPoly newton_operator(const MultiPoly& p, unsigned ell);

/// Sum over ordered tuples of l distinct indices of d^l / dX_{i_1} ... dX_{i_l}.
/// Throws unless 1 <= l <= nvars.
MultiPoly elementary_operator(const MultiPoly& p, unsigned ell);

enum class System { Newton, Elementary };

/// Monomials in d variables of total degree <= bound, graded then lexicographic.
std::vector<MultiPoly::Exponents> monomials_up_to(unsigned d, unsigned bound);

/// Polynomial solutions of degree <= bound (default d(d-1)/2) of
/// op_l p = 0 for l = 1..d. Throws for d = 0.
std::vector<MultiPoly> solution_space_basis(unsigned d, System system = System::Newton,
                                            std::optional<unsigned> bound = std::nullopt);
std::size_t solution_space_dim(unsigned d, System system = System::Newton,
                               std::optional<unsigned> bound = std::nullopt);

/// prod_{i<j} (X_i - X_j).
MultiPoly vandermonde(unsigned d);

/// The distinct nonzero partial derivatives of the Vandermonde product
/// (including itself), lexicographic in the derivative multi-index. Throws for d = 0.
std::vector<MultiPoly> vandermonde_derivative_basis(unsigned d);

/// Rank of a family of polynomials over Q.
std::size_t span_rank(const std::vector<MultiPoly>& polys);

}  // namespace dh::pde
