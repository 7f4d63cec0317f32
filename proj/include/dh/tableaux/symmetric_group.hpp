#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dh/exact/rational.hpp"
#include "dh/tableaux/tableaux.hpp"

namespace dh::tableaux {

/// A bijection of {1..d}; stored 0-based, images[i] = sigma(i+1) - 1.
class Permutation {
 public:
  Permutation() = default;
  /// 0-based images; throws std::invalid_argument unless bijective.
  explicit Permutation(std::vector<unsigned> images);
  static Permutation identity(std::size_t d);
  /// 1-based images as written in one-line notation.
  static Permutation from_one_based(const std::vector<unsigned>& images);
  /// Product of disjoint or overlapping 1-based cycles, rightmost applied first.
  static Permutation from_cycles(std::size_t d, const std::vector<std::vector<unsigned>>& cycles);

  [[nodiscard]] std::size_t degree() const { return images_.size(); }
  [[nodiscard]] unsigned operator()(unsigned i) const { return images_[i]; }
  [[nodiscard]] const std::vector<unsigned>& images() const { return images_; }
  [[nodiscard]] Permutation inverse() const;
  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] std::string to_string() const;

  /// Composition: (s * t)(i) = s(t(i)).
  friend Permutation operator*(const Permutation& s, const Permutation& t);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<unsigned> images_;
};

/// All of Sigma_d, lexicographic in one-line notation.
std::vector<Permutation> all_permutations(std::size_t d);

/// Sparse element of Q[Sigma_d].
class GroupAlgebraElem {
 public:
  using Terms = std::map<Permutation, Rational>;

  explicit GroupAlgebraElem(std::size_t d = 0) : d_(d) {}
  static GroupAlgebraElem of(const Permutation& p, const Rational& c = Rational(1));
  static GroupAlgebraElem one(std::size_t d) { return of(Permutation::identity(d)); }

  [[nodiscard]] std::size_t degree() const { return d_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(const Permutation& p) const;
  void add(const Permutation& p, const Rational& c);

  [[nodiscard]] GroupAlgebraElem scaled(const Rational& c) const;
  friend GroupAlgebraElem operator+(const GroupAlgebraElem& a, const GroupAlgebraElem& b);
  friend GroupAlgebraElem operator-(const GroupAlgebraElem& a, const GroupAlgebraElem& b);
  friend bool operator==(const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }

 private:
  void check(const Permutation& p) const;
  std::size_t d_;
  Terms terms_;
};

/// Convolution: sum_{s,t} u_s v_t (s * t). Throws std::invalid_argument on degree mismatch.
GroupAlgebraElem group_algebra_mul(const GroupAlgebraElem& u, const GroupAlgebraElem& v);
inline GroupAlgebraElem operator*(const GroupAlgebraElem& u, const GroupAlgebraElem& v) {
  return group_algebra_mul(u, v);
}

/// Permutations preserving every row (resp. column) of T, T filled with 1..d.
std::vector<Permutation> row_group(const Tableau& t);
std::vector<Permutation> column_group(const Tableau& t);

/// a_T = sum of R(T), b_T = signed sum of C(T), c_T = b_T * a_T.
/// Throw std::invalid_argument unless T is standard.
GroupAlgebraElem row_symmetrizer(const Tableau& t);
GroupAlgebraElem column_antisymmetrizer(const Tableau& t);
GroupAlgebraElem young_symmetrizer(const Tableau& t);

/// The tableau with every entry i replaced by sigma(i) (1-based entries).
Tableau relabel(const Permutation& sigma, const Tableau& t);

}  // namespace dh::tableaux
