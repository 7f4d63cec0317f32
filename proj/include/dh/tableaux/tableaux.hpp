#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dh/exact/rational.hpp"
#include "gmpxx.h"

namespace dh::tableaux {

using exact::Rational;

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless the parts are positive and weakly decreasing.
  explicit Partition(std::vector<unsigned> parts);

  [[nodiscard]] const std::vector<unsigned>& parts() const { return parts_; }
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  [[nodiscard]] unsigned size() const;
  [[nodiscard]] unsigned operator[](std::size_t i) const { return parts_[i]; }
  /// Column lengths (the conjugate partition).
  [[nodiscard]] Partition conjugate() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// All partitions of d (optionally with at most max_parts parts), reverse
/// lexicographic: (d), (d-1,1), ...
std::vector<Partition> partitions_of(unsigned d, std::optional<unsigned> max_parts = std::nullopt);

/// A filled Young diagram; filling is row-major.
struct Tableau {
  Partition shape;
  std::vector<unsigned> filling;

  Tableau() = default;
  /// Throws std::invalid_argument if the filling length differs from |shape|.
  Tableau(Partition shape, std::vector<unsigned> filling);
  static Tableau from_rows(const std::vector<std::vector<unsigned>>& rows);

  [[nodiscard]] unsigned at(std::size_t row, std::size_t col) const;
  [[nodiscard]] std::vector<std::vector<unsigned>> rows() const;
  [[nodiscard]] std::vector<std::vector<unsigned>> columns() const;
  /// Rows weakly increase, columns strictly increase.
  [[nodiscard]] bool is_semistandard() const;
  /// Semistandard and a bijective filling with 1..d.
  [[nodiscard]] bool is_standard() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Rows filled with 1..lambda_1, lambda_1+1..., i.e. row-consecutive.
Tableau canonical_tableau(const Partition& lambda);

/// Standard tableaux of shape lambda, lexicographic in the row-major filling.
std::vector<Tableau> standard_tableaux(const Partition& lambda);

/// Calls visit on every semistandard tableau with entries in [lo, hi],
/// lexicographic in the row-major filling.
void for_each_semistandard(const Partition& lambda, unsigned lo, unsigned hi,
                           const std::function<void(const Tableau&)>& visit);
std::vector<Tableau> semistandard_tableaux(const Partition& lambda, unsigned lo, unsigned hi);

/// f_lambda, by enumeration.
mpz_class count_standard(const Partition& lambda);
/// d_lambda(n): semistandard fillings from {1..n}. Throws for n = 0.
mpz_class count_semistandard(const Partition& lambda, unsigned n);
/// Semistandard tableaux with a_i entries equal to i (1-based). Throws on |a| != |lambda|.
mpz_class kostka(const Partition& lambda, const std::vector<unsigned>& content);
/// s_lambda(x_1, ..., x_n) summed over semistandard tableaux.
Rational schur_poly_eval(const Partition& lambda, const std::vector<Rational>& x);
/// d! / prod of hook lengths; cross-check for count_standard only.
mpz_class hook_length_count(const Partition& lambda);

}  // namespace dh::tableaux
