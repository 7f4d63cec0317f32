#pragma once

#include <map>
#include <string>
#include <vector>

#include "dh/exact/polynomial.hpp"
#include "dh/exact/rational.hpp"

namespace dh::exact {

/// Named parameter ("mu0", "t", "T", "a01", ...). Ordered by name.
using ParamMonomial = Monomial<std::string>;
/// Polynomial in named parameters with rational coefficients.
using ParamPoly = Polynomial<ParamMonomial, Rational>;

ParamPoly param(const std::string& name);
ParamPoly constant(const Rational& c);

std::string to_string(const ParamPoly& p);

/// Evaluates the named parameters in `values`; parameters not listed stay symbolic.
ParamPoly substitute(const ParamPoly& p, const std::map<std::string, Rational>& values);
/// Replaces parameter `name` by the polynomial `value`.
ParamPoly substitute(const ParamPoly& p, const std::string& name, const ParamPoly& value);
ParamPoly derivative(const ParamPoly& p, const std::string& name);
unsigned degree_in(const ParamPoly& p, const std::string& name);
/// Splits p = sum_i c_i * name^i; returns c_0, ..., c_deg.
std::vector<ParamPoly> coefficients_in(const ParamPoly& p, const std::string& name);
/// The value of a parameter-free polynomial; throws if parameters remain.
Rational as_rational(const ParamPoly& p);

/// Univariate polynomial Q in a formal variable (coefficients in ParamPoly),
/// trailing zero coefficients trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<ParamPoly> coeffs);
  static UniPoly monomial(unsigned degree, ParamPoly coeff = ParamPoly(Rational(1)));

  [[nodiscard]] const std::vector<ParamPoly>& coefficients() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] ParamPoly coefficient(unsigned i) const {
    return i < coeffs_.size() ? coeffs_[i] : ParamPoly{};
  }
  [[nodiscard]] UniPoly derivative(unsigned times = 1) const;
  /// Value of the j-th derivative at 0, i.e. j! * coefficient(j).
  [[nodiscard]] ParamPoly derivative_at_zero(unsigned j) const;
  /// Embeds as a ParamPoly in the parameter `var`.
  [[nodiscard]] ParamPoly as_param_poly(const std::string& var) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<ParamPoly> coeffs_;
};

}  // namespace dh::exact
