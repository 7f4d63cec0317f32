#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dh/dpoly/diff_poly.hpp"
#include "json.hpp"

namespace dh::dpoly {

/// Syntax error in a differential-polynomial expression; `position` is the
/// 0-based character offset where parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: sums (+/-) of products (*) of rational constants `p` or `p/q`
/// and variables `x<i>[<k>]^<e>` (order and exponent optional).
/// Whitespace is ignored. Throws ParseError, including for an index > n.
DiffPoly parse(std::string_view text, unsigned n);

/// Canonical text form: terms and factors in canonical order, coefficients in
/// lowest terms. parse(to_string(p), N) == p.
std::string to_string(const DiffPoly& p);
std::string to_string(const DiffMonomial& m);
/// Diagnostic form with parenthesized parametric coefficients.
std::string to_string(const ParamDiffPoly& p);

/// {"N":..., "terms":[{"coeff":"p/q","monomial":[[i,k,e],...]},...]}
nlohmann::json to_json(const DiffPoly& p);
DiffPoly diff_poly_from_json(const nlohmann::json& j);

}  // namespace dh::dpoly
