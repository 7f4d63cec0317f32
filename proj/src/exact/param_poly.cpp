#include "dh/exact/param_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace dh::exact {

ParamPoly param(const std::string& name) { return ParamPoly(ParamMonomial(name), Rational(1)); }

ParamPoly constant(const Rational& c) { return ParamPoly(c); }

std::string to_string(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (!mag.is_one() || m.is_one()) {
      os << mag;
      wrote = true;
    }
    for (const auto& [v, e] : m.factors()) {
      if (wrote) os << '*';
      os << v;
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

ParamPoly substitute(const ParamPoly& p, const std::map<std::string, Rational>& values) {
  ParamPoly r;
  for (const auto& [m, c] : p.terms()) {
    Rational coeff = c;
    std::vector<ParamMonomial::Factor> rest;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end())
        rest.emplace_back(v, e);
      else
        coeff *= it->second.pow(e);
    }
    r.add_term(ParamMonomial(std::move(rest)), coeff);
  }
  return r;
}

ParamPoly substitute(const ParamPoly& p, const std::string& name, const ParamPoly& value) {
  ParamPoly r;
  std::map<unsigned, ParamPoly> powers;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = 0;
    std::vector<ParamMonomial::Factor> rest;
    for (const auto& [v, ve] : m.factors()) {
      if (v == name)
        e = ve;
      else
        rest.emplace_back(v, ve);
    }
    ParamPoly term(ParamMonomial(std::move(rest)), c);
    if (e == 0) {
      r += term;
      continue;
    }
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
    r += term * it->second;
  }
  return r;
}

ParamPoly derivative(const ParamPoly& p, const std::string& name) {
  ParamPoly r;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m.exponent(name);
    if (e == 0) continue;
    std::vector<ParamMonomial::Factor> f;
    for (const auto& [v, ve] : m.factors()) f.emplace_back(v, v == name ? ve - 1 : ve);
    r.add_term(ParamMonomial(std::move(f)), c * Rational(static_cast<long>(e)));
  }
  return r;
}

unsigned degree_in(const ParamPoly& p, const std::string& name) {
  unsigned d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m.exponent(name));
  return d;
}

std::vector<ParamPoly> coefficients_in(const ParamPoly& p, const std::string& name) {
  std::vector<ParamPoly> out(degree_in(p, name) + 1);
  for (const auto& [m, c] : p.terms()) {
    std::vector<ParamMonomial::Factor> rest;
    unsigned e = 0;
    for (const auto& [v, ve] : m.factors()) {
      if (v == name)
        e = ve;
      else
        rest.emplace_back(v, ve);
    }
    out[e].add_term(ParamMonomial(std::move(rest)), c);
  }
  return out;
}

Rational as_rational(const ParamPoly& p) {
  if (!p.is_constant()) throw std::invalid_argument("parametric coefficient where a rational was required: " + to_string(p));
  return p.constant_term();
}

UniPoly::UniPoly(std::vector<ParamPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(unsigned degree, ParamPoly coeff) {
  std::vector<ParamPoly> c(degree + 1);
  c[degree] = std::move(coeff);
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::derivative(unsigned times) const {
  if (times == 0) return *this;
  if (coeffs_.size() <= times) return {};
  std::vector<ParamPoly> c(coeffs_.size() - times);
  for (std::size_t i = times; i < coeffs_.size(); ++i)
    c[i - times] = coeffs_[i].scaled(Rational(falling_factorial(static_cast<unsigned>(i), times)));
  return UniPoly(std::move(c));
}

ParamPoly UniPoly::derivative_at_zero(unsigned j) const {
  return coefficient(j).scaled(Rational(factorial(j)));
}

ParamPoly UniPoly::as_param_poly(const std::string& var) const {
  ParamPoly r;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r += coeffs_[i].times_monomial(ParamMonomial(var, static_cast<unsigned>(i)));
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<ParamPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(static_cast<unsigned>(i)) + b.coefficient(static_cast<unsigned>(i));
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ParamPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

}  // namespace dh::exact
