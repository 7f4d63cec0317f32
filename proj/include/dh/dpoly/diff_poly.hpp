#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dh/exact/linalg.hpp"
#include "dh/exact/param_poly.hpp"
#include "dh/exact/polynomial.hpp"
#include "dh/exact/rational.hpp"

namespace dh::dpoly {

using exact::ParamPoly;
using exact::Rational;

/// The formal variable X_var^(order).
struct VarRef {
  unsigned var = 0;
  unsigned order = 0;

  friend bool operator==(const VarRef&, const VarRef&) = default;
  /// Precedence in the canonical order X_0^(high) > ... > X_0^(0) > X_1^(high) > ...
  friend bool operator<(const VarRef& a, const VarRef& b) {
    if (a.var != b.var) return a.var < b.var;
    return a.order > b.order;
  }
};

using DiffMonomial = exact::Monomial<VarRef>;

unsigned weight(const DiffMonomial& m);
/// Highest derivative order present; 0 for the empty monomial.
unsigned order(const DiffMonomial& m);
/// Largest variable index present; 0 for the empty monomial.
unsigned max_var(const DiffMonomial& m);

/// Differential polynomial over the coefficient ring C in the variables
/// X_0..X_N and their formal derivatives.
template <class C>
class BasicDiffPoly {
 public:
  using Poly = exact::Polynomial<DiffMonomial, C>;

  BasicDiffPoly() = default;
  explicit BasicDiffPoly(unsigned n) : n_(n) {}
  BasicDiffPoly(unsigned n, Poly p) : n_(n), poly_(std::move(p)) { check_vars(); }

  static BasicDiffPoly variable(unsigned i, unsigned k, unsigned n) {
    return BasicDiffPoly(n, Poly(DiffMonomial(VarRef{i, k}), C(1)));
  }
  static BasicDiffPoly constant(const C& c, unsigned n) { return BasicDiffPoly(n, Poly(c)); }

  [[nodiscard]] unsigned ambient() const { return n_; }
  [[nodiscard]] const Poly& poly() const { return poly_; }
  [[nodiscard]] const typename Poly::Terms& terms() const { return poly_.terms(); }
  [[nodiscard]] bool is_zero() const { return poly_.is_zero(); }
  [[nodiscard]] std::size_t size() const { return poly_.size(); }
  [[nodiscard]] C coefficient(const DiffMonomial& m) const { return poly_.coefficient(m); }

  /// Same polynomial, viewed in a larger ambient space.
  [[nodiscard]] BasicDiffPoly with_ambient(unsigned n) const {
    return BasicDiffPoly(n, poly_);
  }

  BasicDiffPoly& operator+=(const BasicDiffPoly& o) {
    n_ = std::max(n_, o.n_);
    poly_ += o.poly_;
    return *this;
  }
  BasicDiffPoly& operator-=(const BasicDiffPoly& o) {
    n_ = std::max(n_, o.n_);
    poly_ -= o.poly_;
    return *this;
  }
  friend BasicDiffPoly operator+(BasicDiffPoly a, const BasicDiffPoly& b) { return a += b; }
  friend BasicDiffPoly operator-(BasicDiffPoly a, const BasicDiffPoly& b) { return a -= b; }
  friend BasicDiffPoly operator-(const BasicDiffPoly& a) { return BasicDiffPoly(a.n_, -a.poly_); }
  friend BasicDiffPoly operator*(const BasicDiffPoly& a, const BasicDiffPoly& b) {
    return BasicDiffPoly(std::max(a.n_, b.n_), a.poly_ * b.poly_);
  }
  BasicDiffPoly& operator*=(const BasicDiffPoly& o) { return *this = *this * o; }
  [[nodiscard]] BasicDiffPoly scaled(const C& c) const { return BasicDiffPoly(n_, poly_.scaled(c)); }
  [[nodiscard]] BasicDiffPoly pow(unsigned e) const { return BasicDiffPoly(n_, poly_.pow(e)); }

  friend BasicDiffPoly divide_exact(const BasicDiffPoly& a, const BasicDiffPoly& b) {
    return BasicDiffPoly(std::max(a.n_, b.n_), divide_exact(a.poly_, b.poly_));
  }
  friend bool coeff_is_zero(const BasicDiffPoly& p) { return p.is_zero(); }

  /// Equality is term-map equality; the ambient N does not take part.
  friend bool operator==(const BasicDiffPoly& a, const BasicDiffPoly& b) { return a.poly_ == b.poly_; }
  friend bool operator!=(const BasicDiffPoly& a, const BasicDiffPoly& b) { return !(a == b); }

 private:
  void check_vars() const {
    for (const auto& [m, c] : poly_.terms())
      if (max_var(m) > n_) throw std::out_of_range("variable index exceeds ambient N");
  }

  unsigned n_ = 0;
  Poly poly_;
};

}  // namespace dh::dpoly

template <class C>
struct dh::exact::RingOne<dh::dpoly::BasicDiffPoly<C>> {
  static dh::dpoly::BasicDiffPoly<C> get() { return dh::dpoly::BasicDiffPoly<C>::constant(C(1), 0); }
};

namespace dh::dpoly {

using DiffPoly = BasicDiffPoly<Rational>;
using ParamDiffPoly = BasicDiffPoly<ParamPoly>;

ParamDiffPoly to_param(const DiffPoly& p);
/// Throws std::invalid_argument if a coefficient still involves parameters.
DiffPoly to_rational(const ParamDiffPoly& p);

struct Gradings {
  std::optional<unsigned> degree;  // nullopt: inhomogeneous
  std::optional<unsigned> weight;  // nullopt: non-isobaric
  unsigned order = 0;
  friend bool operator==(const Gradings&, const Gradings&) = default;
};

/// Throws std::invalid_argument for the zero polynomial.
template <class C>
Gradings gradings(const BasicDiffPoly<C>& p) {
  if (p.is_zero()) throw std::invalid_argument("gradings of the zero polynomial");
  Gradings g;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    unsigned d = m.degree(), w = weight(m);
    if (first) {
      g.degree = d;
      g.weight = w;
      first = false;
    } else {
      if (g.degree && *g.degree != d) g.degree.reset();
      if (g.weight && *g.weight != w) g.weight.reset();
    }
    g.order = std::max(g.order, order(m));
  }
  return g;
}

/// Replaces every variable X_i^(k) by image(i, k) and expands.
template <class CIn, class COut>
BasicDiffPoly<COut> substitute(const BasicDiffPoly<CIn>& p, unsigned out_ambient,
                               const std::function<BasicDiffPoly<COut>(const VarRef&)>& image) {
  std::map<VarRef, std::vector<BasicDiffPoly<COut>>> powers;
  auto power = [&](const VarRef& v, unsigned e) -> const BasicDiffPoly<COut>& {
    auto& list = powers[v];
    if (list.empty()) {
      list.push_back(BasicDiffPoly<COut>::constant(COut(1), out_ambient));
      list.push_back(image(v));
    }
    while (list.size() <= e) list.push_back(list.back() * list[1]);
    return list[e];
  };
  BasicDiffPoly<COut> out(out_ambient);
  for (const auto& [m, c] : p.terms()) {
    BasicDiffPoly<COut> term = BasicDiffPoly<COut>::constant(COut(c), out_ambient);
    for (const auto& [v, e] : m.factors()) term *= power(v, e);
    out += term;
  }
  return out;
}

/// Q . P: substitutes X^(k) -> sum_i binom(k, i) Q^(k-i) X^(i), with Q a
/// polynomial in the formal parameter `T`.
ParamDiffPoly q_action(const exact::UniPoly& q, const ParamDiffPoly& p);
ParamDiffPoly q_action(const exact::UniPoly& q, const DiffPoly& p);

struct HomogeneityVerdict {
  bool homogeneous = false;
  std::optional<unsigned> degree;
};

/// Decides Q.P = Q^d P for all Q via the symbolic substitution
/// X^(k) -> sum_i binom(k, i) mu_(k-i) X^(i) against mu_0^d P.
HomogeneityVerdict is_diff_homogeneous(const DiffPoly& p);

/// The left action A.P = P((AX)^(0), (AX)^(1), ...), i.e.
/// X_j^(k) -> sum_l A(j, l) X_l^(k).
ParamDiffPoly matrix_action(const exact::SparseMatrix<ParamPoly>& a, const ParamDiffPoly& p);
DiffPoly matrix_action(const exact::SparseMatrix<Rational>& a, const DiffPoly& p);

/// Coefficient rows of `polys` over a shared column index of their monomials
/// (columns in canonical monomial order).
struct CoefficientTable {
  std::vector<DiffMonomial> monomials;
  std::vector<exact::SparseRow> rows;
};
CoefficientTable coefficient_table(const std::vector<DiffPoly>& polys);

std::size_t span_rank(const std::vector<DiffPoly>& polys);

/// Coefficients c with sum_i c_i basis_i == target, or nullopt.
std::optional<exact::Vector> solve_in_span(const std::vector<DiffPoly>& basis, const DiffPoly& target);

}  // namespace dh::dpoly
