#include "dh/dpoly/diff_poly.hpp"

#include <string>

namespace dh::dpoly {

unsigned weight(const DiffMonomial& m) {
  unsigned w = 0;
  for (const auto& [v, e] : m.factors()) w += v.order * e;
  return w;
}

unsigned order(const DiffMonomial& m) {
  unsigned k = 0;
  for (const auto& [v, e] : m.factors()) k = std::max(k, v.order);
  return k;
}

unsigned max_var(const DiffMonomial& m) {
  unsigned i = 0;
  for (const auto& [v, e] : m.factors()) i = std::max(i, v.var);
  return i;
}

ParamDiffPoly to_param(const DiffPoly& p) {
  ParamDiffPoly::Poly out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, ParamPoly(c));
  return ParamDiffPoly(p.ambient(), std::move(out));
}

DiffPoly to_rational(const ParamDiffPoly& p) {
  DiffPoly::Poly out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, exact::as_rational(c));
  return DiffPoly(p.ambient(), std::move(out));
}

namespace {

template <class C>
ParamDiffPoly q_action_impl(const exact::UniPoly& q, const BasicDiffPoly<C>& p) {
  const unsigned n = p.ambient();
  std::vector<ParamPoly> derivs;  // Q^(j) as polynomials in T
  auto deriv = [&](unsigned j) -> const ParamPoly& {
    while (derivs.size() <= j)
      derivs.push_back(q.derivative(static_cast<unsigned>(derivs.size())).as_param_poly("T"));
    return derivs[j];
  };
  std::function<ParamDiffPoly(const VarRef&)> image = [&](const VarRef& v) {
    ParamDiffPoly out(n);
    for (unsigned i = 0; i <= v.order; ++i) {
      ParamPoly c = deriv(v.order - i).scaled(Rational(exact::binomial(v.order, i)));
      out += ParamDiffPoly::variable(v.var, i, n).scaled(c);
    }
    return out;
  };
  return substitute<C, ParamPoly>(p, n, image);
}

}  // namespace

ParamDiffPoly q_action(const exact::UniPoly& q, const ParamDiffPoly& p) { return q_action_impl(q, p); }
ParamDiffPoly q_action(const exact::UniPoly& q, const DiffPoly& p) { return q_action_impl(q, p); }

HomogeneityVerdict is_diff_homogeneous(const DiffPoly& p) {
  Gradings g = gradings(p);
  if (!g.degree) return {};
  const unsigned n = p.ambient();
  std::function<ParamDiffPoly(const VarRef&)> image = [&](const VarRef& v) {
    ParamDiffPoly out(n);
    for (unsigned i = 0; i <= v.order; ++i) {
      ParamPoly c = exact::param("mu" + std::to_string(v.order - i)).scaled(Rational(exact::binomial(v.order, i)));
      out += ParamDiffPoly::variable(v.var, i, n).scaled(c);
    }
    return out;
  };
  ParamDiffPoly lhs = substitute<Rational, ParamPoly>(p, n, image);
  ParamDiffPoly rhs = to_param(p).scaled(exact::param("mu0").pow(*g.degree));
  if (lhs != rhs) return {};
  return {true, g.degree};
}

ParamDiffPoly matrix_action(const exact::SparseMatrix<ParamPoly>& a, const ParamDiffPoly& p) {
  const unsigned n = p.ambient();
  if (a.rows() != n + 1 || a.cols() != n + 1) throw std::invalid_argument("matrix size does not match N+1");
  std::function<ParamDiffPoly(const VarRef&)> image = [&](const VarRef& v) {
    ParamDiffPoly out(n);
    for (unsigned l = 0; l <= n; ++l) {
      ParamPoly c = a.at(v.var, l);
      if (!c.is_zero()) out += ParamDiffPoly::variable(l, v.order, n).scaled(c);
    }
    return out;
  };
  return substitute<ParamPoly, ParamPoly>(p, n, image);
}

DiffPoly matrix_action(const exact::SparseMatrix<Rational>& a, const DiffPoly& p) {
  const unsigned n = p.ambient();
  if (a.rows() != n + 1 || a.cols() != n + 1) throw std::invalid_argument("matrix size does not match N+1");
  std::function<DiffPoly(const VarRef&)> image = [&](const VarRef& v) {
    DiffPoly out(n);
    for (unsigned l = 0; l <= n; ++l) {
      Rational c = a.at(v.var, l);
      if (!c.is_zero()) out += DiffPoly::variable(l, v.order, n).scaled(c);
    }
    return out;
  };
  return substitute<Rational, Rational>(p, n, image);
}

CoefficientTable coefficient_table(const std::vector<DiffPoly>& polys) {
  std::map<DiffMonomial, std::size_t, DiffMonomial::Descending> index;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) index.emplace(m, 0);
  CoefficientTable t;
  for (auto& [m, i] : index) {
    i = t.monomials.size();
    t.monomials.push_back(m);
  }
  for (const auto& p : polys) {
    exact::SparseRow row;
    for (const auto& [m, c] : p.terms()) row.emplace_back(index.at(m), c);
    // terms iterate in canonical order, matching increasing column index
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::size_t span_rank(const std::vector<DiffPoly>& polys) {
  if (!polys.empty()) {
    for (const auto& p : polys)
      if (p.ambient() != polys.front().ambient())
        throw std::invalid_argument("span_rank: polynomials with different ambient N");
  }
  auto t = coefficient_table(polys);
  return exact::rank(t.rows, t.monomials.size());
}

std::optional<exact::Vector> solve_in_span(const std::vector<DiffPoly>& basis, const DiffPoly& target) {
  std::vector<DiffPoly> all(basis);
  all.push_back(target);
  auto t = coefficient_table(all);
  // columns of the system are the basis polynomials
  exact::SparseMatrix<Rational> m(t.monomials.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [col, c] : t.rows[j]) m.set(col, j, c);
  exact::Vector b(t.monomials.size());
  for (const auto& [col, c] : t.rows.back()) b[col] = c;
  return exact::solve(m, b);
}

}  // namespace dh::dpoly
