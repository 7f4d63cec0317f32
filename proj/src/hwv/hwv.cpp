#include "dh/hwv/hwv.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "dh/exact/param_poly.hpp"

namespace dh::hwv {

using dpoly::DiffMonomial;
using dpoly::ParamDiffPoly;
using dpoly::VarRef;
using exact::ParamPoly;
using exact::SparseRow;

Tensor Tensor::basis(const Index& index, unsigned k) {
  Tensor t(static_cast<unsigned>(index.size()), k);
  t.add(index, Rational(1));
  return t;
}

void Tensor::check(const Index& index) const {
  if (index.size() != d_) throw std::invalid_argument("tensor index has the wrong number of factors");
  for (unsigned i : index)
    if (i > k_) throw std::out_of_range("tensor index exceeds k");
}

Rational Tensor::coefficient(const Index& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Tensor::add(const Index& index, const Rational& c) {
  check(index);
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(index, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Tensor Tensor::scaled(const Rational& c) const {
  Tensor out(d_, k_);
  if (c.is_zero()) return out;
  for (const auto& [i, v] : terms_) out.terms_.emplace(i, v * c);
  return out;
}

namespace {

void same_space(const Tensor& a, const Tensor& b) {
  if (a.factors() != b.factors() || a.local_max() != b.local_max())
    throw std::invalid_argument("tensors live in different spaces");
}

}  // namespace

Tensor operator+(const Tensor& a, const Tensor& b) {
  same_space(a, b);
  Tensor out = a;
  for (const auto& [i, c] : b.terms_) out.add(i, c);
  return out;
}

Tensor operator-(const Tensor& a, const Tensor& b) { return a + b.scaled(Rational(-1)); }

std::size_t Tensor::position(const Index& index) const {
  check(index);
  std::size_t p = 0;
  for (unsigned i : index) p = p * (k_ + 1) + i;
  return p;
}

std::size_t Tensor::dimension() const {
  std::size_t n = 1;
  for (unsigned f = 0; f < d_; ++f) n *= k_ + 1;
  return n;
}

SparseRow Tensor::to_row() const {
  SparseRow row;
  for (const auto& [i, c] : terms_) row.emplace_back(position(i), c);
  return row;  // map order is lexicographic, which is position order
}

std::vector<Tensor::Index> basis_indices(unsigned d, unsigned k) {
  std::vector<Tensor::Index> out;
  Tensor::Index idx(d, 0);
  while (true) {
    out.push_back(idx);
    std::size_t pos = d;
    while (pos > 0 && idx[pos - 1] == k) idx[--pos] = 0;
    if (pos == 0) break;
    ++idx[pos - 1];
  }
  return out;
}

DiffPoly column_det(const std::vector<unsigned>& seq, unsigned n) {
  if (seq.size() > n + 1) throw std::invalid_argument("column longer than N+1");
  std::vector<std::vector<DiffPoly>> m(seq.size(), std::vector<DiffPoly>(seq.size()));
  for (unsigned a = 0; a < seq.size(); ++a)
    for (unsigned b = 0; b < seq.size(); ++b) m[a][b] = DiffPoly::variable(b, seq[a], n);
  return exact::det_bareiss(std::move(m)).with_ambient(n);
}

DiffPoly d_t(const Tableau& t, unsigned n) {
  if (t.shape.length() > n + 1) throw std::invalid_argument("tableau has more than N+1 rows");
  DiffPoly out = DiffPoly::constant(Rational(1), n);
  for (const auto& col : t.columns()) out *= column_det(col, n);
  return out;
}

std::vector<std::pair<Tableau, DiffPoly>> hwv_basis(const Partition& lambda, unsigned k, unsigned n) {
  std::vector<std::pair<Tableau, DiffPoly>> out;
  if (lambda.length() > n + 1) return out;
  tableaux::for_each_semistandard(lambda, 0, k, [&](const Tableau& t) { out.emplace_back(t, d_t(t, n)); });
  return out;
}

Tensor tensor_of_tableau(const Tableau& t, unsigned k) { return Tensor::basis(t.filling, k); }

Tensor tensor_sigma_action(const Tensor& t, const Permutation& sigma) {
  if (sigma.degree() != t.factors()) throw std::invalid_argument("permutation degree differs from tensor factors");
  Tensor out(t.factors(), t.local_max());
  for (const auto& [idx, c] : t.terms()) {
    Tensor::Index moved(idx.size());
    for (unsigned i = 0; i < idx.size(); ++i) moved[i] = idx[sigma(i)];
    out.add(moved, c);
  }
  return out;
}

Tensor tensor_group_action(const Tensor& t, const GroupAlgebraElem& g) {
  if (g.degree() != t.factors()) throw std::invalid_argument("group algebra degree differs from tensor factors");
  Tensor out(t.factors(), t.local_max());
  for (const auto& [sigma, c] : g.terms()) out = out + tensor_sigma_action(t, sigma).scaled(c);
  return out;
}

GroupAlgebraElem c_lambda(const Partition& lambda) {
  return tableaux::young_symmetrizer(tableaux::canonical_tableau(lambda));
}

Tensor symmetrizer_projection(const Tensor& t, const Partition& lambda) {
  if (lambda.size() != t.factors()) throw std::invalid_argument("partition size differs from tensor factors");
  return tensor_group_action(t, c_lambda(lambda));
}

Tensor j_local(const Tensor& t, unsigned position) {
  if (position >= t.factors()) throw std::out_of_range("tensor position out of range");
  Tensor out(t.factors(), t.local_max());
  for (const auto& [idx, c] : t.terms()) {
    if (idx[position] == 0) continue;
    Tensor::Index lowered = idx;
    --lowered[position];
    out.add(lowered, c * Rational(static_cast<long>(idx[position])));
  }
  return out;
}

namespace {

// sum over l-subsets S of J applied in the factors of S
Tensor subset_sum(const Tensor& t, unsigned ell) {
  const unsigned d = t.factors();
  Tensor out(d, t.local_max());
  std::vector<unsigned> pick;
  std::function<void(unsigned)> rec = [&](unsigned start) {
    if (pick.size() == ell) {
      Tensor v = t;
      for (unsigned p : pick) v = j_local(v, p);
      out = out + v;
      return;
    }
    for (unsigned p = start; p + (ell - pick.size()) <= d; ++p) {
      pick.push_back(p);
      rec(p + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

Tensor j_ell(const Tensor& t, unsigned ell) {
  if (ell == 0 || ell > t.factors()) throw std::invalid_argument("J^(l) needs 1 <= l <= d");
  return subset_sum(t, ell).scaled(Rational(mpq_class(exact::factorial(ell))));
}

std::vector<Tensor> alpha_shift(const Tensor& t) {
  const unsigned d = t.factors();
  std::vector<Tensor> out(d + 1, Tensor(d, t.local_max()));
  out[d] = t;
  for (unsigned s = 1; s <= d; ++s) out[d - s] = subset_sum(t, s);
  return out;
}

namespace {

std::vector<SparseRow> stacked_j(unsigned d, unsigned k) {
  // rows indexed by (l, output position); columns by input position
  std::map<std::pair<unsigned, std::size_t>, std::map<std::size_t, Rational>> rows;
  Tensor shape(d, k);
  for (const auto& idx : basis_indices(d, k)) {
    std::size_t col = shape.position(idx);
    Tensor e = Tensor::basis(idx, k);
    for (unsigned ell = 1; ell <= d; ++ell) {
      Tensor image = j_ell(e, ell);
      for (const auto& [out, c] : image.terms()) rows[{ell, shape.position(out)}][col] += c;
    }
  }
  std::vector<SparseRow> out;
  for (const auto& [key, entries] : rows) {
    SparseRow r;
    for (const auto& [col, c] : entries)
      if (!c.is_zero()) r.emplace_back(col, c);
    if (!r.empty()) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<exact::Vector> kernel_basis(unsigned d, unsigned k) {
  if (d == 0) return {exact::Vector{Rational(1)}};
  return exact::nullspace_basis(stacked_j(d, k), Tensor(d, k).dimension());
}

std::size_t kernel_dim_full(unsigned d, unsigned k) { return kernel_basis(d, k).size(); }

std::size_t kernel_dim_isotypic(const Partition& lambda, unsigned k) {
  const unsigned d = lambda.size();
  const std::size_t dim = Tensor(d, k).dimension();
  std::vector<SparseRow> kernel;
  for (const auto& v : kernel_basis(d, k)) {
    SparseRow r;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) r.emplace_back(i, v[i]);
    kernel.push_back(std::move(r));
  }
  auto c = c_lambda(lambda);
  std::vector<SparseRow> image;
  for (const auto& idx : basis_indices(d, k)) {
    Tensor t = tensor_group_action(Tensor::basis(idx, k), c);
    if (!t.is_zero()) image.push_back(t.to_row());
  }
  return exact::intersection_dim(kernel, image, dim);
}

namespace {

std::optional<exact::Vector> coordinates(const std::vector<std::pair<Tableau, DiffPoly>>& basis, const DiffPoly& p) {
  std::vector<DiffPoly> polys;
  for (const auto& [t, q] : basis) polys.push_back(q);
  return dpoly::solve_in_span(polys, p);
}

}  // namespace

std::vector<std::pair<Rational, Tableau>> straighten(const Tableau& t, unsigned k, unsigned n) {
  for (unsigned v : t.filling)
    if (v > k) throw std::invalid_argument("tableau entry exceeds k");
  auto basis = hwv_basis(t.shape, k, n);
  if (basis.empty()) throw std::invalid_argument("tableau has more than N+1 rows");
  auto x = coordinates(basis, d_t(t, n));
  if (!x) throw std::logic_error("D_T is not in the span of the semistandard D_S");
  std::vector<std::pair<Rational, Tableau>> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!(*x)[i].is_zero()) out.emplace_back((*x)[i], basis[i].first);
  return out;
}

Tensor e_iso(const DiffPoly& p, const Partition& lambda, unsigned k) {
  const unsigned n = p.ambient();
  if (lambda.length() > n + 1) throw std::invalid_argument("partition has more than N+1 parts");
  auto basis = hwv_basis(lambda, k, n);
  auto x = coordinates(basis, p);
  if (!x) throw std::invalid_argument("polynomial is not in the span of the D_T");
  auto c = c_lambda(lambda);
  Tensor out(lambda.size(), k);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!(*x)[i].is_zero()) out = out + tensor_group_action(tensor_of_tableau(basis[i].first, k), c).scaled((*x)[i]);
  return out;
}

std::size_t iso_solution_dim(const Partition& lambda, unsigned k, unsigned n) {
  const unsigned d = lambda.size();
  auto basis = hwv_basis(lambda, k, n);
  const std::string alpha = "alpha";
  const ParamPoly a = exact::param(alpha);
  // rows keyed by (monomial, power of alpha below d)
  std::map<std::pair<DiffMonomial, unsigned>, SparseRow, std::function<bool(const std::pair<DiffMonomial, unsigned>&,
                                                                             const std::pair<DiffMonomial, unsigned>&)>>
      rows([](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second < y.second;
        return DiffMonomial::Descending{}(x.first, y.first);
      });
  for (std::size_t col = 0; col < basis.size(); ++col) {
    ParamDiffPoly shifted = dpoly::substitute<Rational, ParamPoly>(basis[col].second, n, [&](const VarRef& v) {
      ParamDiffPoly img = ParamDiffPoly::variable(v.var, v.order, n).scaled(a);
      if (v.order > 0)
        img += ParamDiffPoly::variable(v.var, v.order - 1, n).scaled(ParamPoly(Rational(static_cast<long>(v.order))));
      return img;
    });
    for (const auto& [m, c] : shifted.terms()) {
      auto powers = exact::coefficients_in(c, alpha);
      for (unsigned e = 0; e < powers.size() && e < d; ++e)
        if (!powers[e].is_zero()) rows[{m, e}].emplace_back(col, exact::as_rational(powers[e]));
    }
  }
  std::vector<SparseRow> matrix;
  for (auto& [key, r] : rows) matrix.push_back(std::move(r));
  return basis.size() - exact::rank(matrix, basis.size());
}

}  // namespace dh::hwv
