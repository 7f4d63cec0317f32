#include "dh/pde/pde.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace dh::pde {

MultiPoly MultiPoly::constant(const Rational& c, unsigned nvars) {
  MultiPoly p(nvars);
  p.add(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(unsigned i, unsigned nvars) {
  if (i == 0 || i > nvars) throw std::out_of_range("variable index outside 1..d");
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e[i - 1] = 1;
  p.add(e, Rational(1));
  return p;
}

void MultiPoly::check(const Exponents& e) const {
  if (e.size() != nvars_) throw std::invalid_argument("exponent vector has the wrong length");
}

int MultiPoly::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (unsigned x : e) t += static_cast<int>(x);
    deg = std::max(deg, t);
  }
  return deg;
}

void MultiPoly::add(const Exponents& e, const Rational& c) {
  check(e);
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

MultiPoly MultiPoly::partial(unsigned i, unsigned times) const {
  if (i == 0 || i > nvars_) throw std::out_of_range("variable index outside 1..d");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i - 1] < times) continue;
    Exponents lowered = e;
    lowered[i - 1] -= times;
    out.add(lowered, c * Rational(mpq_class(exact::falling_factorial(e[i - 1], times))));
  }
  return out;
}

MultiPoly MultiPoly::partial(const Exponents& e) const {
  check(e);
  MultiPoly out = *this;
  for (unsigned i = 0; i < nvars_; ++i)
    if (e[i]) out = out.partial(i + 1, e[i]);
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool is_one = true;
    for (unsigned x : e) is_one = is_one && x == 0;
    Rational mag = c.sign() < 0 ? -c : c;
    out << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    first = false;
    bool need_star = false;
    if (is_one || !mag.is_one()) {
      out << mag.to_string();
      need_star = true;
    }
    for (unsigned i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      out << (need_star ? "*" : "") << "X" << i + 1;
      if (e[i] > 1) out << '^' << e[i];
      need_star = true;
    }
  }
  return out.str();
}

namespace {

void same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomials in different numbers of variables");
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  same_ring(a, b);
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add(e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + b.scaled(Rational(-1)); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  same_ring(a, b);
  MultiPoly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add(e, ca * cb);
    }
  return out;
}

namespace {

void check_ell(const MultiPoly& p, unsigned ell) {
  if (ell == 0 || ell > p.nvars()) throw std::invalid_argument("operator order must lie in 1..d");
}

}  // namespace

MultiPoly newton_operator(const MultiPoly& p, unsigned ell) {
  check_ell(p, ell);
  MultiPoly out(p.nvars());
  for (unsigned i = 1; i <= p.nvars(); ++i) out = out + p.partial(i, ell);
  return out;
}

MultiPoly elementary_operator(const MultiPoly& p, unsigned ell) {
  check_ell(p, ell);
  // ordered tuples of distinct indices, enumerated directly
  MultiPoly out(p.nvars());
  std::vector<bool> used(p.nvars(), false);
  std::function<void(const MultiPoly&, unsigned)> rec = [&](const MultiPoly& q, unsigned depth) {
    if (depth == ell) {
      out = out + q;
      return;
    }
    for (unsigned i = 0; i < p.nvars(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      rec(q.partial(i + 1), depth + 1);
      used[i] = false;
    }
  };
  rec(p, 0);
  return out;
}

std::vector<MultiPoly::Exponents> monomials_up_to(unsigned d, unsigned bound) {
  std::vector<MultiPoly::Exponents> out;
  MultiPoly::Exponents e(d, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned left) {
    if (i + 1 == d) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned x = left + 1; x-- > 0;) {
      e[i] = x;
      rec(i + 1, left - x);
    }
  };
  for (unsigned deg = 0; deg <= bound; ++deg) {
    if (d == 0) {
      if (deg == 0) out.push_back(e);
      continue;
    }
    rec(0, deg);
  }
  return out;
}

std::vector<MultiPoly> solution_space_basis(unsigned d, System system, std::optional<unsigned> bound) {
  if (d == 0) throw std::invalid_argument("solution space needs d >= 1");
  const unsigned b = bound.value_or(d * (d - 1) / 2);
  auto monos = monomials_up_to(d, b);
  std::map<MultiPoly::Exponents, std::size_t> column;
  for (std::size_t i = 0; i < monos.size(); ++i) column[monos[i]] = i;
  // rows keyed by (l, output monomial)
  std::map<std::pair<unsigned, MultiPoly::Exponents>, std::map<std::size_t, Rational>> rows;
  for (std::size_t col = 0; col < monos.size(); ++col) {
    MultiPoly m(d);
    m.add(monos[col], Rational(1));
    for (unsigned ell = 1; ell <= d; ++ell) {
      MultiPoly image = system == System::Newton ? newton_operator(m, ell) : elementary_operator(m, ell);
      for (const auto& [e, c] : image.terms()) rows[{ell, e}][col] += c;
    }
  }
  std::vector<exact::SparseRow> matrix;
  for (const auto& [key, entries] : rows) {
    exact::SparseRow r;
    for (const auto& [col, c] : entries)
      if (!c.is_zero()) r.emplace_back(col, c);
    if (!r.empty()) matrix.push_back(std::move(r));
  }
  std::vector<MultiPoly> out;
  for (const auto& v : exact::nullspace_basis(matrix, monos.size())) {
    MultiPoly p(d);
    for (std::size_t i = 0; i < v.size(); ++i) p.add(monos[i], v[i]);
    out.push_back(std::move(p));
  }
  return out;
}

std::size_t solution_space_dim(unsigned d, System system, std::optional<unsigned> bound) {
  return solution_space_basis(d, system, bound).size();
}

MultiPoly vandermonde(unsigned d) {
  MultiPoly v = MultiPoly::constant(Rational(1), d);
  for (unsigned i = 1; i <= d; ++i)
    for (unsigned j = i + 1; j <= d; ++j) v = v * (MultiPoly::variable(i, d) - MultiPoly::variable(j, d));
  return v;
}

std::vector<MultiPoly> vandermonde_derivative_basis(unsigned d) {
  if (d == 0) throw std::invalid_argument("Vandermonde derivatives need d >= 1");
  MultiPoly v = vandermonde(d);
  std::vector<MultiPoly> out;
  MultiPoly::Exponents e(d, 0);
  // each variable has degree d-1 in the Vandermonde product
  while (true) {
    MultiPoly q = v.partial(e);
    if (!q.is_zero() && std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
    std::size_t pos = d;
    while (pos > 0 && e[pos - 1] == d - 1) e[--pos] = 0;
    if (pos == 0) break;
    ++e[pos - 1];
  }
  return out;
}

std::size_t span_rank(const std::vector<MultiPoly>& polys) {
  std::map<MultiPoly::Exponents, std::size_t> column;
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms()) column.emplace(e, 0);
  std::size_t idx = 0;
  for (auto& [e, i] : column) i = idx++;
  std::vector<exact::SparseRow> rows;
  for (const auto& p : polys) {
    exact::SparseRow r;
    for (const auto& [e, c] : p.terms()) r.emplace_back(column.at(e), c);
    rows.push_back(std::move(r));
  }
  return exact::rank(rows, column.size());
}

}  // namespace dh::pde
