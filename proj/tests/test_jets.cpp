#include <functional>
#include <map>

#include "doctest.h"
#include "dh/exact/param_poly.hpp"
#include "dh/jets/jets.hpp"

using namespace dh::jets;
using dh::dpoly::DiffMonomial;
using dh::dpoly::DiffPoly;
using dh::dpoly::ParamDiffPoly;
using dh::dpoly::VarRef;
using dh::exact::ParamPoly;
using dh::exact::Rational;

namespace {

// Independent census: solve for differentially homogeneous polynomials among
// all monomials of degree d, order <= k and weight w, using the linear
// condition P(sum_i binom(k,i) mu_{k-i} X^(i)) = mu_0^d P.
std::map<unsigned, std::size_t> brute_census(unsigned n, unsigned d, unsigned k) {
  std::vector<VarRef> vars;
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned o = 0; o <= k; ++o) vars.push_back({i, o});
  std::map<unsigned, std::vector<DiffPoly>> by_weight;
  std::vector<unsigned> exps(vars.size(), 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == vars.size()) {
      exps[i] = left;
      DiffPoly m = DiffPoly::constant(Rational(1), n);
      for (std::size_t j = 0; j < vars.size(); ++j) m *= DiffPoly::variable(vars[j].var, vars[j].order, n).pow(exps[j]);
      by_weight[dh::dpoly::weight(m.terms().begin()->first)].push_back(m);
      return;
    }
    for (unsigned x = 0; x <= left; ++x) {
      exps[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, d);
  ParamPoly mu0d = dh::exact::param("mu0").pow(d);
  std::map<unsigned, std::size_t> out;
  for (const auto& [w, monos] : by_weight) {
    std::map<std::pair<DiffMonomial, std::string>, std::map<std::size_t, Rational>,
             std::function<bool(const std::pair<DiffMonomial, std::string>&, const std::pair<DiffMonomial, std::string>&)>>
        rows([](const auto& a, const auto& b) {
          if (a.second != b.second) return a.second < b.second;
          return DiffMonomial::Descending{}(a.first, b.first);
        });
    for (std::size_t col = 0; col < monos.size(); ++col) {
      ParamDiffPoly image = dh::dpoly::substitute<Rational, ParamPoly>(monos[col], n, [&](const VarRef& v) {
        ParamDiffPoly s(n);
        for (unsigned i = 0; i <= v.order; ++i)
          s += ParamDiffPoly::variable(v.var, i, n)
                   .scaled(dh::exact::param("mu" + std::to_string(v.order - i)).scaled(Rational(mpq_class(dh::exact::binomial(v.order, i)))));
        return s;
      });
      image -= dh::dpoly::to_param(monos[col]).scaled(mu0d);
      for (const auto& [m, c] : image.terms())
        for (const auto& [pm, pc] : c.terms()) rows[{m, dh::exact::to_string(ParamPoly(pm, Rational(1)))}][col] += pc;
    }
    std::vector<dh::exact::SparseRow> matrix;
    for (const auto& [key, r] : rows) {
      dh::exact::SparseRow row;
      for (const auto& [c, v] : r)
        if (!v.is_zero()) row.emplace_back(c, v);
      if (!row.empty()) matrix.push_back(row);
    }
    std::size_t dim = monos.size() - dh::exact::rank(matrix, monos.size());
    if (dim) out[w] = dim;
  }
  return out;
}

std::map<unsigned, std::size_t> as_map(const std::vector<CensusEntry>& entries) {
  std::map<unsigned, std::size_t> out;
  for (const auto& e : entries) out[e.n] = e.count;
  return out;
}

std::size_t total(const std::vector<CensusEntry>& entries) {
  std::size_t t = 0;
  for (const auto& e : entries) t += e.count;
  return t;
}

}  // namespace

TEST_CASE("classification examples") {
  auto cls = classify_basis(1, 2);
  REQUIRE(cls.size() == 4);
  // m = (1,1), alpha = (0,0)
  CHECK(cls[1].datum.m == std::vector<unsigned>{1, 1});
  CHECK(cls[1].weight == 1u);
  CHECK(cls[1].order == 1);
  CHECK(cls[1].order_exact());
  // m = (2,0), alpha = (0,1): W = X_0^2, order 0 below the formula value 1
  CHECK(cls[3].datum.m == std::vector<unsigned>{2, 0});
  CHECK(cls[3].weight == 0u);
  CHECK(cls[3].order == 0);
  CHECK(cls[3].order_bound == 1);
  CHECK_FALSE(cls[3].order_exact());
  CHECK_THROWS_AS(classify_basis(1, 0), std::invalid_argument);
}

TEST_CASE("weight formula holds and order stays within the bound") {
  for (auto [n, maxd] : std::vector<std::pair<unsigned, unsigned>>{{0, 5}, {1, 4}, {2, 3}})
    for (unsigned d = 1; d <= maxd; ++d)
      for (const auto& c : classify_basis(n, d)) {
        CHECK(c.weight_matches());
        CHECK(c.order_within_bound());
        CHECK(c.order_bound <= d - 1);
      }
}

TEST_CASE("census examples") {
  auto c = census(1, 2, 1);
  CHECK(c == std::vector<CensusEntry>{{1, 0, 3}, {1, 1, 1}});
  for (unsigned k = 2; k <= 4; ++k) CHECK(as_map(census(1, 2, k)) == as_map(c));
  CHECK(census(3, 0, 2) == std::vector<CensusEntry>{{2, 0, 1}});
  CHECK(census(1, 1, 0) == std::vector<CensusEntry>{{0, 0, 2}});
}

TEST_CASE("census totals, order zero, monotonicity, vanishing") {
  for (auto [n, maxd] : std::vector<std::pair<unsigned, unsigned>>{{1, 4}, {2, 3}})
    for (unsigned d = 1; d <= maxd; ++d) {
      auto basis = dh::wronskian::enumerate_canonical_basis(n, d);
      std::size_t expected = 1;
      for (unsigned i = 0; i < d; ++i) expected *= n + 1;
      CHECK(total(census(basis, d, d - 1)) == expected);
      auto zero = census(basis, d, 0);
      REQUIRE(zero.size() == 1);
      CHECK(zero[0].n == 0);
      CHECK(zero[0].count == dh::exact::binomial(n + d, d));
      std::size_t prev = 0;
      for (unsigned k = 0; k <= d + 1; ++k) {
        auto entries = census(basis, d, k);
        CHECK(total(entries) >= prev);
        prev = total(entries);
        CHECK(as_map(entries) == as_map(census_by_nullity(basis, k)));
        for (const auto& e : entries) CHECK(e.n <= vanishing_bound(n, d));
      }
    }
  CHECK(vanishing_bound(1, 3) == 2);
}

TEST_CASE("census agrees with a direct solve over all monomials") {
  for (auto [n, d, k] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{
           {1, 2, 0}, {1, 2, 1}, {1, 3, 0}, {1, 3, 1}, {1, 3, 2}, {2, 2, 1}, {2, 3, 1}, {1, 4, 1}})
    CHECK(as_map(census(n, d, k)) == brute_census(n, d, k));
}

TEST_CASE("verify_theorem2") {
  auto r = verify_theorem2(1, 2);
  CHECK(r.passed());
  REQUIRE(r.items.size() == 3);
  CHECK(r.items[1].witness["total"] == 4);
  CHECK(verify_theorem2(2, 2).items[1].witness["total"] == 9);
  auto r3 = verify_theorem2(1, 3);
  CHECK(r3.passed());
  CHECK(r3.items[1].witness["total"] == 8);
  CHECK(r3.items[2].witness["bound"] == 2);
  CHECK(verify_theorem2(2, 0).passed());
  auto j = r3.to_json();
  CHECK(j["passed"] == true);
  CHECK(j["items"].size() == 3);
}

TEST_CASE("census output formats") {
  auto c = census(1, 2, 1);
  CHECK(census_csv(1, 2, c) == "N,d,k,n,count\n1,2,1,0,3\n1,2,1,1,1\n");
  CHECK(census_csv(1, 2, c, false) == "1,2,1,0,3\n1,2,1,1,1\n");
  auto j = census_json(1, 2, c);
  CHECK(j["entries"][1]["count"] == 1);
}
