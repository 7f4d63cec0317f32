#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "dh/exact/linalg.hpp"
#include "dh/exact/param_poly.hpp"

using namespace dh::exact;

namespace {

SparseMatrix<Rational> mat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long v : row) r.back().emplace_back(v);
  }
  return SparseMatrix<Rational>::from_rows(r);
}

// Leibniz expansion, test-only oracle for the determinant.
ParamPoly leibniz(const std::vector<std::vector<ParamPoly>>& a) {
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  ParamPoly total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    ParamPoly term(Rational(inversions % 2 ? -1 : 1));
    for (std::size_t i = 0; i < perm.size(); ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  Rational a(6, -4);
  CHECK(a.to_string() == "-3/2");
  CHECK(a.denominator() == 2);
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1).operator/=(Rational(0)), std::domain_error);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int i = 0; i < 200; ++i) {
    long p = dist(rng), q = dist(rng);
    if (p == 0 || q == 0) continue;
    CHECK(Rational(p, q) * Rational(q, p) == Rational(1));
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(SparseMatrix<Rational>(0, 0)) == 0);
  CHECK(rank(SparseMatrix<Rational>::identity(3)) == 3);
  CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace_basis(SparseMatrix<Rational>::identity(2)).empty());
  auto k = nullspace_basis(mat({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vector{Rational(-1), Rational(1)});  // echelon form of span{(1,-1)}
  CHECK(nullspace_basis(SparseMatrix<Rational>(1, 3)).size() == 3);
}

TEST_CASE("rank plus nullity equals column count, kernel vectors are annihilated") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> val(-3, 3);
  std::uniform_int_distribution<int> dim(0, 7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    SparseMatrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (rng() % 3 == 0) m.set(i, j, Rational(val(rng)));
    auto ker = nullspace_basis(m);
    CHECK(rank(m) + ker.size() == c);
    for (const auto& v : ker)
      for (const auto& y : m.multiply(v)) CHECK(y.is_zero());
  }
}

TEST_CASE("results do not depend on row order") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> val(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<Rational>> rows(6, std::vector<Rational>(5));
    for (auto& row : rows)
      for (auto& x : row) x = Rational(val(rng));
    auto base = nullspace_basis(SparseMatrix<Rational>::from_rows(rows));
    std::shuffle(rows.begin(), rows.end(), rng);
    auto shuffled = nullspace_basis(SparseMatrix<Rational>::from_rows(rows));
    CHECK(base == shuffled);
  }
}

TEST_CASE("solve returns a solution or reports inconsistency") {
  auto m = mat({{1, 1}, {1, -1}});
  auto x = solve(m, {Rational(3), Rational(1)});
  REQUIRE(x);
  CHECK((*x)[0] == Rational(2));
  CHECK((*x)[1] == Rational(1));
  CHECK_FALSE(solve(mat({{1, 1}, {2, 2}}), {Rational(1), Rational(3)}));
}

TEST_CASE("determinant examples") {
  SparseMatrix<ParamPoly> one(1, 1);
  one.set(0, 0, param("mu0"));
  CHECK(det(one) == param("mu0"));

  auto t = param("t");
  auto m = SparseMatrix<ParamPoly>::from_rows({{ParamPoly(Rational(1)), t}, {t, ParamPoly(Rational(1))}});
  CHECK(det(m) == ParamPoly(Rational(1)) - t * t);

  std::vector<std::vector<ParamPoly>> ones(3, std::vector<ParamPoly>(3, ParamPoly(Rational(1))));
  CHECK(det(SparseMatrix<ParamPoly>::from_rows(ones)).is_zero());
  CHECK_THROWS_AS(det(SparseMatrix<ParamPoly>(2, 3)), std::invalid_argument);
}

TEST_CASE("Bareiss agrees with the Leibniz expansion on symbolic matrices") {
  std::mt19937_64 rng(5);
  std::vector<std::string> names = {"a", "b", "c"};
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 1 + trial % 4;
    std::vector<std::vector<ParamPoly>> a(n, std::vector<ParamPoly>(n));
    for (auto& row : a)
      for (auto& x : row) {
        long c = static_cast<long>(rng() % 5) - 2;
        x = ParamPoly(Rational(c));
        if (rng() % 2) x += param(names[rng() % 3]);
        if (rng() % 4 == 0) x = ParamPoly{};
      }
    CHECK(det_bareiss(a) == leibniz(a));
  }
  // two equal rows
  std::vector<std::vector<ParamPoly>> a = {{param("a"), param("b"), ParamPoly(Rational(1))},
                                           {param("c"), ParamPoly(Rational(2)), param("a")},
                                           {param("a"), param("b"), ParamPoly(Rational(1))}};
  CHECK(det_bareiss(a).is_zero());
}

TEST_CASE("parametric polynomial helpers") {
  auto mu = param("mu");
  auto p = (mu + ParamPoly(Rational(2))).pow(3);
  CHECK(as_rational(substitute(p, {{"mu", Rational(1)}})) == Rational(27));
  auto cs = coefficients_in(p, "mu");
  REQUIRE(cs.size() == 4);
  CHECK(as_rational(cs[0]) == Rational(8));
  CHECK(as_rational(cs[1]) == Rational(12));
  CHECK(derivative(p, "mu") == (mu + ParamPoly(Rational(2))).pow(2).scaled(Rational(3)));
  CHECK(divide_exact(p, mu + ParamPoly(Rational(2))) == (mu + ParamPoly(Rational(2))).pow(2));
  CHECK_THROWS(divide_exact(p, mu));

  UniPoly q({ParamPoly(Rational(1)), ParamPoly(Rational(3)), ParamPoly(Rational(5))});
  CHECK(q.derivative_at_zero(2) == ParamPoly(Rational(10)));
  CHECK(q.derivative().degree() == 1);
  CHECK(UniPoly({ParamPoly(Rational(1)), ParamPoly{}}).degree() == 0);
}
