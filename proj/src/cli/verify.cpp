#include "dh/cli/verify.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dh/dpoly/diff_poly.hpp"
#include "dh/exact/linalg.hpp"
#include "dh/exact/param_poly.hpp"
#include "dh/hwv/hwv.hpp"
#include "dh/jets/jets.hpp"
#include "dh/pde/pde.hpp"
#include "dh/tableaux/symmetric_group.hpp"
#include "dh/wronskian/wronskian.hpp"

namespace dh::cli {

using exact::Rational;
using tableaux::Partition;

nlohmann::json CheckResult::to_json() const {
  nlohmann::json j = {{"suite", suite},       {"id", id},         {"params", params},
                      {"expected", expected}, {"computed", computed}, {"verdict", passed ? "pass" : "fail"}};
  if (!note.empty()) j["note"] = note;
  return j;
}

CheckResult make_check(std::string suite, std::string id, std::string params, std::string expected,
                       std::string computed, std::string note) {
  CheckResult r{std::move(suite), std::move(id), std::move(params), std::move(expected), std::move(computed), false,
                std::move(note)};
  r.passed = r.expected == r.computed;
  return r;
}

namespace {

template <class T>
std::string str(const T& v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

std::string nd(unsigned n, unsigned d) { return "N=" + str(n) + " d=" + str(d); }

std::size_t power(unsigned base, unsigned e) {
  std::size_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

std::mt19937_64 seeded(std::uint64_t seed, std::initializer_list<std::uint32_t> tags) {
  std::vector<std::uint32_t> data{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  data.insert(data.end(), tags.begin(), tags.end());
  std::seed_seq seq(data.begin(), data.end());
  return std::mt19937_64(seq);
}

Rational small_rational(std::mt19937_64& rng) {
  return Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
}

exact::SparseMatrix<Rational> random_invertible(std::mt19937_64& rng, unsigned size) {
  while (true) {
    exact::SparseMatrix<Rational> a(size, size);
    for (unsigned i = 0; i < size; ++i)
      for (unsigned j = 0; j < size; ++j) a.set(i, j, small_rational(rng));
    if (exact::rank(a) == size) return a;
  }
}

std::vector<dpoly::DiffPoly> polys_of(const std::vector<wronskian::BasisElement>& basis) {
  std::vector<dpoly::DiffPoly> out;
  for (const auto& e : basis) out.push_back(e.poly);
  return out;
}

std::string datum_string(const wronskian::CanonicalDatum& datum) {
  std::ostringstream s;
  s << "m=(";
  for (std::size_t i = 0; i < datum.m.size(); ++i) s << (i ? "," : "") << datum.m[i];
  s << ") alpha=(";
  auto a = datum.flat_alpha();
  for (std::size_t i = 0; i < a.size(); ++i) s << (i ? "," : "") << a[i];
  s << ')';
  return s.str();
}

std::string lk(const Partition& lambda, unsigned k) { return "lambda=" + lambda.to_string() + " k=" + str(k); }

}  // namespace

namespace checks {

CheckResult span_rank(BasisProvider& bases, unsigned n, unsigned d) {
  const auto& basis = bases.get(n, d);
  return make_check("basis", "span_rank", nd(n, d), str(power(n + 1, d)), str(dpoly::span_rank(polys_of(basis))));
}

CheckResult homogeneity(BasisProvider& bases, unsigned n, unsigned d) {
  const auto& basis = bases.get(n, d);
  std::size_t ok = 0;
  for (const auto& e : basis) {
    auto v = dpoly::is_diff_homogeneous(e.poly);
    ok += v.homogeneous && v.degree == d;
  }
  return make_check("basis", "homogeneous_degree_d", nd(n, d), str(basis.size()), str(ok));
}

CheckResult gl_stability(BasisProvider& bases, unsigned n, unsigned d, std::uint64_t seed, unsigned trials) {
  auto polys = polys_of(bases.get(n, d));
  auto rng = seeded(seed, {1, n, d});
  std::size_t solved = 0;
  for (unsigned t = 0; t < trials; ++t) {
    auto a = random_invertible(rng, n + 1);
    for (const auto& p : polys) solved += dpoly::solve_in_span(polys, dpoly::matrix_action(a, p)).has_value();
  }
  return make_check("basis", "gl_stability", nd(n, d) + " trials=" + str(trials), str(trials * polys.size()),
                    str(solved), "seed=" + str(seed));
}

CheckResult rsk_standard(unsigned d) {
  mpz_class sum = 0;
  for (const auto& l : tableaux::partitions_of(d)) sum += tableaux::count_standard(l) * tableaux::count_standard(l);
  return make_check("rsk", "sum_f_squared", "d=" + str(d), exact::factorial(d).get_str(), sum.get_str());
}

CheckResult rsk_semistandard(unsigned d, unsigned n) {
  mpz_class sum = 0;
  for (const auto& l : tableaux::partitions_of(d)) sum += tableaux::count_standard(l) * tableaux::count_semistandard(l, n);
  return make_check("rsk", "sum_f_times_d", "d=" + str(d) + " n=" + str(n), str(power(n, d)), sum.get_str());
}

CheckResult kernel_full(unsigned d, unsigned k) {
  return make_check("kernel", "kernel_dim_full", "d=" + str(d) + " k=" + str(k), exact::factorial(d).get_str(),
                    str(hwv::kernel_dim_full(d, k)));
}

CheckResult kernel_isotypic(const Partition& lambda, unsigned k) {
  return make_check("kernel", "kernel_dim_isotypic", lk(lambda, k), tableaux::count_standard(lambda).get_str(),
                    str(hwv::kernel_dim_isotypic(lambda, k)));
}

CheckResult pde_dimension(unsigned d) {
  std::string f = exact::factorial(d).get_str();
  auto dim = pde::solution_space_dim(d);
  auto wider = pde::solution_space_dim(d, pde::System::Newton, d * (d - 1) / 2 + 2);
  return make_check("pde", "solution_space_dim", "d=" + str(d), f + " (bound+2: " + f + ")",
                    str(dim) + " (bound+2: " + str(wider) + ")");
}

CheckResult vandermonde_oracle(unsigned d) {
  auto derivs = pde::vandermonde_derivative_basis(d);
  std::size_t annihilated = 0;
  for (const auto& q : derivs) {
    bool ok = true;
    for (unsigned ell = 1; ell <= d && ok; ++ell) ok = pde::newton_operator(q, ell).is_zero();
    annihilated += ok;
  }
  auto sol = pde::solution_space_basis(d);
  auto joined = sol;
  joined.insert(joined.end(), derivs.begin(), derivs.end());
  bool contained = pde::span_rank(joined) == sol.size();
  std::string f = exact::factorial(d).get_str();
  return make_check("pde", "vandermonde_oracle", "d=" + str(d),
                    "rank " + f + ", annihilated " + str(derivs.size()) + ", contained yes",
                    "rank " + str(pde::span_rank(derivs)) + ", annihilated " + str(annihilated) + ", contained " +
                        (contained ? "yes" : "no"));
}

CheckResult triangular_reduction(unsigned d) {
  std::size_t total = 0, exact_count = 0;
  std::vector<unsigned> alpha(d, 0);
  while (true) {
    ++total;
    auto comb = wronskian::reduce_to_triangular(alpha);
    bool triangular = true;
    for (const auto& [c, idx] : comb)
      for (std::size_t i = 0; i < idx.size(); ++i) triangular = triangular && idx[i] <= i;
    exact_count += triangular && wronskian::expand(comb) == wronskian::build_formal_wronskian(alpha);
    std::size_t pos = d;
    while (pos > 0 && alpha[pos - 1] == d - 1) alpha[--pos] = 0;
    if (pos == 0) break;
    ++alpha[pos - 1];
  }
  return make_check("appendixA", "reduce_to_triangular", "d=" + str(d), str(total), str(exact_count));
}

CheckResult wedge_basis_tuples(unsigned d, unsigned i) {
  const unsigned p = d - i + 1;
  auto nil = wronskian::derivation_nilpotent(d);
  std::vector<unsigned> pick(p, 0);
  std::size_t total = 0, ok = 0;
  while (true) {
    std::vector<std::vector<Rational>> vs;
    for (unsigned k : pick) {
      std::vector<Rational> e(d);
      e[k] = Rational(1);
      vs.push_back(e);
    }
    ++total;
    ok += wronskian::verify_wedge_identity(nil, vs, i);
    std::size_t pos = p;
    while (pos > 0 && pick[pos - 1] == d - 1) pick[--pos] = 0;
    if (pos == 0) break;
    ++pick[pos - 1];
  }
  return make_check("appendixA", "wedge_identity_basis", "d=" + str(d) + " i=" + str(i), str(total), str(ok));
}

CheckResult wedge_random_tuples(unsigned d, unsigned i, std::uint64_t seed, unsigned count) {
  auto rng = seeded(seed, {2, d, i});
  auto nil = wronskian::derivation_nilpotent(d);
  std::size_t ok = 0;
  for (unsigned t = 0; t < count; ++t) {
    std::vector<std::vector<Rational>> vs(d - i + 1, std::vector<Rational>(d));
    for (auto& v : vs)
      for (auto& x : v) x = small_rational(rng);
    ok += wronskian::verify_wedge_identity(nil, vs, i);
  }
  return make_check("appendixA", "wedge_identity_random", "d=" + str(d) + " i=" + str(i), str(count), str(ok),
                    "seed=" + str(seed));
}

CheckResult hwv_count(const Partition& lambda, unsigned k, unsigned n) {
  std::string expected = lambda.length() > n + 1 ? "0" : tableaux::count_semistandard(lambda, k + 1).get_str();
  return make_check("hwv", "hwv_count", lk(lambda, k) + " N=" + str(n), expected, str(hwv::hwv_basis(lambda, k, n).size()));
}

CheckResult hwv_independence(const Partition& lambda, unsigned k, unsigned n) {
  std::vector<dpoly::DiffPoly> polys;
  for (const auto& [t, p] : hwv::hwv_basis(lambda, k, n)) polys.push_back(p);
  return make_check("hwv", "hwv_independent", lk(lambda, k) + " N=" + str(n), str(polys.size()),
                    str(dpoly::span_rank(polys)));
}

CheckResult hwv_weight(const Partition& lambda, unsigned k, unsigned n) {
  auto basis = hwv::hwv_basis(lambda, k, n);
  exact::SparseMatrix<exact::ParamPoly> diag(n + 1, n + 1);
  exact::ParamPoly expected(Rational(1));
  for (unsigned j = 0; j <= n; ++j) diag.set(j, j, exact::param("x" + str(j)));
  for (unsigned j = 0; j < lambda.length(); ++j) expected = expected * exact::param("x" + str(j)).pow(lambda[j]);
  std::size_t ok = 0;
  for (const auto& [t, p] : basis) {
    auto q = dpoly::to_param(p);
    ok += dpoly::matrix_action(diag, q) == q.scaled(expected);
  }
  return make_check("hwv", "weight_vector", lk(lambda, k) + " N=" + str(n), str(basis.size()), str(ok));
}

CheckResult hwv_unipotent(const Partition& lambda, unsigned k, unsigned n) {
  auto basis = hwv::hwv_basis(lambda, k, n);
  std::size_t total = 0, ok = 0;
  for (const auto& [t, p] : basis) {
    auto q = dpoly::to_param(p);
    for (unsigned row = 1; row <= n; ++row)
      for (unsigned col = 0; col < row; ++col) {
        auto a = exact::SparseMatrix<exact::ParamPoly>::identity(n + 1);
        a.set(row, col, exact::param("t"));
        ++total;
        ok += dpoly::matrix_action(a, q) == q;
      }
  }
  return make_check("hwv", "unipotent_invariance", lk(lambda, k) + " N=" + str(n), str(total), str(ok));
}

CheckResult e_iso_image(const Partition& lambda, unsigned k) {
  const unsigned n = static_cast<unsigned>(lambda.length()) - 1;
  std::vector<exact::SparseRow> rows;
  for (const auto& [t, p] : hwv::hwv_basis(lambda, k, n)) rows.push_back(hwv::e_iso(p, lambda, k).to_row());
  return make_check("hwv", "e_iso_image_dim", lk(lambda, k), tableaux::count_semistandard(lambda, k + 1).get_str(),
                    str(exact::rank(rows, hwv::Tensor(lambda.size(), k).dimension())));
}

CheckResult commutative_diagram(const Partition& lambda, unsigned k) {
  const unsigned n = static_cast<unsigned>(lambda.length()) - 1;
  std::size_t total = 0, ok = 0;
  for (const auto& idx : hwv::basis_indices(lambda.size(), k)) {
    tableaux::Tableau t(lambda, idx);
    ++total;
    ok += hwv::e_iso(hwv::d_t(t, n), lambda, k) == hwv::symmetrizer_projection(hwv::tensor_of_tableau(t, k), lambda);
  }
  return make_check("hwv", "commutative_diagram", lk(lambda, k), str(total), str(ok));
}

CheckResult symmetrizer_square(const Partition& lambda) {
  auto c = hwv::c_lambda(lambda);
  auto sq = c * c;
  Rational m = sq.coefficient(tableaux::Permutation::identity(lambda.size()));
  std::string computed = sq == c.scaled(m) ? "m=" + m.to_string() : "not proportional";
  Rational expected(mpq_class(exact::factorial(lambda.size()), tableaux::count_standard(lambda)));
  return make_check("hwv", "symmetrizer_square", "lambda=" + lambda.to_string(), "m=" + expected.to_string(), computed);
}

CheckResult theorem2_item(BasisProvider& bases, unsigned n, unsigned d, unsigned item) {
  auto report = jets::verify_theorem2(bases.get(n, d), n, d);
  const auto& v = report.items.at(item - 1);
  return make_check("jets", "theorem2_" + v.item, nd(n, d), "pass", v.passed ? "pass" : "fail", v.witness.dump());
}

CheckResult census_order_zero(BasisProvider& bases, unsigned n, unsigned d) {
  auto entries = jets::census(bases.get(n, d), d, 0);
  std::string computed;
  for (const auto& e : entries) computed += (computed.empty() ? "" : " ") + ("n=" + str(e.n) + ":" + str(e.count));
  return make_check("jets", "census_order_zero", nd(n, d), "n=0:" + exact::binomial(n + d, d).get_str(), computed);
}

CheckResult census_reference_point() {
  std::string computed = "0";
  for (const auto& e : jets::census(1, 2, 1))
    if (e.n == 1) computed = str(e.count);
  return make_check("jets", "census_weight_one", "N=1 d=2 k=1 n=1", "1", computed);
}

CheckResult weight_formula(BasisProvider& bases, unsigned n, unsigned d) {
  std::size_t exceptions = 0;
  for (const auto& c : jets::classify_basis(bases.get(n, d))) exceptions += !c.weight_matches();
  return make_check("jets", "weight_formula", nd(n, d), "0", str(exceptions));
}

CheckResult order_audit(BasisProvider& bases, unsigned n, unsigned d) {
  std::size_t weight_exceptions = 0, below = 0, above = 0;
  std::string note;
  for (const auto& c : jets::classify_basis(bases.get(n, d))) {
    weight_exceptions += !c.weight_matches();
    above += !c.order_within_bound();
    if (c.order < c.order_bound) {
      ++below;
      note += (note.empty() ? "" : "; ") + datum_string(c.datum) + " order " + str(c.order) + " < " + str(c.order_bound);
    }
  }
  return make_check("jets", "order_audit", nd(n, d), "weight exceptions 0, above bound 0",
                    "weight exceptions " + str(weight_exceptions) + ", above bound " + str(above),
                    str(below) + " element(s) below the order formula" + (note.empty() ? "" : ": " + note));
}

}  // namespace checks

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "basis", "rsk", "kernel", "pde", "appendixA", "hwv", "jets"};
  return names;
}

std::vector<Check> build_suite(const std::string& suite, const SuiteCaps& caps, std::uint64_t seed,
                               BasisProvider& bases) {
  std::vector<Check> out;
  const unsigned poly_d = caps.max_d.value_or(4);
  const unsigned max_n = caps.max_n.value_or(2);
  const unsigned max_k = caps.max_k.value_or(3);
  BasisProvider* b = &bases;

  if (suite == "all") {
    for (const auto& name : suite_names())
      if (name != "all") {
        auto part = build_suite(name, caps, seed, bases);
        out.insert(out.end(), part.begin(), part.end());
      }
    return out;
  }
  if (suite == "basis") {
    for (unsigned n = 0; n <= max_n; ++n)
      for (unsigned d = 1; d <= poly_d; ++d) {
        out.push_back([=] { return checks::span_rank(*b, n, d); });
        out.push_back([=] { return checks::homogeneity(*b, n, d); });
        if (n >= 1 && d + n <= poly_d + 1) out.push_back([=] { return checks::gl_stability(*b, n, d, seed, 5); });
      }
    return out;
  }
  if (suite == "rsk") {
    const unsigned max_d = caps.max_d.value_or(8);
    for (unsigned d = 1; d <= max_d; ++d) out.push_back([=] { return checks::rsk_standard(d); });
    for (unsigned d = 1; d <= std::min(max_d, 6u); ++d)
      for (unsigned n = 1; n <= 4; ++n) out.push_back([=] { return checks::rsk_semistandard(d, n); });
    return out;
  }
  if (suite == "kernel") {
    for (unsigned d = 1; d <= poly_d; ++d) {
      out.push_back([=] { return checks::kernel_full(d, d - 1); });
      for (const auto& l : tableaux::partitions_of(d)) out.push_back([=] { return checks::kernel_isotypic(l, d - 1); });
    }
    return out;
  }
  if (suite == "pde") {
    for (unsigned d = 1; d <= poly_d; ++d) {
      out.push_back([=] { return checks::pde_dimension(d); });
      out.push_back([=] { return checks::vandermonde_oracle(d); });
    }
    return out;
  }
  if (suite == "appendixA") {
    for (unsigned d = 1; d <= poly_d; ++d) {
      out.push_back([=] { return checks::triangular_reduction(d); });
      for (unsigned i = 1; i <= d; ++i) {
        out.push_back([=] { return checks::wedge_basis_tuples(d, i); });
        out.push_back([=] { return checks::wedge_random_tuples(d, i, seed, 20); });
      }
    }
    return out;
  }
  if (suite == "hwv") {
    for (unsigned d = 1; d <= poly_d; ++d)
      for (const auto& l : tableaux::partitions_of(d)) {
        for (unsigned k = 0; k <= max_k; ++k) {
          for (unsigned n = 0; n <= max_n; ++n) {
            out.push_back([=] { return checks::hwv_count(l, k, n); });
            if (l.length() > n + 1) continue;
            out.push_back([=] { return checks::hwv_independence(l, k, n); });
            out.push_back([=] { return checks::hwv_weight(l, k, n); });
            if (n >= 1) out.push_back([=] { return checks::hwv_unipotent(l, k, n); });
          }
          out.push_back([=] { return checks::e_iso_image(l, k); });
          if (d <= 3) out.push_back([=] { return checks::commutative_diagram(l, k); });
        }
      }
    for (unsigned d = 1; d <= std::min(poly_d + 1, 5u); ++d)
      for (const auto& l : tableaux::partitions_of(d)) out.push_back([=] { return checks::symmetrizer_square(l); });
    return out;
  }
  if (suite == "jets") {
    out.push_back([] { return checks::census_reference_point(); });
    for (unsigned n = 1; n <= max_n; ++n)
      for (unsigned d = 1; d + n <= poly_d + 1; ++d) {
        for (unsigned item = 1; item <= 3; ++item) out.push_back([=] { return checks::theorem2_item(*b, n, d, item); });
        out.push_back([=] { return checks::census_order_zero(*b, n, d); });
        out.push_back([=] { return checks::order_audit(*b, n, d); });
      }
    return out;
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, unsigned jobs) {
  std::vector<CheckResult> results(checks.size());
  auto run_one = [&](std::size_t i) {
    try {
      results[i] = checks[i]();
    } catch (const std::exception& ex) {
      results[i] = make_check("error", "exception", "check #" + str(i), "no exception", ex.what());
    }
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) run_one(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < checks.size();) run_one(i);
    });
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace dh::cli
