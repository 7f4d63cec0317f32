#include "dh/wronskian/wronskian.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "dh/dpoly/text.hpp"
#include "dh/exact/linalg.hpp"

namespace dh::wronskian {

using exact::ParamPoly;
using exact::UniPoly;

WronskSpec WronskSpec::monomial(const std::vector<unsigned>& powers, const std::vector<unsigned>& vars) {
  if (powers.size() != vars.size()) throw std::invalid_argument("powers and variables differ in length");
  WronskSpec s;
  for (std::size_t k = 0; k < powers.size(); ++k) s.entries.push_back({UniPoly::monomial(powers[k]), vars[k]});
  return s;
}

std::vector<std::vector<DiffPoly>> wronskian_matrix(const WronskSpec& spec, unsigned n) {
  const std::size_t d = spec.entries.size();
  for (const auto& e : spec.entries)
    if (e.var > n) throw std::out_of_range("variable index exceeds ambient N");
  std::vector<std::vector<DiffPoly>> m(d, std::vector<DiffPoly>(d, DiffPoly(n)));
  for (std::size_t k = 0; k < d; ++k) {
    const auto& e = spec.entries[k];
    std::vector<Rational> at_zero(d);
    for (std::size_t j = 0; j < d; ++j) at_zero[j] = exact::as_rational(e.r.derivative_at_zero(j));
    for (std::size_t r = 0; r < d; ++r) {
      DiffPoly entry(n);
      for (std::size_t j = 0; j <= r; ++j) {
        const Rational& c = at_zero[r - j];
        if (c.is_zero()) continue;
        entry += DiffPoly::variable(e.var, j, n).scaled(c * Rational(mpq_class(exact::binomial(r, j))));
      }
      m[r][k] = std::move(entry);
    }
  }
  return m;
}

DiffPoly build_wronskian(const WronskSpec& spec, unsigned n) {
  return exact::det_bareiss(wronskian_matrix(spec, n)).with_ambient(n);
}

unsigned CanonicalDatum::degree() const {
  unsigned d = 0;
  for (unsigned x : m) d += x;
  return d;
}

std::vector<unsigned> CanonicalDatum::flat_alpha() const {
  std::vector<unsigned> out;
  for (const auto& run : alphas) out.insert(out.end(), run.begin(), run.end());
  return out;
}

std::vector<unsigned> CanonicalDatum::column_vars() const {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < m.size(); ++i) out.insert(out.end(), m[i], i);
  return out;
}

WronskSpec CanonicalDatum::spec() const { return WronskSpec::monomial(flat_alpha(), column_vars()); }

bool is_valid(const CanonicalDatum& datum) {
  std::size_t runs = 0;
  unsigned total = 0;
  for (unsigned mi : datum.m) {
    if (mi == 0) continue;
    if (runs >= datum.alphas.size()) return false;
    const auto& run = datum.alphas[runs++];
    total += mi;
    if (run.size() != mi) return false;
    for (std::size_t k = 0; k < run.size(); ++k) {
      if (run[k] >= total) return false;
      if (k > 0 && run[k] <= run[k - 1]) return false;
    }
  }
  return runs == datum.alphas.size();
}

namespace {

// Compositions of `total` into `parts` naturals, lexicographic.
void compositions(unsigned total, std::size_t parts, std::vector<unsigned>& cur,
                  const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    visit(cur);
    cur.pop_back();
    return;
  }
  for (unsigned x = 0; x <= total; ++x) {
    cur.push_back(x);
    compositions(total - x, parts, cur, visit);
    cur.pop_back();
  }
}

void for_each_composition(unsigned total, std::size_t parts,
                          const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (parts == 0) {
    if (total == 0) visit({});
    return;
  }
  std::vector<unsigned> cur;
  compositions(total, parts, cur, visit);
}

// Strictly increasing k-subsets of {0..bound-1}, lexicographic.
void increasing_runs(unsigned k, unsigned bound, std::vector<unsigned>& cur,
                     const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (cur.size() == k) {
    visit(cur);
    return;
  }
  unsigned start = cur.empty() ? 0 : cur.back() + 1;
  for (unsigned x = start; x + (k - cur.size()) <= bound; ++x) {
    cur.push_back(x);
    increasing_runs(k, bound, cur, visit);
    cur.pop_back();
  }
}

void fill_alphas(const std::vector<unsigned>& m, std::size_t i, unsigned total,
                 std::vector<std::vector<unsigned>>& alphas, std::vector<CanonicalDatum>& out) {
  if (i == m.size()) {
    out.push_back({m, alphas});
    return;
  }
  if (m[i] == 0) {
    fill_alphas(m, i + 1, total, alphas, out);
    return;
  }
  std::vector<unsigned> cur;
  increasing_runs(m[i], total + m[i], cur, [&](const std::vector<unsigned>& run) {
    alphas.push_back(run);
    fill_alphas(m, i + 1, total + m[i], alphas, out);
    alphas.pop_back();
  });
}

}  // namespace

std::vector<CanonicalDatum> canonical_data(unsigned n, unsigned d) {
  if (d == 0) throw std::invalid_argument("canonical basis needs d >= 1");
  std::vector<CanonicalDatum> out;
  for_each_composition(d, n + 1, [&](const std::vector<unsigned>& m) {
    std::vector<std::vector<unsigned>> alphas;
    fill_alphas(m, 0, 0, alphas, out);
  });
  return out;
}

std::vector<BasisElement> enumerate_canonical_basis(unsigned n, unsigned d, unsigned jobs) {
  auto data = canonical_data(n, d);
  std::vector<BasisElement> out(data.size());
  auto build = [&](std::size_t k) { out[k] = {data[k], build_wronskian(data[k].spec(), n)}; };
  if (jobs <= 1 || data.size() < 2) {
    for (std::size_t k = 0; k < data.size(); ++k) build(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, data.size()); ++t)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next++) < data.size();) {
        try {
          build(k);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

namespace {

void check_formal_index(const std::vector<unsigned>& alpha) {
  for (unsigned a : alpha)
    if (a >= alpha.size()) throw std::invalid_argument("formal Wronskian exponent exceeds d-1");
}

unsigned formal_ambient(std::size_t d) { return d == 0 ? 0 : static_cast<unsigned>(d - 1); }

}  // namespace

DiffPoly build_formal_wronskian(const std::vector<unsigned>& alpha) {
  check_formal_index(alpha);
  std::vector<unsigned> vars(alpha.size());
  for (unsigned i = 0; i < vars.size(); ++i) vars[i] = i;
  return build_wronskian(WronskSpec::monomial(alpha, vars), formal_ambient(alpha.size()));
}

namespace {

using Combination = std::map<std::vector<unsigned>, Rational>;

const Combination& reduce_memo(const std::vector<unsigned>& alpha, std::map<std::vector<unsigned>, Combination>& memo) {
  if (auto it = memo.find(alpha); it != memo.end()) return it->second;
  const std::size_t d = alpha.size();
  Combination result;
  bool zero = false;
  for (unsigned a : alpha) zero = zero || a >= d;
  std::size_t i = 1;
  while (!zero && i <= d && alpha[i - 1] <= i - 1) ++i;
  if (!zero && i > d) {
    result[alpha] = Rational(1);
  } else if (!zero) {
    std::vector<unsigned> base = alpha;
    base[i - 1] -= static_cast<unsigned>(i);
    for_each_composition(static_cast<unsigned>(i), d - i + 1, [&](const std::vector<unsigned>& g) {
      std::vector<unsigned> beta = base;
      for (std::size_t k = 0; k < g.size(); ++k) beta[i - 1 + k] += g[k];
      if (beta == alpha) return;
      for (const auto& [idx, c] : reduce_memo(beta, memo)) {
        Rational& slot = result[idx];
        slot -= c;
        if (slot.is_zero()) result.erase(idx);
      }
    });
  }
  return memo.emplace(alpha, std::move(result)).first->second;
}

}  // namespace

FormalCombination reduce_to_triangular(const std::vector<unsigned>& alpha) {
  check_formal_index(alpha);
  std::map<std::vector<unsigned>, Combination> memo;
  FormalCombination out;
  for (const auto& [idx, c] : reduce_memo(alpha, memo)) out.emplace_back(c, idx);
  return out;
}

DiffPoly expand(const FormalCombination& combination) {
  DiffPoly out;
  for (const auto& [c, idx] : combination) out += build_formal_wronskian(idx).scaled(c);
  return out;
}

DiffPoly specialize(const DiffPoly& formal, const std::vector<unsigned>& vars, unsigned n) {
  for (unsigned v : vars)
    if (v > n) throw std::out_of_range("variable index exceeds ambient N");
  return dpoly::substitute<Rational, Rational>(formal, n, [&](const dpoly::VarRef& v) {
    if (v.var >= vars.size()) throw std::out_of_range("formal variable without an image");
    return DiffPoly::variable(vars[v.var], v.order, n);
  });
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

std::vector<Rational> mat_vec(const Matrix& a, const std::vector<Rational>& v) {
  std::vector<Rational> out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!a[r][c].is_zero() && !v[c].is_zero()) out[r] += a[r][c] * v[c];
  return out;
}

void row_subsets(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                 const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (cur.size() == k) {
    visit(cur);
    return;
  }
  std::size_t start = cur.empty() ? 0 : cur.back() + 1;
  for (std::size_t x = start; x + (k - cur.size()) <= n; ++x) {
    cur.push_back(x);
    row_subsets(n, k, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

bool verify_wedge_identity(const Matrix& nilpotent, const Matrix& vectors, unsigned i) {
  const std::size_t d = nilpotent.size();
  for (const auto& row : nilpotent)
    if (row.size() != d) throw std::invalid_argument("nilpotent matrix is not square");
  if (i > d) throw std::invalid_argument("wedge identity needs i <= d");
  const std::size_t p = d - i + 1;
  if (vectors.size() != p) throw std::invalid_argument("wedge identity needs d-i+1 vectors");
  for (const auto& v : vectors)
    if (v.size() != d) throw std::invalid_argument("vector length differs from matrix size");

  // N^d = 0, checked column by column.
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<Rational> e(d);
    e[c] = Rational(1);
    for (std::size_t k = 0; k < d; ++k) e = mat_vec(nilpotent, e);
    for (const auto& x : e)
      if (!x.is_zero()) throw std::invalid_argument("matrix is not nilpotent of index <= d");
  }
  if (p > d) return true;

  // powers[k][j] = N^j v_k
  std::vector<Matrix> powers(p);
  for (std::size_t k = 0; k < p; ++k) {
    powers[k].push_back(vectors[k]);
    for (unsigned j = 1; j <= i; ++j) powers[k].push_back(mat_vec(nilpotent, powers[k].back()));
  }
  std::map<std::vector<std::size_t>, Rational> coords;
  for_each_composition(i, p, [&](const std::vector<unsigned>& a) {
    std::vector<std::size_t> rows;
    row_subsets(d, p, rows, [&](const std::vector<std::size_t>& sel) {
      Matrix minor(p, std::vector<Rational>(p));
      for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < p; ++c) minor[r][c] = powers[c][a[c]][sel[r]];
      coords[sel] += exact::det_bareiss(std::move(minor));
    });
  });
  for (const auto& [sel, v] : coords)
    if (!v.is_zero()) return false;
  return true;
}

Matrix derivation_nilpotent(unsigned d) {
  Matrix n(d, std::vector<Rational>(d));
  for (unsigned i = 0; i + 1 < d; ++i) n[i + 1][i] = Rational(static_cast<long>(i + 1));
  return n;
}

std::size_t theta_family_rank(unsigned n, unsigned d, const Rational& theta) {
  if (theta.is_zero()) throw std::invalid_argument("theta must be nonzero");
  if (d == 0) throw std::invalid_argument("theta family needs d >= 1");
  std::vector<UniPoly> shifts;
  for (unsigned j = 0; j < d; ++j) {
    std::vector<ParamPoly> coeffs;
    for (unsigned k = 0; k <= j; ++k)
      coeffs.push_back(ParamPoly(Rational(mpq_class(exact::binomial(j, k))) * theta.pow(j - k)));
    shifts.emplace_back(std::move(coeffs));
  }
  std::vector<DiffPoly> polys;
  std::vector<unsigned> vars(d, 0);
  while (true) {
    WronskSpec s;
    for (unsigned j = 0; j < d; ++j) s.entries.push_back({shifts[j], vars[j]});
    polys.push_back(build_wronskian(s, n));
    std::size_t pos = d;
    while (pos > 0 && vars[pos - 1] == n) vars[--pos] = 0;
    if (pos == 0) break;
    ++vars[pos - 1];
  }
  return dpoly::span_rank(polys);
}

nlohmann::json to_json(const BasisElement& e) {
  auto g = dpoly::gradings(e.poly);
  return {{"m", e.datum.m},
          {"alpha", e.datum.flat_alpha()},
          {"order", g.order},
          {"weight", g.weight ? nlohmann::json(*g.weight) : nlohmann::json()},
          {"poly", dpoly::to_json(e.poly)}};
}

BasisElement basis_element_from_json(const nlohmann::json& j) {
  BasisElement e;
  e.datum.m = j.at("m").get<std::vector<unsigned>>();
  auto flat = j.at("alpha").get<std::vector<unsigned>>();
  std::size_t pos = 0;
  for (unsigned mi : e.datum.m) {
    if (mi == 0) continue;
    if (pos + mi > flat.size()) throw std::invalid_argument("alpha shorter than |m|");
    e.datum.alphas.emplace_back(flat.begin() + static_cast<long>(pos), flat.begin() + static_cast<long>(pos + mi));
    pos += mi;
  }
  if (pos != flat.size() || !is_valid(e.datum)) throw std::invalid_argument("invalid canonical datum");
  e.poly = dpoly::diff_poly_from_json(j.at("poly"));
  return e;
}

nlohmann::json manifest_json(const std::vector<BasisElement>& basis) {
  auto out = nlohmann::json::array();
  for (const auto& e : basis) out.push_back(to_json(e));
  return out;
}

std::vector<BasisElement> manifest_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("manifest must be a JSON array");
  std::vector<BasisElement> out;
  for (const auto& e : j) out.push_back(basis_element_from_json(e));
  return out;
}

}  // namespace dh::wronskian
