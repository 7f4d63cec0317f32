#include "dh/jets/jets.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dh/exact/linalg.hpp"

namespace dh::jets {

using dpoly::DiffPoly;

BasisClassification classify(const BasisElement& e) {
  BasisClassification c;
  c.datum = e.datum;
  auto g = dpoly::gradings(e.poly);
  c.order = g.order;
  c.weight = g.weight;
  const unsigned d = e.datum.degree();
  unsigned total = 0;
  for (unsigned a : e.datum.flat_alpha()) {
    total += a;
    c.order_bound = std::max(c.order_bound, d - 1 - a);
  }
  c.weight_formula = d * (d - 1) / 2 - total;
  return c;
}

std::vector<BasisClassification> classify_basis(const std::vector<BasisElement>& basis) {
  std::vector<BasisClassification> out;
  for (const auto& e : basis) out.push_back(classify(e));
  return out;
}

std::vector<BasisClassification> classify_basis(unsigned n, unsigned d) {
  return classify_basis(wronskian::enumerate_canonical_basis(n, d));
}

namespace {

unsigned weight_of(const BasisElement& e) {
  auto w = dpoly::gradings(e.poly).weight;
  if (!w) throw std::logic_error("canonical basis element is not isobaric");
  return *w;
}

std::vector<CensusEntry> to_entries(unsigned k, const std::map<unsigned, std::size_t>& counts) {
  std::vector<CensusEntry> out;
  for (const auto& [w, c] : counts)
    if (c) out.push_back({k, w, c});
  return out;
}

// dim of the combinations of `block` whose monomials of order > k cancel
std::size_t filtered_dim(const std::vector<DiffPoly>& block, unsigned k) {
  std::map<dpoly::DiffMonomial, std::size_t, dpoly::DiffMonomial::Descending> column;
  for (const auto& p : block)
    for (const auto& [m, c] : p.terms())
      if (dpoly::order(m) > k) column.emplace(m, 0);
  std::size_t idx = 0;
  for (auto& [m, i] : column) i = idx++;
  // rows: one per high-order monomial; columns: block elements
  std::vector<std::map<std::size_t, exact::Rational>> rows(column.size());
  for (std::size_t j = 0; j < block.size(); ++j)
    for (const auto& [m, c] : block[j].terms())
      if (dpoly::order(m) > k) rows[column.at(m)][j] = c;
  std::vector<exact::SparseRow> matrix;
  for (const auto& r : rows) matrix.emplace_back(r.begin(), r.end());
  return block.size() - exact::rank(matrix, block.size());
}

}  // namespace

std::vector<CensusEntry> census_by_nullity(const std::vector<BasisElement>& basis, unsigned k) {
  std::map<unsigned, std::vector<DiffPoly>> blocks;
  for (const auto& e : basis) blocks[weight_of(e)].push_back(e.poly);
  std::map<unsigned, std::size_t> counts;
  for (const auto& [w, block] : blocks) counts[w] = filtered_dim(block, k);
  return to_entries(k, counts);
}

std::vector<CensusEntry> census(const std::vector<BasisElement>& basis, unsigned d, unsigned k) {
  if (d >= 1 && k + 1 < d) return census_by_nullity(basis, k);
  std::map<unsigned, std::size_t> counts;
  for (const auto& e : basis) ++counts[weight_of(e)];
  return to_entries(k, counts);
}

std::vector<CensusEntry> census(unsigned n, unsigned d, unsigned k) {
  if (d == 0) return {{k, 0, 1}};
  return census(wronskian::enumerate_canonical_basis(n, d), d, k);
}

unsigned vanishing_bound(unsigned n, unsigned d) { return n * d * d / (2 * (n + 1)); }

bool Theorem2Report::passed() const {
  return std::all_of(items.begin(), items.end(), [](const ItemVerdict& v) { return v.passed; });
}

nlohmann::json Theorem2Report::to_json() const {
  nlohmann::json items_json = nlohmann::json::array();
  for (const auto& v : items) items_json.push_back({{"item", v.item}, {"passed", v.passed}, {"witness", v.witness}});
  return {{"N", n}, {"d", d}, {"passed", passed()}, {"items", items_json}};
}

namespace {

nlohmann::json entries_json(const std::vector<CensusEntry>& entries) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : entries) out.push_back({{"k", e.k}, {"n", e.n}, {"count", e.count}});
  return out;
}

bool same_counts(const std::vector<CensusEntry>& a, const std::vector<CensusEntry>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].n != b[i].n || a[i].count != b[i].count) return false;
  return true;
}

}  // namespace

Theorem2Report verify_theorem2(const std::vector<BasisElement>& basis, unsigned n, unsigned d) {
  Theorem2Report report{n, d, {}};
  const unsigned k0 = d == 0 ? 0 : d - 1;
  auto reference = d == 0 ? census(n, 0, k0) : census(basis, d, k0);

  ItemVerdict stable{"stabilization", true, nlohmann::json::object()};
  for (unsigned k = k0; k <= k0 + 2; ++k) {
    auto counted = d == 0 ? census(n, 0, k) : census(basis, d, k);
    auto solved = d == 0 ? counted : census_by_nullity(basis, k);
    if (!same_counts(counted, reference) || !same_counts(solved, reference)) {
      stable.passed = false;
      stable.witness["k=" + std::to_string(k)] = {{"counted", entries_json(counted)}, {"solved", entries_json(solved)}};
    }
  }
  stable.witness["reference"] = entries_json(reference);
  report.items.push_back(stable);

  std::size_t total = 0, expected = 1;
  for (const auto& e : reference) total += e.count;
  for (unsigned i = 0; i < d; ++i) expected *= n + 1;
  report.items.push_back({"total", total == expected, {{"total", total}, {"expected", expected}}});

  const unsigned bound = vanishing_bound(n, d);
  ItemVerdict vanish{"vanishing", true, {{"bound", bound}, {"violations", nlohmann::json::array()}}};
  for (const auto& e : reference)
    if (e.n > bound) {
      vanish.passed = false;
      vanish.witness["violations"].push_back({{"n", e.n}, {"count", e.count}});
    }
  report.items.push_back(vanish);
  return report;
}

Theorem2Report verify_theorem2(unsigned n, unsigned d) {
  if (d == 0) return verify_theorem2(std::vector<BasisElement>{}, n, 0);
  return verify_theorem2(wronskian::enumerate_canonical_basis(n, d), n, d);
}

std::string census_csv(unsigned n, unsigned d, const std::vector<CensusEntry>& entries, bool header) {
  std::ostringstream out;
  if (header) out << "N,d,k,n,count\n";
  for (const auto& e : entries) out << n << ',' << d << ',' << e.k << ',' << e.n << ',' << e.count << '\n';
  return out.str();
}

nlohmann::json census_json(unsigned n, unsigned d, const std::vector<CensusEntry>& entries) {
  return {{"N", n}, {"d", d}, {"entries", entries_json(entries)}};
}

}  // namespace dh::jets
