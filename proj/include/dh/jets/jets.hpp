#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dh/wronskian/wronskian.hpp"
#include "json.hpp"

namespace dh::jets {

using wronskian::BasisElement;
using wronskian::CanonicalDatum;

struct CensusEntry {
  unsigned k = 0;
  unsigned n = 0;  // weight
  std::size_t count = 0;
  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

struct BasisClassification {
  CanonicalDatum datum;
  unsigned order = 0;             // computed from the expanded polynomial
  std::optional<unsigned> weight; // nullopt if not isobaric
  unsigned order_bound = 0;       // max_i (d - 1 - alpha_i)
  unsigned weight_formula = 0;    // d(d-1)/2 - |alpha|

  [[nodiscard]] bool weight_matches() const { return weight && *weight == weight_formula; }
  [[nodiscard]] bool order_within_bound() const { return order <= order_bound; }
  [[nodiscard]] bool order_exact() const { return order == order_bound; }
};

BasisClassification classify(const BasisElement& e);
/// Throws std::invalid_argument for d = 0.
std::vector<BasisClassification> classify_basis(unsigned n, unsigned d);
std::vector<BasisClassification> classify_basis(const std::vector<BasisElement>& basis);

/// Dimension census of (V_d^Diff)^(k) by weight, zero counts omitted, sorted
/// by weight. For k >= d-1 the canonical basis is counted by weight; below
/// that each weight block is cut down by the order > k coefficients.
std::vector<CensusEntry> census(unsigned n, unsigned d, unsigned k);
/// Same, from an already built canonical basis of V_d^Diff (d >= 1).
std::vector<CensusEntry> census(const std::vector<BasisElement>& basis, unsigned d, unsigned k);
/// Always uses the per-weight nullity computation, for any k.
std::vector<CensusEntry> census_by_nullity(const std::vector<BasisElement>& basis, unsigned k);

/// floor(N d^2 / (2 (N+1))): weights above it carry no sections.
unsigned vanishing_bound(unsigned n, unsigned d);

struct ItemVerdict {
  std::string item;
  bool passed = false;
  nlohmann::json witness;  // details, counterexamples on failure
};

struct Theorem2Report {
  unsigned n = 0, d = 0;
  std::vector<ItemVerdict> items;
  [[nodiscard]] bool passed() const;
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Item 1: census for k = d-1, d, d+1 agrees with the nullity computation and
/// does not depend on k. Item 2: the k = d-1 total is (N+1)^d. Item 3: no
/// weight above vanishing_bound(N, d).
Theorem2Report verify_theorem2(unsigned n, unsigned d);
Theorem2Report verify_theorem2(const std::vector<BasisElement>& basis, unsigned n, unsigned d);

/// Lines "N,d,k,n,count" with a header line.
std::string census_csv(unsigned n, unsigned d, const std::vector<CensusEntry>& entries, bool header = true);
nlohmann::json census_json(unsigned n, unsigned d, const std::vector<CensusEntry>& entries);

}  // namespace dh::jets
