#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dh/cli/cache.hpp"
#include "dh/tableaux/tableaux.hpp"
#include "json.hpp"

namespace dh::cli {

/// One verified claim. passed iff expected == computed.
struct CheckResult {
  std::string suite;
  std::string id;
  std::string params;
  std::string expected;
  std::string computed;
  bool passed = false;
  std::string note;  // informational, e.g. audit findings

  [[nodiscard]] nlohmann::json to_json() const;
};

CheckResult make_check(std::string suite, std::string id, std::string params, std::string expected,
                       std::string computed, std::string note = {});

using Check = std::function<CheckResult()>;

struct SuiteCaps {
  std::optional<unsigned> max_d;
  std::optional<unsigned> max_n;
  std::optional<unsigned> max_k;
};

const std::vector<std::string>& suite_names();

/// Checks of a named suite ("all" concatenates the others). Throws
/// std::invalid_argument for an unknown name.
std::vector<Check> build_suite(const std::string& suite, const SuiteCaps& caps, std::uint64_t seed,
                               BasisProvider& bases);

/// Runs checks on `jobs` threads; results keep the submission order.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, unsigned jobs);

// Individual checks, shared by the CLI suites and the acceptance driver.
namespace checks {

CheckResult span_rank(BasisProvider& bases, unsigned n, unsigned d);
CheckResult homogeneity(BasisProvider& bases, unsigned n, unsigned d);
CheckResult gl_stability(BasisProvider& bases, unsigned n, unsigned d, std::uint64_t seed, unsigned trials);
CheckResult rsk_standard(unsigned d);
CheckResult rsk_semistandard(unsigned d, unsigned n);
CheckResult kernel_full(unsigned d, unsigned k);
CheckResult kernel_isotypic(const tableaux::Partition& lambda, unsigned k);
CheckResult pde_dimension(unsigned d);
CheckResult vandermonde_oracle(unsigned d);
CheckResult triangular_reduction(unsigned d);
CheckResult wedge_basis_tuples(unsigned d, unsigned i);
CheckResult wedge_random_tuples(unsigned d, unsigned i, std::uint64_t seed, unsigned count);
CheckResult hwv_count(const tableaux::Partition& lambda, unsigned k, unsigned n);
CheckResult hwv_independence(const tableaux::Partition& lambda, unsigned k, unsigned n);
CheckResult hwv_weight(const tableaux::Partition& lambda, unsigned k, unsigned n);
CheckResult hwv_unipotent(const tableaux::Partition& lambda, unsigned k, unsigned n);
CheckResult e_iso_image(const tableaux::Partition& lambda, unsigned k);
CheckResult commutative_diagram(const tableaux::Partition& lambda, unsigned k);
CheckResult symmetrizer_square(const tableaux::Partition& lambda);
CheckResult theorem2_item(BasisProvider& bases, unsigned n, unsigned d, unsigned item);
CheckResult census_order_zero(BasisProvider& bases, unsigned n, unsigned d);
CheckResult census_reference_point();
CheckResult weight_formula(BasisProvider& bases, unsigned n, unsigned d);
/// Passes when the weight formula has no exceptions; the note lists every
/// element whose order is below max_i(d-1-alpha_i).
CheckResult order_audit(BasisProvider& bases, unsigned n, unsigned d);

}  // namespace checks

}  // namespace dh::cli
