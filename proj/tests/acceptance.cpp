#include <algorithm>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "dh/cli/verify.hpp"
#include "dh/tableaux/tableaux.hpp"

namespace checks = dh::cli::checks;
using dh::cli::Check;
using dh::cli::CheckResult;
using dh::tableaux::partitions_of;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Criterion {
  int number;
  std::string title;
  std::vector<Check> checks;
  // extra condition over all results, e.g. audit content
  std::function<std::string(const std::vector<CheckResult>&)> extra;
};

std::vector<std::pair<unsigned, unsigned>> pairs_n1_d4_n2_d3() { return {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}}; }

}  // namespace

int main() {
  const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  dh::cli::BasisProvider bases(std::nullopt, jobs, &std::cerr);
  auto* b = &bases;
  std::vector<Criterion> criteria;

  {
    Criterion c{1, "dim V_d = (N+1)^d", {}, {}};
    for (auto [n, max_d] : std::vector<std::pair<unsigned, unsigned>>{{0, 6}, {1, 5}, {2, 4}, {3, 3}})
      for (unsigned d = 1; d <= max_d; ++d) c.checks.push_back([=] { return checks::span_rank(*b, n, d); });
    criteria.push_back(std::move(c));
  }
  {
    Criterion c{2, "canonical basis is differentially homogeneous of degree d", {}, {}};
    for (unsigned n = 0; n <= 2; ++n)
      for (unsigned d = 1; d <= 4; ++d) c.checks.push_back([=] { return checks::homogeneity(*b, n, d); });
    criteria.push_back(std::move(c));
  }
  {
    Criterion c{3, "GL-stability under 5 seeded matrices", {}, {}};
    for (auto [n, d] : pairs_n1_d4_n2_d3()) c.checks.push_back([=] { return checks::gl_stability(*b, n, d, kSeed, 5); });
    criteria.push_back(std::move(c));
  }
  {
    Criterion c{4, "RSK identities", {}, {}};
    for (unsigned d = 1; d <= 8; ++d) c.checks.push_back([=] { return checks::rsk_standard(d); });
    for (unsigned d = 1; d <= 6; ++d)
      for (unsigned n = 1; n <= 4; ++n) c.checks.push_back([=] { return checks::rsk_semistandard(d, n); });
    criteria.push_back(std::move(c));
  }
  {
    Criterion c{5, "kernel dimensions d! and f_lambda", {}, {}};
    for (unsigned d = 1; d <= 4; ++d) {
      c.checks.push_back([=] { return checks::kernel_full(d, d - 1); });
      for (const auto& l : partitions_of(d)) c.checks.push_back([=] { return checks::kernel_isotypic(l, d - 1); });
    }
    criteria.push_back(std::move(c));
  }
  {
    Criterion c{6, "Newton PDE solution space and Vandermonde oracle", {}, {}};
    for (unsigned d = 1; d <= 4; ++d) {
      c.checks.push_back([=] { return checks::pde_dimension(d); });
      c.checks.push_back([=] { return checks::vandermonde_oracle(d); });
    }
    criteria.push_back(std::move(c));
  }
  {
    Criterion c{7, "triangular reduction and wedge identity", {}, {}};
    for (unsigned d = 1; d <= 4; ++d) {
      c.checks.push_back([=] { return checks::triangular_reduction(d); });
      for (unsigned i = 1; i <= d; ++i) {
        c.checks.push_back([=] { return checks::wedge_basis_tuples(d, i); });
        c.checks.push_back([=] { return checks::wedge_random_tuples(d, i, kSeed, 20); });
      }
    }
    criteria.push_back(std::move(c));
  }
  {
    Criterion c{8, "highest weight vectors, e_iso and symmetrizers", {}, {}};
    for (unsigned d = 1; d <= 4; ++d)
      for (const auto& l : partitions_of(d))
        for (unsigned k = 0; k <= 3; ++k) {
          for (unsigned n = 0; n <= 3; ++n) {
            c.checks.push_back([=] { return checks::hwv_count(l, k, n); });
            if (l.length() > n + 1) continue;
            c.checks.push_back([=] { return checks::hwv_independence(l, k, n); });
            c.checks.push_back([=] { return checks::hwv_weight(l, k, n); });
            if (n >= 1) c.checks.push_back([=] { return checks::hwv_unipotent(l, k, n); });
          }
          c.checks.push_back([=] { return checks::e_iso_image(l, k); });
        }
    for (unsigned d = 1; d <= 5; ++d)
      for (const auto& l : partitions_of(d)) c.checks.push_back([=] { return checks::symmetrizer_square(l); });
    criteria.push_back(std::move(c));
  }
  {
    Criterion c{9, "census items 1-3 and reference points", {}, {}};
    for (auto [n, d] : pairs_n1_d4_n2_d3()) {
      for (unsigned item = 1; item <= 3; ++item) c.checks.push_back([=] { return checks::theorem2_item(*b, n, d, item); });
      c.checks.push_back([=] { return checks::census_order_zero(*b, n, d); });
    }
    c.checks.push_back([] { return checks::census_reference_point(); });
    criteria.push_back(std::move(c));
  }
  {
    Criterion c{10, "weight formula exact, order shortfalls logged", {}, {}};
    for (auto [n, d] : pairs_n1_d4_n2_d3()) {
      c.checks.push_back([=] { return checks::weight_formula(*b, n, d); });
      c.checks.push_back([=] { return checks::order_audit(*b, n, d); });
    }
    c.extra = [](const std::vector<CheckResult>& results) -> std::string {
      for (const auto& r : results)
        if (r.id == "order_audit" && r.params == "N=1 d=2" && r.note.find("alpha=(0,1) order 0 < 1") != std::string::npos)
          return {};
      return "d=2 alpha=(0,1) shortfall not logged";
    };
    criteria.push_back(std::move(c));
  }

  int failed = 0;
  for (const auto& c : criteria) {
    auto results = dh::cli::run_checks(c.checks, jobs);
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed;
    std::string extra = c.extra ? c.extra(results) : std::string();
    bool ok = passed == results.size() && extra.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << passed << '/'
              << results.size() << " checks)\n";
    for (const auto& r : results) {
      if (!r.passed)
        std::cout << "     failed " << r.suite << ' ' << r.id << " [" << r.params << "] expected " << r.expected
                  << ", computed " << r.computed << '\n';
      if (c.number == 8 && r.id == "symmetrizer_square") std::cout << "     " << r.params << ' ' << r.computed << '\n';
      if (c.number == 10 && r.id == "order_audit") std::cout << "     " << r.params << ": " << r.note << '\n';
    }
    if (!extra.empty()) std::cout << "     " << extra << '\n';
  }
  return failed == 0 ? 0 : 1;
}
