#include "dh/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "dh/cli/cache.hpp"
#include "dh/cli/verify.hpp"
#include "dh/dpoly/text.hpp"
#include "dh/hwv/hwv.hpp"
#include "dh/jets/jets.hpp"
#include "dh/tableaux/tableaux.hpp"
#include "json.hpp"

namespace dh::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  std::optional<std::string> cache;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool timing = false;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string join(const std::vector<unsigned>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

json versioned(json body) {
  json out = {{"schema_version", kSchemaVersion}};
  for (auto& [key, value] : body.items()) out[key] = value;
  return out;
}

unsigned effective_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::optional<std::filesystem::path> cache_dir(const Globals& g) {
  if (!g.cache || g.cache->empty()) return std::nullopt;
  return std::filesystem::path(*g.cache);
}

int cmd_basis(const Globals& g, unsigned n, unsigned d, std::ostream& out, std::ostream& err) {
  if (d == 0) throw UsageError("--d must be at least 1");
  BasisProvider bases(cache_dir(g), effective_jobs(g.jobs), &err);
  const auto& basis = bases.get(n, d);
  if (g.format == "json") {
    out << versioned({{"N", n}, {"d", d}, {"manifest_version", kManifestVersion}, {"basis", wronskian::manifest_json(basis)}})
               .dump(2)
        << '\n';
  } else if (g.format == "csv") {
    out << "index,m,alpha,order,weight,poly\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
      auto j = wronskian::to_json(basis[i]);
      out << i << ',' << csv_field(join(j["m"].get<std::vector<unsigned>>())) << ','
          << csv_field(join(j["alpha"].get<std::vector<unsigned>>())) << ',' << j["order"].dump() << ','
          << j["weight"].dump() << ',' << csv_field(dpoly::to_string(basis[i].poly)) << '\n';
    }
  } else {
    out << "canonical basis N=" << n << " d=" << d << ": " << basis.size() << " elements\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
      auto j = wronskian::to_json(basis[i]);
      out << '[' << i << "] m=(" << join(j["m"].get<std::vector<unsigned>>()) << ") alpha=("
          << join(j["alpha"].get<std::vector<unsigned>>()) << ") order=" << j["order"].dump()
          << " weight=" << j["weight"].dump() << "\n    " << dpoly::to_string(basis[i].poly) << '\n';
    }
  }
  return 0;
}

int cmd_check(const Globals& g, std::optional<std::string> expr, std::optional<std::string> file,
              std::optional<unsigned> n_opt, std::ostream& out, std::ostream& err) {
  if (expr.has_value() == file.has_value()) throw UsageError("check needs exactly one of EXPR or --file");
  std::string text;
  if (file) {
    std::ifstream in(*file);
    if (!in) throw UsageError("cannot read " + *file);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  } else {
    text = *expr;
  }

  dpoly::DiffPoly p;
  try {
    unsigned n = 0;
    if (n_opt) {
      n = *n_opt;
    } else {
      auto probe = dpoly::parse(text, 1u << 20);
      for (const auto& [m, c] : probe.terms()) n = std::max(n, dpoly::max_var(m));
    }
    p = dpoly::parse(text, n);
  } catch (const dpoly::ParseError& e) {
    err << "parse error: " << e.what() << '\n' << "  " << text << '\n' << "  " << std::string(e.position(), ' ') << "^\n";
    return 2;
  }

  auto v = dpoly::is_diff_homogeneous(p);
  if (g.format == "json") {
    json j = {{"input", text}, {"N", p.ambient()}, {"homogeneous", v.homogeneous}};
    j["degree"] = v.degree ? json(*v.degree) : json(nullptr);
    out << versioned(j).dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "input,homogeneous,degree\n"
        << csv_field(text) << ',' << (v.homogeneous ? "yes" : "no") << ','
        << (v.degree ? std::to_string(*v.degree) : "") << '\n';
  } else if (v.homogeneous && v.degree) {
    out << "yes, degree " << *v.degree << '\n';
  } else if (v.homogeneous) {
    out << "yes\n";
  } else {
    out << "no\n";
  }
  return v.homogeneous ? 0 : 1;
}

int cmd_census(const Globals& g, unsigned n, unsigned d, std::optional<unsigned> k, bool all_k, std::ostream& out,
               std::ostream& err) {
  if (d == 0) throw UsageError("--d must be at least 1");
  if (k.has_value() == all_k) throw UsageError("census needs exactly one of --k or --all-k");
  BasisProvider bases(cache_dir(g), effective_jobs(g.jobs), &err);
  const auto& basis = bases.get(n, d);
  std::vector<unsigned> ks;
  if (all_k)
    for (unsigned i = 0; i < d; ++i) ks.push_back(i);
  else
    ks.push_back(*k);
  std::vector<jets::CensusEntry> entries;
  for (unsigned kk : ks) {
    auto part = jets::census(basis, d, kk);
    entries.insert(entries.end(), part.begin(), part.end());
  }
  if (g.format == "json") {
    auto j = jets::census_json(n, d, entries);
    j["vanishing_bound"] = jets::vanishing_bound(n, d);
    out << versioned(j).dump(2) << '\n';
  } else if (g.format == "csv") {
    out << jets::census_csv(n, d, entries);
  } else {
    out << "census N=" << n << " d=" << d << '\n';
    for (unsigned kk : ks) {
      std::size_t total = 0;
      out << "k=" << kk << '\n';
      for (const auto& e : entries)
        if (e.k == kk) {
          out << "  n=" << e.n << ": " << e.count << '\n';
          total += e.count;
        }
      out << "  total: " << total << '\n';
    }
  }
  return 0;
}

int cmd_tableaux(const Globals& g, unsigned d, std::optional<unsigned> n, std::ostream& out) {
  if (d == 0) throw UsageError("--d must be at least 1");
  if (n && *n == 0) throw UsageError("--n must be at least 1");
  auto shapes = tableaux::partitions_of(d);
  mpz_class sum_f2 = 0, sum_fd = 0;
  json rows = json::array();
  if (g.format == "csv") out << "lambda,f" << (n ? ",d_n" : "") << '\n';
  else if (g.format == "text") out << "partitions of " << d << (n ? " (d_lambda with n=" + std::to_string(*n) + ")" : "") << '\n';
  for (const auto& l : shapes) {
    mpz_class f = tableaux::count_standard(l);
    sum_f2 += f * f;
    std::optional<mpz_class> dn;
    if (n) {
      dn = tableaux::count_semistandard(l, *n);
      sum_fd += f * *dn;
    }
    if (g.format == "json") {
      json row = {{"lambda", l.parts()}, {"f", f.get_str()}};
      if (dn) row["d_n"] = dn->get_str();
      rows.push_back(row);
    } else if (g.format == "csv") {
      out << csv_field(l.to_string()) << ',' << f.get_str() << (dn ? "," + dn->get_str() : "") << '\n';
    } else {
      out << "  " << l.to_string() << "  f=" << f.get_str() << (dn ? "  d_n=" + dn->get_str() : "") << '\n';
    }
  }
  if (g.format == "json") {
    json j = {{"d", d}, {"partitions", rows}, {"sum_f_squared", sum_f2.get_str()}};
    if (n) {
      j["n"] = *n;
      j["sum_f_times_d_n"] = sum_fd.get_str();
    }
    out << versioned(j).dump(2) << '\n';
  } else if (g.format == "text") {
    out << "sum f^2 = " << sum_f2.get_str() << '\n';
    if (n) out << "sum f*d_n = " << sum_fd.get_str() << '\n';
  }
  return 0;
}

int cmd_kernel(const Globals& g, unsigned d, std::optional<unsigned> k_opt, std::ostream& out) {
  if (d == 0) throw UsageError("--d must be at least 1");
  const unsigned k = k_opt.value_or(d - 1);
  auto full = hwv::kernel_dim_full(d, k);
  json rows = json::array();
  if (g.format == "csv") out << "d,k,lambda,f,kernel_dim\n";
  else if (g.format == "text") out << "d=" << d << " k=" << k << "\n  full kernel: " << full << '\n';
  for (const auto& l : tableaux::partitions_of(d)) {
    auto iso = hwv::kernel_dim_isotypic(l, k);
    auto f = tableaux::count_standard(l).get_str();
    if (g.format == "json") rows.push_back({{"lambda", l.parts()}, {"f", f}, {"kernel_dim", iso}});
    else if (g.format == "csv") out << d << ',' << k << ',' << csv_field(l.to_string()) << ',' << f << ',' << iso << '\n';
    else out << "  " << l.to_string() << ": " << iso << " (f=" << f << ")\n";
  }
  if (g.format == "json") out << versioned({{"d", d}, {"k", k}, {"kernel_dim", full}, {"isotypic", rows}}).dump(2) << '\n';
  else if (g.format == "csv") out << d << ',' << k << ",full,," << full << '\n';
  return 0;
}

int cmd_verify(const Globals& g, const std::string& suite, const SuiteCaps& caps, std::ostream& out,
               std::ostream& err) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw UsageError("unknown suite: " + suite);
  const unsigned jobs = effective_jobs(g.jobs);
  BasisProvider bases(cache_dir(g), jobs, &err);
  auto results = run_checks(build_suite(suite, caps, g.seed, bases), jobs);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed;
  const bool ok = passed == results.size();

  if (g.format == "json") {
    json checks = json::array();
    for (const auto& r : results) checks.push_back(r.to_json());
    out << versioned({{"suite", suite},
                      {"seed", g.seed},
                      {"checks", checks},
                      {"passed", passed},
                      {"failed", results.size() - passed},
                      {"verdict", ok ? "pass" : "fail"}})
               .dump(2)
        << '\n';
  } else if (g.format == "csv") {
    out << "suite,id,params,expected,computed,verdict,note\n";
    for (const auto& r : results)
      out << csv_field(r.suite) << ',' << csv_field(r.id) << ',' << csv_field(r.params) << ',' << csv_field(r.expected)
          << ',' << csv_field(r.computed) << ',' << (r.passed ? "pass" : "fail") << ',' << csv_field(r.note) << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.suite << ' ' << r.id << " [" << r.params << "] expected " << r.expected
          << ", computed " << r.computed << '\n';
      if (!r.note.empty()) out << "     " << r.note << '\n';
    }
    out << "suite " << suite << " (seed " << g.seed << "): " << passed << '/' << results.size() << " passed\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differentially homogeneous polynomials: bases, checks, censuses", "dh"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache", g.cache, "Basis cache directory")->envname("DH_CACHE");
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--jobs", g.jobs, "Worker threads (0 = hardware concurrency)");
  app.add_flag("--timing", g.timing, "Print wall time to stderr");

  unsigned n = 0, d = 0;
  std::optional<unsigned> n_opt, k_opt;
  std::optional<std::string> expr, file;
  bool all_k = false;
  std::string suite;
  SuiteCaps caps;

  auto* basis = app.add_subcommand("basis", "Canonical Wronskian basis of V_d");
  basis->add_option("--n", n, "N (variables X_0..X_N)")->required();
  basis->add_option("--d", d, "Degree")->required();

  auto* check = app.add_subcommand("check", "Differential homogeneity of an expression");
  check->add_option("expr", expr, "Expression such as x0*x1[1]-x1*x0[1]");
  check->add_option("--file", file, "Read the expression from a file");
  check->add_option("--n", n_opt, "Ambient N (default: largest index used)");

  auto* census = app.add_subcommand("census", "Weight census of order-k jet differentials");
  census->add_option("--n", n, "N")->required();
  census->add_option("--d", d, "Degree")->required();
  census->add_option("--k", k_opt, "Jet order");
  census->add_flag("--all-k", all_k, "Sweep k = 0..d-1");

  auto* tab = app.add_subcommand("tableaux", "Standard and semistandard tableau counts");
  tab->add_option("--d", d, "Size")->required();
  tab->add_option("--n", n_opt, "Entry bound for semistandard counts");

  auto* kernel = app.add_subcommand("kernel", "Common kernel of J^(1..d) on the tensor power");
  kernel->add_option("--d", d, "Tensor power")->required();
  kernel->add_option("--k", k_opt, "Local dimension k+1 (default d-1)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "all, basis, rsk, kernel, pde, appendixA, hwv or jets")->required();
  verify->add_option("--max-d", caps.max_d, "Degree cap");
  verify->add_option("--max-n", caps.max_n, "N cap");
  verify->add_option("--max-k", caps.max_k, "k cap");

  for (auto* sub : {basis, check, census, tab, kernel, verify}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (*basis) code = cmd_basis(g, n, d, out, err);
    else if (*check) code = cmd_check(g, expr, file, n_opt, out, err);
    else if (*census) code = cmd_census(g, n, d, k_opt, all_k, out, err);
    else if (*tab) code = cmd_tableaux(g, d, n_opt, out);
    else if (*kernel) code = cmd_kernel(g, d, k_opt, out);
    else code = cmd_verify(g, suite, caps, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
  if (g.timing) {
    std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
    err << "wall time: " << wall.count() << " s\n";
  }
  return code;
}

}  // namespace dh::cli
