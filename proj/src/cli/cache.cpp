#include "dh/cli/cache.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace dh::cli {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 computation failed");
  std::ostringstream out;
  for (unsigned i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

fs::path BasisCache::ref_path(unsigned n, unsigned d) const {
  return dir_ / ("basis-n" + std::to_string(n) + "-d" + std::to_string(d) + "-v" + std::to_string(kManifestVersion) + ".ref");
}

fs::path BasisCache::object_path(const std::string& hash) const { return dir_ / "objects" / (hash + ".json"); }

namespace {

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_atomically(const fs::path& p, const std::string& content) {
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << content;
  }
  fs::rename(tmp, p);
}

}  // namespace

std::optional<std::vector<wronskian::BasisElement>> BasisCache::load(unsigned n, unsigned d, std::ostream* diag) const {
  auto ref = read_file(ref_path(n, d));
  if (!ref) return std::nullopt;
  std::string hash = *ref;
  while (!hash.empty() && (hash.back() == '\n' || hash.back() == ' ')) hash.pop_back();
  auto miss = [&](const std::string& why) -> std::optional<std::vector<wronskian::BasisElement>> {
    if (diag) *diag << "cache: ignoring entry for N=" << n << " d=" << d << ": " << why << '\n';
    return std::nullopt;
  };
  auto object = read_file(object_path(hash));
  if (!object) return miss("object missing");
  if (sha256_hex(*object) != hash) return miss("content hash mismatch");
  try {
    auto basis = wronskian::manifest_from_json(nlohmann::json::parse(*object));
    std::size_t expected = 1;
    for (unsigned i = 0; i < d; ++i) expected *= n + 1;
    if (basis.size() != expected) return miss("wrong element count");
    for (const auto& e : basis)
      if (e.datum.m.size() != n + 1 || e.datum.degree() != d) return miss("datum does not match the key");
    return basis;
  } catch (const std::exception& ex) {
    return miss(ex.what());
  }
}

void BasisCache::store(unsigned n, unsigned d, const std::vector<wronskian::BasisElement>& basis) const {
  std::string content = wronskian::manifest_json(basis).dump();
  std::string hash = sha256_hex(content);
  fs::create_directories(dir_ / "objects");
  write_atomically(object_path(hash), content);
  write_atomically(ref_path(n, d), hash + "\n");
}

BasisProvider::BasisProvider(std::optional<fs::path> cache_dir, unsigned jobs, std::ostream* diag)
    : jobs_(jobs), diag_(diag) {
  if (cache_dir) cache_.emplace(*cache_dir);
}

const std::vector<wronskian::BasisElement>& BasisProvider::get(unsigned n, unsigned d) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find({n, d}); it != memo_.end()) return it->second;
  }
  std::optional<std::vector<wronskian::BasisElement>> basis;
  if (cache_) basis = cache_->load(n, d, diag_);
  bool fresh = !basis;
  if (fresh) basis = wronskian::enumerate_canonical_basis(n, d, jobs_);
  std::lock_guard lock(mutex_);
  auto [it, inserted] = memo_.emplace(std::make_pair(n, d), std::move(*basis));
  if (inserted && fresh && cache_) {
    try {
      cache_->store(n, d, it->second);
    } catch (const std::exception& ex) {
      if (diag_) *diag_ << "cache: could not store N=" << n << " d=" << d << ": " << ex.what() << '\n';
    }
  }
  return it->second;
}

}  // namespace dh::cli
