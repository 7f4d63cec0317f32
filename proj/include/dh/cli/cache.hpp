#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dh/wronskian/wronskian.hpp"

namespace dh::cli {

/// Bumped whenever the manifest layout or the enumeration order changes.
inline constexpr unsigned kManifestVersion = 1;

std::string sha256_hex(std::string_view data);

/// Content-addressed store of canonical-basis manifests:
///   DIR/basis-n<N>-d<d>-v<version>.ref   holds the SHA-256 of the object
///   DIR/objects/<sha256>.json            the manifest itself
/// Objects are re-hashed on every read; a mismatch counts as a miss.
class BasisCache {
 public:
  explicit BasisCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  [[nodiscard]] std::optional<std::vector<wronskian::BasisElement>> load(unsigned n, unsigned d,
                                                                         std::ostream* diag = nullptr) const;
  void store(unsigned n, unsigned d, const std::vector<wronskian::BasisElement>& basis) const;

  [[nodiscard]] std::filesystem::path ref_path(unsigned n, unsigned d) const;
  [[nodiscard]] std::filesystem::path object_path(const std::string& hash) const;

 private:
  std::filesystem::path dir_;
};

/// Builds canonical bases on demand, memoized in memory and optionally on disk.
class BasisProvider {
 public:
  explicit BasisProvider(std::optional<std::filesystem::path> cache_dir = std::nullopt, unsigned jobs = 1,
                         std::ostream* diag = nullptr);

  const std::vector<wronskian::BasisElement>& get(unsigned n, unsigned d);

 private:
  std::optional<BasisCache> cache_;
  unsigned jobs_;
  std::ostream* diag_;
  std::mutex mutex_;
  std::map<std::pair<unsigned, unsigned>, std::vector<wronskian::BasisElement>> memo_;
};

}  // namespace dh::cli
