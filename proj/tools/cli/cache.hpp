#pragma once

// On-disk cache of verified tables. Each entry is the module JSON schema
// wrapped with a CRC-32 of its serialized form; loads re-check the checksum
// and the row sums before the entry is trusted.

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ewb/exactnum.hpp"
#include "ewb/serialize.hpp"
#include "ewb/twosided.hpp"

namespace ewb::cli {

inline constexpr const char* kCacheEnvVar = "EULERIAN_WORKBENCH_CACHE";

enum class TableKind { eulerian, twosided };

/// The flag wins over the environment variable; nullopt when neither is set.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag);

class TableCache {
 public:
  /// Rejected entries are reported on `warnings`.
  TableCache(std::filesystem::path dir, std::ostream& warnings);

  std::filesystem::path path_for(TableKind kind, int n) const;

  std::optional<std::vector<Count>> load_eulerian(int n) const;
  std::optional<TwoSidedTable> load_two_sided(int n) const;

  void store_eulerian(int n, std::span<const Count> row) const;
  void store_two_sided(const TwoSidedTable& table) const;

 private:
  std::optional<Json> load_payload(TableKind kind, int n) const;
  void store_payload(TableKind kind, int n, const Json& payload) const;
  void reject(const std::filesystem::path& path, const std::string& why) const;

  std::filesystem::path dir_;
  std::ostream* warnings_;
};

}  // namespace ewb::cli
