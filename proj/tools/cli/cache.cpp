#include "cli/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <boost/crc.hpp>

#include "ewb/serialize.hpp"

namespace ewb::cli {

namespace {

const char* kind_name(TableKind kind) { return kind == TableKind::eulerian ? "eulerian" : "twosided"; }

std::string checksum(const Json& payload) {
  const std::string bytes = payload.dump();
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  std::ostringstream out;
  out << "crc32:" << std::hex << std::setw(8) << std::setfill('0') << crc.checksum();
  return out.str();
}

}  // namespace

std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return std::filesystem::path(flag);
  if (const char* env = std::getenv(kCacheEnvVar); env != nullptr && *env != '\0') return std::filesystem::path(env);
  return std::nullopt;
}

TableCache::TableCache(std::filesystem::path dir, std::ostream& warnings)
    : dir_(std::move(dir)), warnings_(&warnings) {}

std::filesystem::path TableCache::path_for(TableKind kind, int n) const {
  return dir_ / (std::string(kind_name(kind)) + "-n" + std::to_string(n) + ".json");
}

void TableCache::reject(const std::filesystem::path& path, const std::string& why) const {
  *warnings_ << "warning: ignoring cache entry " << path.string() << ": " << why << "; recomputing\n";
}

std::optional<Json> TableCache::load_payload(TableKind kind, int n) const {
  const auto path = path_for(kind, n);
  std::ifstream in(path);
  if (!in) return std::nullopt;

  const Json doc = Json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("payload") || !doc.contains("checksum")) {
    reject(path, "unreadable");
    return std::nullopt;
  }
  if (doc.value("kind", "") != kind_name(kind) || doc.value("n", 0) != n) {
    reject(path, "kind or n does not match the file name");
    return std::nullopt;
  }
  if (!doc.at("checksum").is_string() || doc.at("checksum").get<std::string>() != checksum(doc.at("payload"))) {
    reject(path, "checksum mismatch");
    return std::nullopt;
  }
  return std::optional<Json>(std::in_place, doc.at("payload"));
}

std::optional<std::vector<Count>> TableCache::load_eulerian(int n) const {
  auto payload = load_payload(TableKind::eulerian, n);
  if (!payload) return std::nullopt;
  const auto path = path_for(TableKind::eulerian, n);
  try {
    auto row = eulerian_row_from_json(*payload);
    Count sum = 0;
    for (const auto& v : row) sum += v;
    if (row.size() != static_cast<std::size_t>(n) || sum != factorial(static_cast<unsigned>(n))) {
      reject(path, "row sum differs from n!");
      return std::nullopt;
    }
    return row;
  } catch (const std::exception& e) {
    reject(path, e.what());
    return std::nullopt;
  }
}

std::optional<TwoSidedTable> TableCache::load_two_sided(int n) const {
  auto payload = load_payload(TableKind::twosided, n);
  if (!payload) return std::nullopt;
  const auto path = path_for(TableKind::twosided, n);
  try {
    auto table = two_sided_from_json(*payload);
    bool ok = table.n() == n && table.total() == factorial(static_cast<unsigned>(n));
    for (int i = 1; ok && i <= n; ++i) ok = table.row_sum(i) == table.column_sum(i);
    if (!ok) {
      reject(path, "row sums inconsistent with n!");
      return std::nullopt;
    }
    return table;
  } catch (const std::exception& e) {
    reject(path, e.what());
    return std::nullopt;
  }
}

void TableCache::store_payload(TableKind kind, int n, const Json& payload) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto path = path_for(kind, n);
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  const Json doc{{"kind", kind_name(kind)}, {"n", n}, {"payload", payload}, {"checksum", checksum(payload)}};
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump() << '\n';
    if (!out) {
      *warnings_ << "warning: could not write cache entry " << path.string() << '\n';
      return;
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) *warnings_ << "warning: could not write cache entry " << path.string() << ": " << ec.message() << '\n';
}

void TableCache::store_eulerian(int n, std::span<const Count> row) const {
  store_payload(TableKind::eulerian, n, eulerian_row_json(n, row, std::nullopt));
}

void TableCache::store_two_sided(const TwoSidedTable& table) const {
  store_payload(TableKind::twosided, table.n(), two_sided_json(table, std::nullopt));
}

}  // namespace ewb::cli
