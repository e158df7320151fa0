#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "torusdom/torus.hpp"
#include "torusdom/validate.hpp"

namespace torusdom {

/// Version stamped into cache entries; entries from other versions are
/// ignored on lookup.
const char* tool_version();

/// FNV-1a 64 over the sorted slot list and dimensions, as 16 hex digits.
std::string certificate_digest(const VertexSet& set);

struct CacheEntry {
  int value = 0;
  std::string digest;
  std::string tool_version;

  friend bool operator==(const CacheEntry&, const CacheEntry&) = default;
};

/// Solver results keyed "n,m,kind,method", kept in one JSON file
/// (results.json) under the cache directory.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path directory);

  /// $XDG_CACHE_HOME/torusdom, else ~/.cache/torusdom, else ./.torusdom-cache.
  static std::filesystem::path default_directory();
  static std::string key(int n, int m, DominationKind kind, const std::string& method);

  const std::filesystem::path& file() const { return file_; }

  std::optional<CacheEntry> lookup(int n, int m, DominationKind kind, const std::string& method) const;
  void store(int n, int m, DominationKind kind, const std::string& method, CacheEntry entry);
  /// Entries of the current tool version.
  std::map<std::string, CacheEntry> current_entries() const;

  /// Writes through a temporary file and rename.
  void save() const;

 private:
  std::filesystem::path file_;
  std::map<std::string, CacheEntry> entries_;
  mutable std::mutex mutex_;
};

}  // namespace torusdom
