#include "torusdom/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "torusdom/error.hpp"

#ifndef TORUSDOM_VERSION
#define TORUSDOM_VERSION "0.0.0"
#endif

namespace torusdom {

const char* tool_version() { return TORUSDOM_VERSION; }

std::string certificate_digest(const VertexSet& set) {
  uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](int value) {
    for (int b = 0; b < 4; ++b) {
      h ^= static_cast<uint64_t>((static_cast<uint32_t>(value) >> (8 * b)) & 0xffu);
      h *= 0x100000001b3ull;
    }
  };
  mix(set.dims().n);
  mix(set.dims().m);
  for (int s : set.slots()) mix(s);
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

ResultCache::ResultCache(std::filesystem::path directory) : file_(std::move(directory) / "results.json") {
  std::ifstream in(file_);
  if (!in) return;
  try {
    auto doc = nlohmann::json::parse(in);
    for (const auto& [k, v] : doc.at("entries").items()) {
      entries_[k] = {v.at("value").get<int>(), v.at("digest").get<std::string>(),
                     v.at("tool_version").get<std::string>()};
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, "unreadable cache file " + file_.string() + ": " + e.what());
  }
}

std::filesystem::path ResultCache::default_directory() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    return std::filesystem::path(xdg) / "torusdom";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".cache" / "torusdom";
  }
  return std::filesystem::path(".torusdom-cache");
}

std::string ResultCache::key(int n, int m, DominationKind kind, const std::string& method) {
  return std::to_string(n) + "," + std::to_string(m) + "," + to_string(kind) + "," + method;
}

std::optional<CacheEntry> ResultCache::lookup(int n, int m, DominationKind kind, const std::string& method) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find(key(n, m, kind, method));
  if (it == entries_.end() || it->second.tool_version != tool_version()) return std::nullopt;
  return it->second;
}

void ResultCache::store(int n, int m, DominationKind kind, const std::string& method, CacheEntry entry) {
  std::lock_guard<std::mutex> lock(mutex_);
  entries_[key(n, m, kind, method)] = std::move(entry);
}

std::map<std::string, CacheEntry> ResultCache::current_entries() const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::map<std::string, CacheEntry> out;
  for (const auto& [k, v] : entries_) {
    if (v.tool_version == tool_version()) out.emplace(k, v);
  }
  return out;
}

void ResultCache::save() const {
  std::lock_guard<std::mutex> lock(mutex_);
  nlohmann::json doc;
  doc["entries"] = nlohmann::json::object();
  for (const auto& [k, v] : entries_) {
    doc["entries"][k] = {{"value", v.value}, {"digest", v.digest}, {"tool_version", v.tool_version}};
  }
  std::error_code ec;
  std::filesystem::create_directories(file_.parent_path(), ec);
  const auto tmp = file_.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write cache file " + tmp);
    out << doc.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, file_, ec);
  if (ec) throw Error(ErrorCode::InvalidArgument, "cannot replace cache file " + file_.string() + ": " + ec.message());
}

}  // namespace torusdom
