/// @file cache.cpp
/// @brief JSON-lines cache store: load-compact, atomic rewrite, corrupt-file
///        quarantine.

#include "mzv/cache.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

using nlohmann::json;

std::string default_path() {
  const char* env = std::getenv("MZV_CACHE");
  return (env && *env) ? std::string(env) : std::string("./mzv-cache.jsonl");
}

json entry_to_json(const CacheEntry& e) {
  return json{{"key", e.key},
              {"value", e.value},
              {"err", e.err},
              {"fingerprint", e.config_fingerprint},
              {"engine", e.engine_version}};
}

/// Strict parse of one cache line; returns false on any shape violation.
bool entry_from_json(const std::string& line, CacheEntry& out) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (!j.is_object()) return false;
  if (!j.contains("key") || !j["key"].is_string()) return false;
  if (!j.contains("value") || !j["value"].is_number()) return false;
  if (!j.contains("err") || !j["err"].is_number()) return false;
  if (!j.contains("fingerprint") || !j["fingerprint"].is_string()) return false;
  if (!j.contains("engine") || !j["engine"].is_string()) return false;
  out.key = j["key"].get<std::string>();
  out.value = j["value"].get<double>();
  out.err = j["err"].get<double>();
  out.config_fingerprint = j["fingerprint"].get<std::string>();
  out.engine_version = j["engine"].get<std::string>();
  return std::isfinite(out.value) && std::isfinite(out.err) && out.err >= 0.0 &&
         !out.key.empty();
}

}  // namespace

std::string cache_key(const std::string& atom_text, const EvalConfig& cfg) {
  return atom_text + "||" + cfg.fingerprint();
}

CacheStore& CacheStore::instance() {
  static CacheStore store;
  return store;
}

CacheStore::CacheStore() : path_(default_path()) {
  std::lock_guard<std::mutex> lock(mu_);
  load_locked();
}

void CacheStore::reload() {
  std::lock_guard<std::mutex> lock(mu_);
  entries_.clear();
  persist_ = true;
  path_ = default_path();
  load_locked();
}

void CacheStore::load_locked() {
  std::ifstream in(path_);
  if (!in.is_open()) return;  // cold cache: nothing to load
  std::string line;
  std::map<std::string, CacheEntry> loaded;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CacheEntry e;
    if (!entry_from_json(line, e)) {
      std::cerr << "mzv: warning: corrupt cache file '" << path_
                << "', ignoring it (persistence disabled this run)\n";
      entries_.clear();
      persist_ = false;
      return;
    }
    // compact: last write wins unless an earlier entry carries a tighter bound
    auto it = loaded.find(e.key);
    if (it == loaded.end() || e.err <= it->second.err) loaded[e.key] = e;
  }
  entries_ = std::move(loaded);
}

std::optional<CacheEntry> CacheStore::lookup(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void CacheStore::store(const CacheEntry& entry) {
  if (entry.key.empty() || !std::isfinite(entry.value) ||
      !std::isfinite(entry.err) || entry.err < 0.0)
    fail(Errc::internal, "cache store: malformed entry");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(entry.key);
  if (it != entries_.end() && it->second.err < entry.err) return;  // keep best
  entries_[entry.key] = entry;
  if (persist_) persist_locked();
}

void CacheStore::persist_locked() const {
  const std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out.is_open()) {
      std::cerr << "mzv: warning: cannot write cache temp file '" << tmp
                << "'\n";
      return;
    }
    for (const auto& [key, e] : entries_) out << entry_to_json(e).dump() << "\n";
  }
  if (std::rename(tmp.c_str(), path_.c_str()) != 0) {
    std::cerr << "mzv: warning: cannot rename cache temp file onto '" << path_
              << "'\n";
    std::remove(tmp.c_str());
  }
}

}  // namespace mzv
