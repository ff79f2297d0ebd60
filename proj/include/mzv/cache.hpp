#pragma once
/// @file cache.hpp
/// @brief Persistent memoization of expensive atom evaluations.
///
/// Entries are keyed by the atom's canonical text plus the evaluation-config
/// fingerprint, so a hit is a recorded replay of the identical computation.
/// Storage is a single JSON-lines file (human-inspectable, diff-friendly),
/// append-mostly in spirit but compacted on load and rewritten atomically
/// (write-temp-then-rename) on every store.  A corrupt file is ignored with a
/// warning: lookups then miss, and persistence is disabled for the process so
/// the evidence is never clobbered.  One writer per process; in-process reads
/// are read-your-writes; cross-process locking is not provided.
///
/// Truncated results (budget stops with a coarse bound) are never stored:
/// replaying them could freeze a low-confidence value that a clean rerun
/// would improve.

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "mzv/config.hpp"

namespace mzv {

struct CacheEntry {
  std::string key;                 ///< canonical atom text + "|" + fingerprint
  double value = 0.0;
  double err = 0.0;                ///< certified absolute error bound
  std::string config_fingerprint;  ///< EvalConfig::fingerprint() at store time
  std::string engine_version;      ///< kEngineVersion at store time
};

/// Cache key for an atom's canonical text under a config.  Injective over
/// distinct (text, fingerprint) pairs because neither part contains '|' + '|'.
std::string cache_key(const std::string& atom_text, const EvalConfig& cfg);

class CacheStore {
 public:
  /// Process-wide store, loaded lazily from the MZV_CACHE path (default
  /// ./mzv-cache.jsonl).
  static CacheStore& instance();

  std::optional<CacheEntry> lookup(const std::string& key) const;

  /// Insert or replace (an entry with a smaller err wins), then persist.
  void store(const CacheEntry& entry);

  const std::string& path() const { return path_; }

  /// Drop in-memory state and re-read the file (used by tests).
  void reload();

  CacheStore(const CacheStore&) = delete;
  CacheStore& operator=(const CacheStore&) = delete;

 private:
  CacheStore();
  void load_locked();
  void persist_locked() const;

  std::string path_;
  bool persist_ = true;  ///< false after a corrupt load: memory-only mode
  mutable std::mutex mu_;
  std::map<std::string, CacheEntry> entries_;
};

}  // namespace mzv
