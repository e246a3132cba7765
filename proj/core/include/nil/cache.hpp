#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "nil/betti.hpp"
#include "nil/graph.hpp"

namespace nil {

inline constexpr int kCacheVersion = 1;

/// Which ideal of a graph a table belongs to: "ni", "edge" or "path<t>".
std::string ideal_kind_name(const std::string& kind);

MonomialIdeal graph_ideal(const Graph& g, const std::string& kind);

/// Append-only JSON-lines store of Betti tables keyed by canonical form,
/// ideal kind and field. Isomorphic graphs share one record.
///
/// An empty path keeps everything in memory. Lookups and appends are
/// serialized through one mutex.
class BettiCache {
 public:
  struct Record {
    std::string form;  // CanonicalForm::to_string()
    std::string kind;
    std::uint32_t p = 2;
    BettiTable table;
  };

  explicit BettiCache(std::string path = {});

  /// Directory from NIL_CACHE_DIR, else ".nil-cache"; the file is
  /// betti.jsonl inside it.
  static std::string default_path();

  std::optional<BettiTable> lookup(const Graph& g, const std::string& kind, std::uint32_t p);
  void store(const Graph& g, const std::string& kind, std::uint32_t p, const BettiTable& table);

  /// Cached table or a fresh Hochster computation, which is then stored.
  BettiTable table_for(const Graph& g, const std::string& kind, std::uint32_t p,
                       const Limits& limits = default_limits());

  std::vector<Record> records() const;
  std::size_t size() const;
  const std::string& path() const { return path_; }
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

 private:
  static std::string key(const std::string& form, const std::string& kind, std::uint32_t p);

  std::string path_;
  mutable std::mutex mutex_;
  std::map<std::string, Record> entries_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

struct AuditResult {
  std::size_t sampled = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> mismatched_keys;
};

/// Recomputes a seeded sample of `fraction` of the records (at least one
/// when the cache is nonempty) and compares them with the stored tables.
AuditResult audit_cache(const BettiCache& cache, double fraction, std::uint64_t seed,
                        const Limits& limits = default_limits());

}  // namespace nil
