#include "nil/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "nil/enumerate.hpp"
#include "nil/error.hpp"
#include "nil/io.hpp"

namespace nil {

std::string ideal_kind_name(const std::string& kind) {
  if (kind == "ni" || kind == "edge") return kind;
  if (kind.rfind("path", 0) == 0) {
    std::string digits = kind.substr(kind[4] == ':' ? 5 : 4);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      return "path" + std::to_string(std::stoi(digits));
    }
  }
  throw ParameterError("unknown ideal kind '" + kind + "' (expected ni, edge or path:t)");
}

MonomialIdeal graph_ideal(const Graph& g, const std::string& kind) {
  std::string name = ideal_kind_name(kind);
  if (name == "ni") return closed_neighborhood_ideal(g);
  if (name == "edge") return edge_ideal(g);
  return path_ideal(g, std::stoi(name.substr(4)));
}

BettiCache::BettiCache(std::string path) : path_(std::move(path)) {
  if (path_.empty()) return;
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    // A torn or foreign line is skipped rather than trusted.
    if (j.is_discarded() || !j.is_object() || j.value("v", 0) != kCacheVersion) continue;
    try {
      Record r;
      r.form = j.at("form").get<std::string>();
      r.kind = j.at("kind").get<std::string>();
      r.p = j.at("p").get<std::uint32_t>();
      r.table = betti_from_json(j.at("table"), CanonicalForm::parse(r.form).n);
      entries_[key(r.form, r.kind, r.p)] = std::move(r);
    } catch (const std::exception&) {
      continue;
    }
  }
}

std::string BettiCache::default_path() {
  const char* dir = std::getenv("NIL_CACHE_DIR");
  std::filesystem::path base = dir != nullptr && *dir != '\0' ? dir : ".nil-cache";
  return (base / "betti.jsonl").string();
}

std::string BettiCache::key(const std::string& form, const std::string& kind, std::uint32_t p) {
  return form + "|" + kind + "|" + std::to_string(p);
}

std::optional<BettiTable> BettiCache::lookup(const Graph& g, const std::string& kind,
                                             std::uint32_t p) {
  if (g.order() > kMaxCanonicalVertices) return std::nullopt;
  std::string k = key(canonical_form(g).to_string(), ideal_kind_name(kind), p);
  std::lock_guard lock(mutex_);
  auto it = entries_.find(k);
  if (it == entries_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second.table;
}

void BettiCache::store(const Graph& g, const std::string& kind, std::uint32_t p,
                       const BettiTable& table) {
  if (g.order() > kMaxCanonicalVertices) return;
  Record r{canonical_form(g).to_string(), ideal_kind_name(kind), p, table};
  std::string k = key(r.form, r.kind, r.p);
  json line = {{"v", kCacheVersion}, {"form", r.form}, {"kind", r.kind}, {"p", r.p},
               {"table", betti_to_json(table)}};
  std::lock_guard lock(mutex_);
  if (entries_.count(k) != 0) return;
  if (!path_.empty()) {
    std::filesystem::path file(path_);
    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("cannot append to cache '" + path_ + "'");
    out << line.dump() << '\n';
  }
  entries_[k] = std::move(r);
}

BettiTable BettiCache::table_for(const Graph& g, const std::string& kind, std::uint32_t p,
                                 const Limits& limits) {
  if (auto hit = lookup(g, kind, p)) return *hit;
  HochsterOptions options;
  options.field_char = p;
  BettiTable table = betti_table_hochster(graph_ideal(g, kind), options, limits);
  store(g, kind, p, table);
  return table;
}

std::vector<BettiCache::Record> BettiCache::records() const {
  std::lock_guard lock(mutex_);
  std::vector<Record> out;
  for (const auto& [k, r] : entries_) out.push_back(r);
  return out;
}

std::size_t BettiCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

AuditResult audit_cache(const BettiCache& cache, double fraction, std::uint64_t seed,
                        const Limits& limits) {
  std::vector<BettiCache::Record> all = cache.records();
  AuditResult result;
  if (all.empty()) return result;
  std::size_t want = std::max<std::size_t>(1, static_cast<std::size_t>(fraction * all.size() + 0.5));
  std::vector<BettiCache::Record> sample;
  std::sample(all.begin(), all.end(), std::back_inserter(sample), std::min(want, all.size()),
              std::mt19937_64(seed));
  for (const auto& r : sample) {
    Graph g = from_canonical(CanonicalForm::parse(r.form));
    HochsterOptions options;
    options.field_char = r.p;
    BettiTable fresh = betti_table_hochster(graph_ideal(g, r.kind), options, limits);
    ++result.sampled;
    if (!(fresh == r.table)) {
      ++result.mismatches;
      result.mismatched_keys.push_back(r.form + "|" + r.kind + "|" + std::to_string(r.p));
    }
  }
  return result;
}

}  // namespace nil
