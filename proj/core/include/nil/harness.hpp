#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nil/cache.hpp"
#include "nil/io.hpp"
#include "nil/limits.hpp"

namespace nil {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct Failure {
  std::string graph;  // graph encoding, or "ideal:<json>" for ideal cases
  std::string tag;    // which check produced the case
  json expected;
  json actual;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  json params = json::object();
  std::int64_t cases = 0;
  std::vector<Failure> failures;
  std::vector<json> findings;
  std::uint64_t seed = kDefaultSeed;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
  /// Report schema; `with_time = false` drops elapsed_ms, which is the only
  /// field that differs between identical runs.
  json to_json(bool with_time = true) const;
};

struct SuiteOptions {
  std::optional<int> n_max;  // suite default when unset
  std::uint32_t p = 2;
  /// Second field for cross-checks; disagreements become findings.
  std::optional<std::uint32_t> cross_p;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
  int samples = 0;  // sampled cases for random suites; 0 means the default
  /// Lets n_max exceed the suite ceiling; the enumeration limits still apply.
  bool lift_ceiling = false;
  BettiCache* cache = nullptr;
  Limits limits = default_limits();
};

/// One unit of work: a tag naming the check and the encoded input.
struct CaseInput {
  std::string tag;
  std::string encoding;
};

struct CaseOutcome {
  std::vector<Failure> failures;
  std::vector<json> findings;
  json data;  // per-case numbers used by suite summaries
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::optional<int> default_n;
  std::optional<int> max_n;
};

const std::vector<SuiteInfo>& suite_catalog();
std::vector<std::string> suite_names();

/// Throws ParameterError for an unknown suite and SizeError when n_max
/// exceeds the suite's ceiling.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// Re-runs a single recorded case.
CaseOutcome replay_case(const std::string& suite, const CaseInput& input,
                        const SuiteOptions& options = {});

/// Random squarefree ideal with 1..max_vars variables and up to max_gens
/// nonconstant generators, fully determined by `seed`.
MonomialIdeal random_ideal(std::uint64_t seed, int max_vars, int max_gens);

}  // namespace nil
