#pragma once

#include <cstdint>

namespace nil {

/// Enumeration and computation guards. Every exhaustive routine checks the
/// relevant field and throws SizeError when its input is too large.
struct Limits {
  int subset_search = 24;      // 2^n subset scans over vertices/variables
  int exact_coloring = 16;     // backtracking chromatic number
  int graph_enumeration = 7;   // all graphs on n vertices
  int tree_enumeration = 12;   // all trees on n vertices
  int hochster_vars = 20;      // Hochster subset loop
  int taylor_generators = 12;  // 2^g Taylor basis
  std::int64_t face_budget = std::int64_t{1} << 24;
};

/// Process-wide defaults. The CLI overrides these from --max-n / --max-gens.
Limits& default_limits();

}  // namespace nil
