#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nil/graph.hpp"

namespace nil {

__extension__ using CodeBits = unsigned __int128;

/// Isomorphism-class invariant of a graph on at most 16 vertices.
///
/// The adjacency bits are read column by column, (0,1), (0,2), (1,2), (0,3),
/// ..., most significant first; the form is the minimum of that bit string
/// over the vertex orderings that list refined colour classes in order.
struct CanonicalForm {
  int n = 0;
  CodeBits bits = 0;

  auto operator<=>(const CanonicalForm&) const = default;

  /// "n:hex", e.g. "4:2d".
  std::string to_string() const;
  static CanonicalForm parse(const std::string& text);
};

inline constexpr int kMaxCanonicalVertices = 16;

/// Search restricted to orderings compatible with a colour refinement of the
/// vertices, pruning on the code prefix.
CanonicalForm canonical_form(const Graph& g);

/// Minimum over all n! orderings (n <= 8). A different code from
/// canonical_form, but it induces the same partition into classes.
CanonicalForm canonical_form_brute(const Graph& g);

/// The graph whose identity-ordering code is `form` (the canonical
/// representative).
Graph from_canonical(const CanonicalForm& form);

using GraphVisitor = std::function<void(const Graph&)>;

/// Every labeled tree on n vertices, by Pruefer decoding (n^(n-2) of them).
void for_each_labeled_tree(int n, const GraphVisitor& visit,
                           const Limits& limits = default_limits());

/// Every labeled graph on n vertices, optionally only the connected ones.
void for_each_labeled_graph(int n, bool connected_only, const GraphVisitor& visit,
                            const Limits& limits = default_limits());

/// One canonical representative per isomorphism class, sorted by form.
std::vector<Graph> unlabeled_trees(int n, const Limits& limits = default_limits());
std::vector<Graph> unlabeled_forests(int n, const Limits& limits = default_limits());
std::vector<Graph> unlabeled_unicyclic(int n, const Limits& limits = default_limits());
std::vector<Graph> unlabeled_graphs(int n, bool connected_only,
                                    const Limits& limits = default_limits());

/// Convenience wrappers with the dedup switch; labeled output is
/// materialized, so keep n small.
std::vector<Graph> enumerate_trees(int n, bool dedup, const Limits& limits = default_limits());
std::vector<Graph> enumerate_graphs(int n, bool connected_only, bool dedup,
                                    const Limits& limits = default_limits());

}  // namespace nil
