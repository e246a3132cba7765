#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nil/limits.hpp"

namespace nil {

/// Set of vertices (or variables) as a bitmask; bit i is vertex i.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(int i) { return VertexMask{1} << i; }
inline constexpr VertexMask full_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : bit(n) - 1;
}
inline int popcount(VertexMask m) { return std::popcount(m); }
inline int lowest(VertexMask m) { return std::countr_zero(m); }

/// Indices of the set bits of `m`, ascending.
std::vector<int> members(VertexMask m);

using Edge = std::pair<int, int>;

/// Finite simple graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  /// Adds {u,v}. Re-adding an existing edge is a no-op; loops and
  /// out-of-range endpoints throw ConstructionError.
  void add_edge(int u, int v);

  int order() const { return n_; }
  int size() const;

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  VertexMask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  VertexMask vertices() const { return full_mask(n_); }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Induced subgraph on `keep`, vertices renumbered in increasing order.
  /// Labels are carried over.
  Graph induced(VertexMask keep) const;

  /// G^c on the same vertex set.
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::vector<VertexMask> adj_;
  std::vector<std::string> labels_;
};

/// Default display label of vertex v ("x1" for v = 0).
std::string default_label(int v);

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// ---------------------------------------------------------------------------
// Families

struct FamilySpec {
  enum class Kind {
    kPath,
    kCycle,
    kStar,
    kComplete,
    kCompleteBipartite,
    kWheel,
    kWhiskered,
    kEdgeList,
    kDisjointUnion,
  };

  Kind kind = Kind::kPath;
  std::vector<int> params;
  std::vector<FamilySpec> bases;  // whiskered: 1, disjoint_union: >= 1
  std::string path;               // edge_list source file

  void validate() const;
};

/// Parses "path:5", "complete_bipartite:3,2", "whiskered(cycle:4)",
/// "disjoint_union(path:3,cycle:3)", "edge_list:<file>".
FamilySpec parse_family(const std::string& text);

std::string to_string(const FamilySpec& spec);

/// Path P_n, cycle C_n, star S_n (center 0), complete K_n, complete
/// bipartite K_{m,n} (parts 0..m-1 and m..m+n-1) and wheel W_n (hub 0, rim
/// 1..n-1 in cyclic order).
Graph build_family(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph wheel_graph(int n);

/// Attaches a pendant vertex y_i to every x_i; y_i gets index n + i.
Graph whisker_all(const Graph& g);

// ---------------------------------------------------------------------------
// Invariants

/// N[v]. Throws ParameterError when v is out of range.
VertexMask closed_neighborhood(const Graph& g, int v);

/// Exact maximum matching size.
int matching_number(const Graph& g);

/// Vertices whose closed neighborhood induces a clique.
VertexMask simplicial_vertices(const Graph& g);

bool is_dominating(const Graph& g, VertexMask set);

/// All inclusion-minimal dominating sets, ascending as masks.
std::vector<VertexMask> minimal_dominating_sets(const Graph& g,
                                                const Limits& limits = default_limits());

/// Minimum number of cliques covering V(G), i.e. chromatic number of G^c.
int clique_cover_number(const Graph& g, const Limits& limits = default_limits());

/// Chromatic number by backtracking.
int chromatic_number(const Graph& g, const Limits& limits = default_limits());

struct Structure {
  bool is_forest = false;
  bool is_tree = false;
  bool is_unicyclic = false;
  bool is_chordal = false;
  std::vector<VertexMask> components;  // ordered by lowest vertex
  /// Perfect elimination order when chordal; otherwise the prefix that could
  /// be eliminated before getting stuck.
  std::vector<int> elimination_order;
};

Structure structure_predicates(const Graph& g);

/// Connected components, each as a standalone graph (vertices renumbered).
std::vector<Graph> component_graphs(const Graph& g);

struct RootedLevels {
  std::vector<int> level;
  int height = 0;
};

/// Throws StructureError if `g` is not a tree.
RootedLevels rooted_levels(const Graph& g, int root);

}  // namespace nil
