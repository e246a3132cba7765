#include "nil/graph.hpp"

#include <algorithm>
#include <queue>

#include "nil/error.hpp"

namespace nil {

Limits& default_limits() {
  static Limits limits;
  return limits;
}

std::vector<int> members(VertexMask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m != 0) {
    out.push_back(lowest(m));
    m &= m - 1;
  }
  return out;
}

std::string default_label(int v) { return "x" + std::to_string(v + 1); }

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw ConstructionError("vertex count " + std::to_string(n) +
                            " outside [0, " + std::to_string(kMaxVertices) + "]");
  }
  adj_.assign(n, 0);
  labels_.reserve(n);
  for (int v = 0; v < n; ++v) labels_.push_back(default_label(v));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw ConstructionError("edge endpoint out of range: {" + std::to_string(u + 1) +
                            "," + std::to_string(v + 1) + "} with n = " +
                            std::to_string(n_));
  }
  if (u == v) {
    throw ConstructionError("loop at vertex " + std::to_string(u + 1));
  }
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

int Graph::size() const {
  int twice = 0;
  for (VertexMask m : adj_) twice += popcount(m);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : members(adj_[u] & ~full_mask(u + 1))) out.emplace_back(u, v);
  }
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != n_) {
    throw ConstructionError("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

Graph Graph::induced(VertexMask keep) const {
  keep &= vertices();
  std::vector<int> old_to_new(n_, -1);
  std::vector<std::string> labels;
  int next = 0;
  for (int v : members(keep)) {
    old_to_new[v] = next++;
    labels.push_back(labels_[v]);
  }
  Graph out(next);
  for (auto [u, v] : edges()) {
    if (old_to_new[u] >= 0 && old_to_new[v] >= 0) {
      out.add_edge(old_to_new[u], old_to_new[v]);
    }
  }
  out.labels_ = std::move(labels);
  return out;
}

Graph Graph::complement() const {
  Graph out(n_);
  for (int v = 0; v < n_; ++v) {
    out.adj_[v] = vertices() & ~adj_[v] & ~bit(v);
  }
  out.labels_ = labels_;
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return out;
}

// ---------------------------------------------------------------------------
// Invariants

VertexMask closed_neighborhood(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw ParameterError("vertex " + std::to_string(v + 1) + " out of range");
  }
  return g.neighbors(v) | bit(v);
}

namespace {

int greedy_matching(const Graph& g) {
  VertexMask free = g.vertices();
  int size = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (!(free & bit(v))) continue;
    VertexMask cand = g.neighbors(v) & free;
    if (cand != 0) {
      free &= ~(bit(v) | bit(lowest(cand)));
      ++size;
    }
  }
  return size;
}

struct MatchingSearch {
  const Graph& g;
  int best;

  void run(VertexMask active, int current) {
    // Drop vertices with no active neighbour; match forced leaves.
    for (bool changed = true; changed;) {
      changed = false;
      for (int v : members(active)) {
        if (!(active & bit(v))) continue;
        VertexMask nb = g.neighbors(v) & active;
        if (nb == 0) {
          active &= ~bit(v);
          changed = true;
        } else if (popcount(nb) == 1) {
          active &= ~(bit(v) | nb);
          ++current;
          changed = true;
        }
      }
    }
    best = std::max(best, current);
    if (current + popcount(active) / 2 <= best) return;

    int v = lowest(active);
    for (int u : members(g.neighbors(v) & active)) {
      run(active & ~(bit(v) | bit(u)), current + 1);
      if (current + popcount(active) / 2 <= best) return;
    }
    run(active & ~bit(v), current);
  }
};

}  // namespace

int matching_number(const Graph& g) {
  MatchingSearch search{g, greedy_matching(g)};
  search.run(g.vertices(), 0);
  return search.best;
}

VertexMask simplicial_vertices(const Graph& g) {
  VertexMask out = 0;
  for (int v = 0; v < g.order(); ++v) {
    VertexMask closed = g.neighbors(v) | bit(v);
    bool clique = true;
    for (int u : members(g.neighbors(v))) {
      if (((g.neighbors(u) | bit(u)) & closed) != closed) {
        clique = false;
        break;
      }
    }
    if (clique) out |= bit(v);
  }
  return out;
}

bool is_dominating(const Graph& g, VertexMask set) {
  VertexMask covered = 0;
  for (int v : members(set)) covered |= g.neighbors(v) | bit(v);
  return (covered & g.vertices()) == g.vertices();
}

std::vector<VertexMask> minimal_dominating_sets(const Graph& g, const Limits& limits) {
  const int n = g.order();
  if (n > limits.subset_search) {
    throw SizeError("subset_search", limits.subset_search, n);
  }
  std::vector<VertexMask> out;
  const VertexMask all = g.vertices();
  for (VertexMask s = 0;; ++s) {
    if (is_dominating(g, s)) {
      bool minimal = true;
      for (int v : members(s)) {
        if (is_dominating(g, s & ~bit(v))) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(s);
    }
    if (s == all) break;
  }
  return out;
}

namespace {

bool colorable(const Graph& g, const std::vector<int>& order, std::vector<int>& color,
               std::size_t pos, int k, int used) {
  if (pos == order.size()) return true;
  int v = order[pos];
  // Symmetry breaking: a fresh color is only ever the next unused one.
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool ok = true;
    for (int u : members(g.neighbors(v))) {
      if (color[u] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[v] = c;
    if (colorable(g, order, color, pos + 1, k, std::max(used, c + 1))) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

int chromatic_number(const Graph& g, const Limits& limits) {
  const int n = g.order();
  if (n > limits.exact_coloring) {
    throw SizeError("exact_coloring", limits.exact_coloring, n);
  }
  if (n == 0) return 0;
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int k = 1; k <= n; ++k) {
    std::vector<int> color(n, -1);
    if (colorable(g, order, color, 0, k, 0)) return k;
  }
  return n;
}

int clique_cover_number(const Graph& g, const Limits& limits) {
  return chromatic_number(g.complement(), limits);
}

Structure structure_predicates(const Graph& g) {
  Structure s;
  VertexMask unseen = g.vertices();
  while (unseen != 0) {
    VertexMask comp = bit(lowest(unseen));
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for (int v : members(frontier)) next |= g.neighbors(v);
      frontier = next & ~comp;
      comp |= next;
    }
    s.components.push_back(comp);
    unseen &= ~comp;
  }
  const int n = g.order();
  const int m = g.size();
  const int c = static_cast<int>(s.components.size());
  s.is_forest = m == n - c;
  s.is_tree = s.is_forest && c == 1;
  s.is_unicyclic = c == 1 && m == n;

  VertexMask remaining = g.vertices();
  while (remaining != 0) {
    int found = -1;
    for (int v : members(remaining)) {
      VertexMask closed = (g.neighbors(v) | bit(v)) & remaining;
      bool clique = true;
      for (int u : members(closed & ~bit(v))) {
        if (((g.neighbors(u) | bit(u)) & closed) != closed) {
          clique = false;
          break;
        }
      }
      if (clique) {
        found = v;
        break;
      }
    }
    if (found < 0) break;
    s.elimination_order.push_back(found);
    remaining &= ~bit(found);
  }
  s.is_chordal = remaining == 0;
  return s;
}

std::vector<Graph> component_graphs(const Graph& g) {
  std::vector<Graph> out;
  for (VertexMask comp : structure_predicates(g).components) out.push_back(g.induced(comp));
  return out;
}

RootedLevels rooted_levels(const Graph& g, int root) {
  if (root < 0 || root >= g.order()) {
    throw ParameterError("root " + std::to_string(root + 1) + " out of range");
  }
  if (!structure_predicates(g).is_tree) throw StructureError("graph is not a tree");
  RootedLevels out;
  out.level.assign(g.order(), -1);
  out.level[root] = 0;
  std::queue<int> queue;
  queue.push(root);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    out.height = std::max(out.height, out.level[v]);
    for (int u : members(g.neighbors(v))) {
      if (out.level[u] < 0) {
        out.level[u] = out.level[v] + 1;
        queue.push(u);
      }
    }
  }
  return out;
}

}  // namespace nil
