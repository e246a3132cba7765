#include "nil/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nil/error.hpp"

namespace nil {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

void check_canonical_size(int n) {
  if (n > kMaxCanonicalVertices) {
    throw SizeError("canonical_vertices", kMaxCanonicalVertices, n);
  }
}

/// Code of `g` under the ordering order[0], order[1], ...
CodeBits code_of(const Graph& g, const std::vector<int>& order) {
  CodeBits code = 0;
  for (std::size_t k = 1; k < order.size(); ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      code = (code << 1) | (g.adjacent(order[i], order[k]) ? 1U : 0U);
    }
  }
  return code;
}

/// Stable colour refinement. Colours are ranks of isomorphism-invariant
/// signatures, so equal graphs up to relabeling get matching colourings.
std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, 0);
  if (n == 0) return color;
  for (int round = 0; round <= n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int u : members(g.neighbors(v))) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                 distinct.begin());
    }
    int before = *std::max_element(color.begin(), color.end());
    int after = *std::max_element(next.begin(), next.end());
    color = std::move(next);
    if (after == before) break;
  }
  return color;
}

struct CanonicalSearch {
  const Graph& g;
  std::vector<int> color;          // refined colour per vertex
  std::vector<int> position_color; // colour required at each position
  int total_bits = 0;
  CodeBits best = 0;
  bool have_best = false;
  std::vector<int> order;

  void run(int k, VertexMask used, CodeBits code, int bits) {
    const int n = g.order();
    if (k == n) {
      if (!have_best || code < best) {
        best = code;
        have_best = true;
      }
      return;
    }
    // Candidates of the required colour with the smallest new chunk.
    CodeBits min_chunk = ~CodeBits{0};
    std::vector<int> cands;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1U || color[v] != position_color[k]) continue;
      CodeBits chunk = 0;
      for (int i = 0; i < k; ++i) chunk = (chunk << 1) | (g.adjacent(order[i], v) ? 1U : 0U);
      if (chunk < min_chunk) {
        min_chunk = chunk;
        cands.clear();
      }
      if (chunk == min_chunk) cands.push_back(v);
    }
    CodeBits next_code = (code << k) | (k > 0 ? min_chunk : 0);
    int next_bits = bits + k;
    if (have_best) {
      CodeBits best_prefix = next_bits == 0 ? 0 : best >> (total_bits - next_bits);
      if (next_code > best_prefix) return;
    }
    std::vector<int> tried;
    for (int v : cands) {
      // Swapping twins is an automorphism fixing the prefix, so one of
      // them is enough.
      bool twin = std::any_of(tried.begin(), tried.end(), [&](int w) {
        return (g.neighbors(v) & ~bit(w)) == (g.neighbors(w) & ~bit(v));
      });
      if (twin) continue;
      tried.push_back(v);
      order.push_back(v);
      run(k + 1, used | bit(v), next_code, next_bits);
      order.pop_back();
    }
  }
};

}  // namespace

std::string CanonicalForm::to_string() const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  CodeBits rest = bits;
  do {
    hex.insert(hex.begin(), kHex[static_cast<int>(rest & 15U)]);
    rest >>= 4;
  } while (rest != 0);
  return std::to_string(n) + ":" + hex;
}

CanonicalForm CanonicalForm::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError(1, "canonical form needs 'n:hex'");
  CanonicalForm form;
  try {
    form.n = std::stoi(text.substr(0, colon));
  } catch (const std::exception&) {
    throw ParseError(1, "malformed canonical form '" + text + "'");
  }
  const std::string hex = text.substr(colon + 1);
  if (form.n < 0 || hex.empty() || hex.size() > 32) {
    throw ParseError(1, "malformed canonical form '" + text + "'");
  }
  for (char c : hex) {
    int digit;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else {
      throw ParseError(1, "malformed canonical form '" + text + "'");
    }
    form.bits = (form.bits << 4) | static_cast<CodeBits>(digit);
  }
  check_canonical_size(form.n);
  if (pair_count(form.n) < 128 && (form.bits >> pair_count(form.n)) != 0) {
    throw ParseError(1, "canonical form bits exceed vertex count");
  }
  return form;
}

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  check_canonical_size(n);
  CanonicalSearch search{g, refine_colors(g), {}, pair_count(n), 0, false, {}};
  search.position_color = search.color;
  std::sort(search.position_color.begin(), search.position_color.end());
  search.run(0, 0, 0, 0);
  return {n, search.best};
}

CanonicalForm canonical_form_brute(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw SizeError("brute_canonical_vertices", 8, n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  CodeBits best = ~CodeBits{0};
  do {
    best = std::min(best, code_of(g, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return {n, n < 2 ? 0 : best};
}

Graph from_canonical(const CanonicalForm& form) {
  check_canonical_size(form.n);
  Graph g(form.n);
  int pos = pair_count(form.n) - 1;
  for (int k = 1; k < form.n; ++k) {
    for (int i = 0; i < k; ++i, --pos) {
      if ((form.bits >> pos) & 1U) g.add_edge(i, k);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Labeled streams

void for_each_labeled_tree(int n, const GraphVisitor& visit, const Limits& limits) {
  if (n < 1 || n > limits.tree_enumeration) {
    throw SizeError("tree_enumeration", limits.tree_enumeration, n);
  }
  if (n == 1) {
    visit(Graph(1));
    return;
  }
  std::vector<int> seq(n - 2, 0);
  std::vector<int> degree(n);
  while (true) {
    std::fill(degree.begin(), degree.end(), 1);
    for (int s : seq) ++degree[s];
    Graph g(n);
    // Linear-time decoding with a moving pointer to the smallest leaf.
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
      g.add_edge(leaf, s);
      if (--degree[s] == 1 && s < ptr) {
        leaf = s;
      } else {
        ++ptr;
        while (degree[ptr] != 1) ++ptr;
        leaf = ptr;
      }
    }
    g.add_edge(leaf, n - 1);
    visit(g);

    int i = static_cast<int>(seq.size()) - 1;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
}

void for_each_labeled_graph(int n, bool connected_only, const GraphVisitor& visit,
                            const Limits& limits) {
  if (n < 1 || n > limits.graph_enumeration) {
    throw SizeError("graph_enumeration", limits.graph_enumeration, n);
  }
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const CodeBits total = CodeBits{1} << pairs.size();
  for (CodeBits mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((mask >> e) & 1U) g.add_edge(pairs[e].first, pairs[e].second);
    }
    if (connected_only && structure_predicates(g).components.size() != 1) continue;
    visit(g);
  }
}

// ---------------------------------------------------------------------------
// Isomorphism classes

namespace {

std::vector<Graph> materialize(const std::set<CanonicalForm>& forms) {
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const CanonicalForm& f : forms) out.push_back(from_canonical(f));
  return out;
}

/// Classes on n vertices obtained by adding one vertex to each class on
/// n - 1 vertices, joined to every neighbour set accepted by `allow`.
template <typename Allow>
std::set<CanonicalForm> grow(const std::vector<Graph>& smaller, Allow allow) {
  std::set<CanonicalForm> out;
  for (const Graph& h : smaller) {
    const int m = h.order();
    for (VertexMask nb = 0; nb < bit(m); ++nb) {
      if (!allow(popcount(nb))) continue;
      Graph g(m + 1);
      for (auto [u, v] : h.edges()) g.add_edge(u, v);
      for (int u : members(nb)) g.add_edge(u, m);
      out.insert(canonical_form(g));
    }
  }
  return out;
}

void check_tree_guard(int n, const Limits& limits) {
  if (n < 1 || n > limits.tree_enumeration) {
    throw SizeError("tree_enumeration", limits.tree_enumeration, n);
  }
  check_canonical_size(n);
}

}  // namespace

std::vector<Graph> unlabeled_trees(int n, const Limits& limits) {
  check_tree_guard(n, limits);
  std::vector<Graph> classes{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    classes = materialize(grow(classes, [](int d) { return d == 1; }));
  }
  return classes;
}

std::vector<Graph> unlabeled_forests(int n, const Limits& limits) {
  check_tree_guard(n, limits);
  std::vector<Graph> classes{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    classes = materialize(grow(classes, [](int d) { return d <= 1; }));
  }
  return classes;
}

std::vector<Graph> unlabeled_unicyclic(int n, const Limits& limits) {
  check_tree_guard(n, limits);
  std::set<CanonicalForm> forms;
  if (n >= 3) {
    for (const Graph& t : unlabeled_trees(n, limits)) {
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (t.adjacent(u, v)) continue;
          Graph g = t;
          g.add_edge(u, v);
          forms.insert(canonical_form(g));
        }
      }
    }
  }
  return materialize(forms);
}

std::vector<Graph> unlabeled_graphs(int n, bool connected_only, const Limits& limits) {
  if (n < 1 || n > limits.graph_enumeration) {
    throw SizeError("graph_enumeration", limits.graph_enumeration, n);
  }
  check_canonical_size(n);
  std::vector<Graph> classes{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    classes = materialize(grow(classes, [](int) { return true; }));
  }
  if (connected_only) {
    std::erase_if(classes,
                  [](const Graph& g) { return structure_predicates(g).components.size() != 1; });
  }
  return classes;
}

namespace {

constexpr std::uint64_t kMaterializeCap = 5'000'000;

}  // namespace

std::vector<Graph> enumerate_trees(int n, bool dedup, const Limits& limits) {
  if (dedup) return unlabeled_trees(n, limits);
  if (n < 1 || n > limits.tree_enumeration) {
    throw SizeError("tree_enumeration", limits.tree_enumeration, n);
  }
  std::uint64_t count = 1;
  for (int i = 0; i < n - 2; ++i) count *= n;
  if (count > kMaterializeCap) {
    throw SizeError("labeled_materialize", static_cast<long long>(kMaterializeCap),
                    static_cast<long long>(count));
  }
  std::vector<Graph> out;
  for_each_labeled_tree(n, [&](const Graph& g) { out.push_back(g); }, limits);
  return out;
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only, bool dedup,
                                    const Limits& limits) {
  if (dedup) return unlabeled_graphs(n, connected_only, limits);
  std::vector<Graph> out;
  for_each_labeled_graph(n, connected_only, [&](const Graph& g) { out.push_back(g); }, limits);
  return out;
}

}  // namespace nil
