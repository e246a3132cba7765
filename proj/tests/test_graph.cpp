#include <gtest/gtest.h>

#include <functional>

#include "nil/enumerate.hpp"
#include "nil/error.hpp"
#include "nil/graph.hpp"

using namespace nil;

namespace {

// Exhaustive maximum matching over edge subsets.
int brute_matching(const Graph& g) {
  auto edges = g.edges();
  int best = 0;
  std::function<void(std::size_t, VertexMask, int)> go = [&](std::size_t k, VertexMask used, int size) {
    best = std::max(best, size);
    for (std::size_t e = k; e < edges.size(); ++e) {
      VertexMask m = bit(edges[e].first) | bit(edges[e].second);
      if ((used & m) == 0) go(e + 1, used | m, size + 1);
    }
  };
  go(0, 0, 0);
  return best;
}

// Smallest k admitting a proper colouring, by trying all k^n assignments.
int brute_chromatic(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> c(n, 0);
    while (true) {
      bool ok = true;
      for (auto [u, v] : g.edges()) ok = ok && c[u] != c[v];
      if (ok) return k;
      int i = 0;
      while (i < n && ++c[i] == k) c[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

}  // namespace

TEST(Graph, ConstructionAndQueries) {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 3);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degree(1), 2);
  g.add_edge(1, 0);  // duplicate is a no-op
  EXPECT_EQ(g.size(), 3);
  EXPECT_THROW(g.add_edge(2, 2), ConstructionError);
  EXPECT_THROW(g.add_edge(0, 4), ConstructionError);
  EXPECT_EQ(g.label(0), "x1");
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(Graph, InducedAndComplement) {
  Graph c5 = cycle_graph(5);
  Graph h = c5.induced(bit(0) | bit(1) | bit(3));
  EXPECT_EQ(h.order(), 3);
  EXPECT_EQ(h.size(), 1);
  EXPECT_EQ(h.label(2), "x4");
  Graph comp = c5.complement();
  EXPECT_EQ(comp.size(), 5);
  EXPECT_TRUE(comp.adjacent(0, 2));
  EXPECT_EQ(complete_graph(4).complement().size(), 0);
}

TEST(Families, Builders) {
  EXPECT_EQ(path_graph(5).size(), 4);
  EXPECT_EQ(cycle_graph(6).size(), 6);
  EXPECT_EQ(star_graph(5).degree(0), 4);
  EXPECT_EQ(complete_graph(5).size(), 10);
  Graph k32 = complete_bipartite_graph(3, 2);
  EXPECT_EQ(k32.size(), 6);
  EXPECT_FALSE(k32.adjacent(0, 1));
  EXPECT_TRUE(k32.adjacent(0, 3));
  Graph w = wheel_graph(6);
  EXPECT_EQ(w.degree(0), 5);
  EXPECT_EQ(w.size(), 10);
  Graph wh = whisker_all(cycle_graph(3));
  EXPECT_EQ(wh.order(), 6);
  EXPECT_TRUE(wh.adjacent(1, 4));
  EXPECT_EQ(wh.label(4), "y2");
}

TEST(Families, ParseSpecs) {
  EXPECT_EQ(build_family(parse_family("cycle:5")), cycle_graph(5));
  EXPECT_EQ(build_family(parse_family("complete_bipartite:3,2")), complete_bipartite_graph(3, 2));
  EXPECT_EQ(build_family(parse_family("whiskered(path:3)")), whisker_all(path_graph(3)));
  Graph u = build_family(parse_family("disjoint_union(path:3,cycle:3)"));
  EXPECT_EQ(u, disjoint_union(path_graph(3), cycle_graph(3)));
  EXPECT_EQ(to_string(parse_family("whiskered(cycle:4)")), "whiskered(cycle:4)");
}

TEST(Families, Rejections) {
  EXPECT_THROW(parse_family("cycle:2"), ConstructionError);
  EXPECT_THROW(parse_family("wheel:3"), ConstructionError);
  EXPECT_THROW(parse_family("path:0"), ConstructionError);
  EXPECT_THROW(parse_family("complete_bipartite:3"), ConstructionError);
  EXPECT_THROW(parse_family("hypercube:3"), ConstructionError);
  EXPECT_THROW(parse_family("whiskered(path:3"), ConstructionError);
}

TEST(Invariants, MatchingNumberAgreesWithBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : unlabeled_graphs(n, false)) {
      ASSERT_EQ(matching_number(g), brute_matching(g)) << n;
    }
  }
  EXPECT_EQ(matching_number(cycle_graph(7)), 3);
  EXPECT_EQ(matching_number(star_graph(6)), 1);
  EXPECT_EQ(matching_number(whisker_all(complete_graph(4))), 4);
}

TEST(Invariants, ChromaticAgreesWithBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : unlabeled_graphs(n, false)) {
      ASSERT_EQ(chromatic_number(g), brute_chromatic(g));
      ASSERT_EQ(clique_cover_number(g), brute_chromatic(g.complement()));
    }
  }
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
  EXPECT_EQ(clique_cover_number(cycle_graph(5)), 3);
}

TEST(Invariants, ClosedNeighborhood) {
  Graph p = path_graph(3);
  EXPECT_EQ(closed_neighborhood(p, 1), VertexMask{0b111});
  EXPECT_EQ(closed_neighborhood(p, 0), VertexMask{0b011});
  EXPECT_THROW(closed_neighborhood(p, 3), ParameterError);
}

TEST(Invariants, SimplicialVertices) {
  EXPECT_EQ(simplicial_vertices(path_graph(4)), bit(0) | bit(3));
  EXPECT_EQ(simplicial_vertices(cycle_graph(4)), VertexMask{0});
  EXPECT_EQ(simplicial_vertices(complete_graph(4)), VertexMask{0b1111});
  EXPECT_EQ(simplicial_vertices(Graph(2)), VertexMask{0b11});
}

TEST(Invariants, MinimalDominatingSets) {
  Graph p = path_graph(4);
  // Brute force: dominating and no proper dominating subset.
  std::vector<VertexMask> brute;
  for (VertexMask s = 0; s < 16; ++s) {
    if (!is_dominating(p, s)) continue;
    bool minimal = true;
    for (int v : members(s)) minimal = minimal && !is_dominating(p, s & ~bit(v));
    if (minimal) brute.push_back(s);
  }
  EXPECT_EQ(minimal_dominating_sets(p), brute);
  EXPECT_TRUE(is_dominating(star_graph(5), bit(0)));
  Limits tight;
  tight.subset_search = 4;
  EXPECT_THROW(minimal_dominating_sets(path_graph(5), tight), SizeError);
}

TEST(Structure, Predicates) {
  Structure t = structure_predicates(path_graph(4));
  EXPECT_TRUE(t.is_tree);
  EXPECT_TRUE(t.is_forest);
  EXPECT_TRUE(t.is_chordal);
  EXPECT_FALSE(t.is_unicyclic);

  Structure c = structure_predicates(cycle_graph(5));
  EXPECT_TRUE(c.is_unicyclic);
  EXPECT_FALSE(c.is_chordal);
  EXPECT_FALSE(c.is_forest);

  Structure f = structure_predicates(disjoint_union(path_graph(2), path_graph(3)));
  EXPECT_TRUE(f.is_forest);
  EXPECT_FALSE(f.is_tree);
  EXPECT_EQ(f.components.size(), 2U);

  EXPECT_TRUE(structure_predicates(complete_graph(5)).is_chordal);
  EXPECT_FALSE(structure_predicates(wheel_graph(5)).is_chordal);
  EXPECT_TRUE(structure_predicates(wheel_graph(4)).is_chordal);  // K_4
}

TEST(Structure, ChordalMatchesInducedCycleSearch) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : unlabeled_graphs(n, false)) {
      bool has_hole = false;
      for (VertexMask w = 0; w < bit(n) && !has_hole; ++w) {
        if (popcount(w) < 4) continue;
        Graph h = g.induced(w);
        bool two = true;
        for (int v = 0; v < h.order(); ++v) two = two && h.degree(v) == 2;
        has_hole = two && structure_predicates(h).components.size() == 1;
      }
      ASSERT_EQ(structure_predicates(g).is_chordal, !has_hole) << g.size();
    }
  }
}

TEST(Structure, RootedLevelsOfExampleTree) {
  // z = 0, y1..y7 = 1..7 as in the rooted example of height 3.
  Graph t(8, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {4, 6}, {4, 7}});
  RootedLevels lv = rooted_levels(t, 0);
  EXPECT_EQ(lv.height, 3);
  EXPECT_EQ(lv.level, (std::vector<int>{0, 1, 1, 2, 2, 2, 3, 3}));
  EXPECT_THROW(rooted_levels(cycle_graph(4), 0), StructureError);
}

TEST(Structure, Components) {
  auto parts = component_graphs(disjoint_union(cycle_graph(3), path_graph(2)));
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(parts[0], cycle_graph(3));
  EXPECT_EQ(parts[1], path_graph(2));
}
