#include <gtest/gtest.h>

#include "nil/enumerate.hpp"
#include "nil/error.hpp"
#include "nil/monomial.hpp"

using namespace nil;

namespace {

Monomial mono(std::initializer_list<int> one_based) {
  std::vector<int> idx;
  for (int i : one_based) idx.push_back(i - 1);
  return Monomial::from_indices(idx);
}

MonomialIdeal ideal(int n, std::initializer_list<std::initializer_list<int>> gens) {
  std::vector<Monomial> out;
  for (auto g : gens) out.push_back(mono(g));
  return MonomialIdeal(n, out);
}

}  // namespace

TEST(Monomial, Arithmetic) {
  Monomial a = mono({1, 2});
  Monomial b = mono({2, 3});
  EXPECT_EQ(a.degree(), 2);
  EXPECT_TRUE(a.contains(1));
  EXPECT_EQ(a.lcm(b), mono({1, 2, 3}));
  EXPECT_EQ(a.gcd(b), mono({2}));
  EXPECT_EQ(a.colon(b), mono({1}));
  EXPECT_TRUE(mono({2}).divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(mono({1}).times(mono({3})), mono({1, 3}));
  EXPECT_THROW(a.times(b), DomainError);
  EXPECT_THROW(Monomial::from_indices({0, 0}), DomainError);
  EXPECT_TRUE(Monomial().is_one());
}

TEST(Monomial, LexOrder) {
  std::vector<Monomial> v = {mono({2}), mono({1, 3}), mono({1, 2, 3}), mono({1, 2})};
  std::sort(v.begin(), v.end(), lex_less);
  EXPECT_EQ(v, (std::vector<Monomial>{mono({1, 2}), mono({1, 2, 3}), mono({1, 3}), mono({2})}));
}

TEST(Ideal, Minimalization) {
  MonomialIdeal i = ideal(4, {{1, 2, 3}, {1, 2}, {2, 3, 4}, {1, 2}, {3}});
  EXPECT_EQ(i.generators(), (std::vector<Monomial>{mono({1, 2}), mono({3})}));
  for (Monomial a : i.generators()) {
    for (Monomial b : i.generators()) {
      if (!(a == b)) {
        EXPECT_FALSE(a.divides(b));
      }
    }
  }
  EXPECT_TRUE(i.contains(mono({1, 2, 4})));
  EXPECT_FALSE(i.contains(mono({1, 4})));
  EXPECT_THROW(ideal(2, {{1, 3}}), ParameterError);
  EXPECT_TRUE(MonomialIdeal::zero(3).is_zero());
  EXPECT_TRUE(MonomialIdeal::unit(3).is_unit());
  EXPECT_TRUE(ideal(3, {{1}, {}}).is_unit());
}

TEST(Ideal, ClosedNeighborhoodExamples) {
  EXPECT_EQ(closed_neighborhood_ideal(path_graph(3)), ideal(3, {{1, 2}, {2, 3}}));
  for (int m = 2; m <= 6; ++m) {
    const MonomialIdeal k = closed_neighborhood_ideal(complete_graph(m));
    ASSERT_EQ(k.size(), 1U);
    EXPECT_EQ(k.generators()[0].degree(), m);
  }
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(closed_neighborhood_ideal(star_graph(n)), edge_ideal(star_graph(n)));
  }
  for (int n = 3; n <= 10; ++n) {
    EXPECT_EQ(closed_neighborhood_ideal(cycle_graph(n)), path_ideal(cycle_graph(n), 3));
  }
  // An isolated vertex contributes its own variable.
  EXPECT_EQ(closed_neighborhood_ideal(Graph(2)), ideal(2, {{1}, {2}}));
}

TEST(Ideal, WhiskerGeneratorsAreTheWhiskers) {
  for (const Graph& g : unlabeled_graphs(4, false)) {
    Graph w = whisker_all(g);
    const int n = g.order();
    std::vector<Monomial> whiskers;
    for (int i = 0; i < n; ++i) whiskers.emplace_back(bit(i) | bit(n + i));
    EXPECT_EQ(closed_neighborhood_ideal(w), MonomialIdeal(2 * n, whiskers));
  }
}

TEST(Ideal, PathIdeals) {
  Graph p4 = path_graph(4);
  EXPECT_EQ(path_ideal(p4, 1), ideal(4, {{1}, {2}, {3}, {4}}));
  EXPECT_EQ(path_ideal(p4, 2), edge_ideal(p4));
  EXPECT_EQ(path_ideal(p4, 3), ideal(4, {{1, 2, 3}, {2, 3, 4}}));
  EXPECT_EQ(path_ideal(p4, 4), ideal(4, {{1, 2, 3, 4}}));
  EXPECT_TRUE(path_ideal(p4, 5).is_zero());
  EXPECT_THROW(path_ideal(p4, 0), ParameterError);
  // In a star every 3-path runs through the centre.
  EXPECT_EQ(path_ideal(star_graph(4), 3).size(), 3U);
}

TEST(Ideal, Operations) {
  MonomialIdeal i = ideal(4, {{1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(colon_by_monomial(i, mono({2})), ideal(4, {{1}, {3}}));
  EXPECT_TRUE(colon_by_monomial(i, mono({1, 2})).is_unit());
  EXPECT_EQ(add_variable(i, 1), ideal(4, {{2}, {3, 4}}));
  EXPECT_EQ(intersect_ideals(ideal(3, {{1}}), ideal(3, {{2}, {3}})), ideal(3, {{1, 2}, {1, 3}}));
  EXPECT_EQ(add_ideals(ideal(3, {{1}}), ideal(3, {{1, 2}, {3}})), ideal(3, {{1}, {3}}));
  EXPECT_THROW(add_ideals(ideal(3, {{1}}), ideal(4, {{1}})), ParameterError);
  EXPECT_EQ(scale_by_monomial(ideal(3, {{1}, {2}}), mono({3})), ideal(3, {{1, 3}, {2, 3}}));
  EXPECT_THROW(scale_by_monomial(ideal(3, {{1}}), mono({1})), DomainError);

  auto [j, k] = split_at_variable(i, 2);
  EXPECT_EQ(j, ideal(4, {{2, 3}, {3, 4}}));
  EXPECT_EQ(k, ideal(4, {{1, 2}}));
  EXPECT_THROW(split_at_variable(ideal(4, {{1, 2}}), 3), ParameterError);
}

TEST(Ideal, RelabelAndExtend) {
  MonomialIdeal i = ideal(3, {{1, 2}, {3}});
  EXPECT_EQ(relabel(i, {2, 0, 1}, 3), ideal(3, {{1, 3}, {2}}));
  EXPECT_EQ(relabel(i, {1, 2, 3}, 5), ideal(5, {{2, 3}, {4}}));
  EXPECT_THROW(relabel(i, {0, 0, 1}, 3), ParameterError);
  EXPECT_THROW(relabel(i, {0, 1}, 3), ParameterError);
  EXPECT_EQ(extend_universe(i, 5).n_vars(), 5);
  EXPECT_THROW(extend_universe(i, 2), ParameterError);
}
