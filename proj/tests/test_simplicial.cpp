#include <gtest/gtest.h>

#include "nil/error.hpp"
#include "nil/monomial.hpp"
#include "nil/simplicial.hpp"

using namespace nil;

namespace {

// Six-vertex triangulation of the real projective plane.
SimplicialComplex rp2() {
  const int tris[10][3] = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                           {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  std::vector<VertexMask> f;
  for (auto& t : tris) f.push_back(bit(t[0]) | bit(t[1]) | bit(t[2]));
  return {6, f};
}

}  // namespace

TEST(Complex, VoidAndEmptyDiffer) {
  auto v = SimplicialComplex::void_complex(3);
  auto e = SimplicialComplex::empty_complex(3);
  EXPECT_NE(v, e);
  EXPECT_TRUE(v.is_void());
  EXPECT_EQ(v.dimension(), -2);
  EXPECT_EQ(e.dimension(), -1);
  EXPECT_TRUE(v.faces().empty());
  EXPECT_EQ(e.faces(), std::vector<VertexMask>{0});
  // The empty complex has reduced H_{-1} of rank one; the void complex has none.
  EXPECT_EQ(reduced_homology_ranks(e, 2).rank(-1), 1);
  EXPECT_FALSE(reduced_homology_ranks(v, 2).homological_dimension().has_value());
  EXPECT_EQ(homological_dimension(e, 2), -1);
}

TEST(Complex, FacetsAreMaximal) {
  SimplicialComplex c(4, {0b0011, 0b0001, 0b0111, 0b1000});
  EXPECT_EQ(c.facets(), (std::vector<VertexMask>{0b0111, 0b1000}));
  EXPECT_TRUE(c.contains(0b0101));
  EXPECT_FALSE(c.contains(0b1001));
  EXPECT_EQ(c.dimension(), 2);
  EXPECT_EQ(c.faces().size(), 9U);  // 8 subsets of {0,1,2} plus {3}
  EXPECT_EQ(c.induced(0b1001), SimplicialComplex(4, {0b0001, 0b1000}));
}

TEST(Complex, SimplexBoundaryIsASphere) {
  for (int n = 2; n <= 7; ++n) {
    std::vector<VertexMask> f;
    for (int v = 0; v < n; ++v) f.push_back(full_mask(n) & ~bit(v));
    SimplicialComplex sphere(n, f);
    for (std::uint32_t p : {2U, 3U, 32003U}) {
      HomologyProfile h = reduced_homology_ranks(sphere, p);
      for (int d = -1; d <= n - 2; ++d) EXPECT_EQ(h.rank(d), d == n - 2 ? 1 : 0);
    }
    EXPECT_EQ(reduced_euler_characteristic(sphere.faces()), (n - 2) % 2 == 0 ? 1 : -1);
    // Its Stanley-Reisner ideal is the single top monomial.
    EXPECT_EQ(stanley_reisner_ideal(sphere), MonomialIdeal(n, {Monomial(full_mask(n))}));
  }
  for (int n = 1; n <= 6; ++n) {
    EXPECT_FALSE(homological_dimension(SimplicialComplex::simplex(n), 2).has_value());
  }
}

TEST(Complex, ProjectivePlaneDependsOnField) {
  SimplicialComplex c = rp2();
  HomologyProfile two = reduced_homology_ranks(c, 2);
  EXPECT_EQ(two.rank(0), 0);
  EXPECT_EQ(two.rank(1), 1);
  EXPECT_EQ(two.rank(2), 1);
  HomologyProfile three = reduced_homology_ranks(c, 3);
  EXPECT_EQ(three.rank(1), 0);
  EXPECT_EQ(three.rank(2), 0);
  EXPECT_EQ(reduced_euler_characteristic(c.faces()), 0);
}

TEST(Complex, CircleAndTwoPoints) {
  // Hollow square and two isolated points.
  SimplicialComplex square(4, {0b0011, 0b0110, 0b1100, 0b1001});
  HomologyProfile h = reduced_homology_ranks(square, 2);
  EXPECT_EQ(h.rank(0), 0);
  EXPECT_EQ(h.rank(1), 1);
  SimplicialComplex pts(2, {0b01, 0b10});
  EXPECT_EQ(reduced_homology_ranks(pts, 5).rank(0), 1);
}

TEST(StanleyReisner, PathThree) {
  MonomialIdeal ni = closed_neighborhood_ideal(path_graph(3));
  SimplicialComplex d = stanley_reisner_complex(ni);
  EXPECT_EQ(d.facets(), (std::vector<VertexMask>{0b010, 0b101}));
  EXPECT_EQ(d, dominance_complex(path_graph(3)));
  EXPECT_EQ(stanley_reisner_ideal(d), ni);
}

TEST(StanleyReisner, EdgeCases) {
  EXPECT_THROW(stanley_reisner_complex(MonomialIdeal::unit(3)), DomainError);
  EXPECT_EQ(stanley_reisner_complex(MonomialIdeal::zero(3)), SimplicialComplex::simplex(3));
  EXPECT_TRUE(stanley_reisner_ideal(SimplicialComplex::void_complex(3)).is_unit());
  // All variables in the ideal: only the empty face survives.
  MonomialIdeal vars(2, {Monomial(0b01), Monomial(0b10)});
  EXPECT_EQ(stanley_reisner_complex(vars), SimplicialComplex::empty_complex(2));
  EXPECT_EQ(stanley_reisner_ideal(SimplicialComplex::empty_complex(2)), vars);
}

TEST(StanleyReisner, DominanceComplexOfCycles) {
  for (int n = 3; n <= 9; ++n) {
    Graph g = cycle_graph(n);
    SimplicialComplex d = dominance_complex(g);
    EXPECT_EQ(stanley_reisner_ideal(d), closed_neighborhood_ideal(g));
    for (VertexMask f : d.faces()) EXPECT_TRUE(is_dominating(g, g.vertices() & ~f));
  }
}

TEST(StanleyReisner, FaceBudget) {
  Limits tight = default_limits();
  tight.face_budget = 10;
  EXPECT_THROW(SimplicialComplex::simplex(6).faces(tight), SizeError);
}
