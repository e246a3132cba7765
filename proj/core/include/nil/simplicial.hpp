#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nil/graph.hpp"
#include "nil/monomial.hpp"

namespace nil {

/// Abstract simplicial complex on vertices 0..n-1, held by its facets.
///
/// The void complex has no faces at all; the empty complex {∅} has the
/// empty face only. Both are valid and distinct.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Complex generated by `faces`; non-maximal entries are dropped.
  SimplicialComplex(int n_vertices, std::vector<VertexMask> faces);

  static SimplicialComplex void_complex(int n_vertices) { return {n_vertices, {}}; }
  static SimplicialComplex empty_complex(int n_vertices) { return {n_vertices, {0}}; }
  static SimplicialComplex simplex(int n_vertices) {
    return {n_vertices, {full_mask(n_vertices)}};
  }

  int n_vertices() const { return n_; }
  /// Facets sorted ascending as masks.
  const std::vector<VertexMask>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool contains(VertexMask face) const;
  /// Largest facet size minus one; -1 for {∅}, and -2 for the void complex.
  int dimension() const;

  /// Every face, sorted by size and then by mask. Throws SizeError beyond
  /// the face budget.
  std::vector<VertexMask> faces(const Limits& limits = default_limits()) const;

  /// Faces contained in `w`.
  SimplicialComplex induced(VertexMask w) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

 private:
  int n_ = 0;
  std::vector<VertexMask> facets_;
};

/// Δ(I) = {F : x_F ∉ I}. Throws DomainError for the unit ideal.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal,
                                          const Limits& limits = default_limits());

/// I_Δ, generated by the minimal non-faces. The void complex maps to <1>.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex,
                                    const Limits& limits = default_limits());

/// D(G) = {W : V \ W dominates G}; facets are complements of the minimal
/// dominating sets.
SimplicialComplex dominance_complex(const Graph& g, const Limits& limits = default_limits());

struct HomologyProfile {
  std::uint32_t field_char = 2;
  /// rank of reduced H_d over GF(p), for d from -1 to the dimension.
  std::map<int, std::int64_t> ranks;

  std::int64_t rank(int d) const {
    auto it = ranks.find(d);
    return it == ranks.end() ? 0 : it->second;
  }
  /// Largest d with nonzero rank, if any.
  std::optional<int> homological_dimension() const;
};

/// Reduced homology of the complex whose faces are `faces` (must be
/// downward closed, any order).
HomologyProfile reduced_homology_of_faces(const std::vector<VertexMask>& faces, std::uint32_t p);

HomologyProfile reduced_homology_ranks(const SimplicialComplex& complex, std::uint32_t p,
                                       const Limits& limits = default_limits());

std::optional<int> homological_dimension(const SimplicialComplex& complex, std::uint32_t p,
                                         const Limits& limits = default_limits());

/// Alternating face count sum_{d >= -1} (-1)^d f_d.
std::int64_t reduced_euler_characteristic(const std::vector<VertexMask>& faces);

}  // namespace nil
