#include "nil/simplicial.hpp"

#include <algorithm>
#include <unordered_map>

#include "nil/error.hpp"
#include "nil/linalg.hpp"

namespace nil {

namespace {

std::vector<VertexMask> maximal_only(std::vector<VertexMask> faces) {
  std::sort(faces.begin(), faces.end(), [](VertexMask a, VertexMask b) {
    return popcount(a) > popcount(b) || (popcount(a) == popcount(b) && a < b);
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<VertexMask> kept;
  for (VertexMask f : faces) {
    bool covered = std::any_of(kept.begin(), kept.end(),
                               [&](VertexMask k) { return (f & ~k) == 0; });
    if (!covered) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

bool by_size_then_mask(VertexMask a, VertexMask b) {
  return popcount(a) < popcount(b) || (popcount(a) == popcount(b) && a < b);
}

void check_subset_guard(int n, const Limits& limits) {
  if (n > limits.subset_search) throw SizeError("subset_search", limits.subset_search, n);
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n_vertices, std::vector<VertexMask> faces)
    : n_(n_vertices) {
  if (n_vertices < 0 || n_vertices > kMaxVertices) {
    throw ParameterError("vertex count " + std::to_string(n_vertices) + " out of range");
  }
  for (VertexMask f : faces) {
    if (f & ~full_mask(n_vertices)) throw ParameterError("face uses a vertex outside the complex");
  }
  facets_ = maximal_only(std::move(faces));
}

bool SimplicialComplex::contains(VertexMask face) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](VertexMask f) { return (face & ~f) == 0; });
}

int SimplicialComplex::dimension() const {
  int dim = -2;
  for (VertexMask f : facets_) dim = std::max(dim, popcount(f) - 1);
  return dim;
}

std::vector<VertexMask> SimplicialComplex::faces(const Limits& limits) const {
  std::int64_t budget = 0;
  for (VertexMask f : facets_) {
    budget += popcount(f) >= 62 ? limits.face_budget + 1 : std::int64_t{1} << popcount(f);
    if (budget > limits.face_budget) {
      throw SizeError("face_budget", limits.face_budget, budget);
    }
  }
  std::vector<VertexMask> out;
  out.reserve(static_cast<std::size_t>(budget));
  for (VertexMask f : facets_) {
    // All submasks of f, including f and 0.
    VertexMask s = f;
    while (true) {
      out.push_back(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::sort(out.begin(), out.end(), by_size_then_mask);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialComplex SimplicialComplex::induced(VertexMask w) const {
  std::vector<VertexMask> restricted;
  for (VertexMask f : facets_) restricted.push_back(f & w);
  return {n_, std::move(restricted)};
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal, const Limits& limits) {
  if (ideal.is_unit()) throw DomainError("the unit ideal has no Stanley-Reisner complex");
  const int n = ideal.n_vars();
  check_subset_guard(n, limits);
  const auto& gens = ideal.generators();
  auto is_face = [&](VertexMask f) {
    return std::none_of(gens.begin(), gens.end(),
                        [&](Monomial g) { return (g.support() & ~f) == 0; });
  };
  std::vector<VertexMask> facets;
  const VertexMask all = full_mask(n);
  for (VertexMask f = 0;; ++f) {
    if (is_face(f)) {
      bool maximal = true;
      for (int v : members(all & ~f)) {
        if (is_face(f | bit(v))) {
          maximal = false;
          break;
        }
      }
      if (maximal) facets.push_back(f);
    }
    if (f == all) break;
  }
  return {n, std::move(facets)};
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex, const Limits& limits) {
  const int n = complex.n_vertices();
  check_subset_guard(n, limits);
  std::vector<Monomial> gens;
  const VertexMask all = full_mask(n);
  for (VertexMask f = 0;; ++f) {
    if (!complex.contains(f)) {
      bool minimal = true;
      for (int v : members(f)) {
        if (!complex.contains(f & ~bit(v))) {
          minimal = false;
          break;
        }
      }
      if (minimal) gens.emplace_back(f);
    }
    if (f == all) break;
  }
  return MonomialIdeal(n, std::move(gens));
}

SimplicialComplex dominance_complex(const Graph& g, const Limits& limits) {
  std::vector<VertexMask> facets;
  for (VertexMask d : minimal_dominating_sets(g, limits)) facets.push_back(g.vertices() & ~d);
  return {g.order(), std::move(facets)};
}

std::optional<int> HomologyProfile::homological_dimension() const {
  std::optional<int> out;
  for (const auto& [d, r] : ranks) {
    if (r != 0) out = d;
  }
  return out;
}

HomologyProfile reduced_homology_of_faces(const std::vector<VertexMask>& faces, std::uint32_t p) {
  if (!is_prime(p)) throw ParameterError("field characteristic " + std::to_string(p) + " is not prime");
  HomologyProfile out;
  out.field_char = p;
  if (faces.empty()) return out;  // void complex: all ranks vanish

  int top = 0;
  for (VertexMask f : faces) top = std::max(top, popcount(f));
  // by_size[k] = faces with k vertices, i.e. dimension k - 1.
  std::vector<std::vector<VertexMask>> by_size(top + 1);
  for (VertexMask f : faces) by_size[popcount(f)].push_back(f);
  std::vector<std::unordered_map<VertexMask, std::uint32_t>> index(top + 1);
  for (int k = 0; k <= top; ++k) {
    std::sort(by_size[k].begin(), by_size[k].end());
    for (std::uint32_t i = 0; i < by_size[k].size(); ++i) index[k][by_size[k][i]] = i;
  }

  // boundary_rank[k] = rank of the map from k-vertex faces to (k-1)-vertex faces.
  std::vector<std::int64_t> boundary_rank(top + 2, 0);
  for (int k = 1; k <= top; ++k) {
    std::vector<Entry> entries;
    for (std::uint32_t col = 0; col < by_size[k].size(); ++col) {
      VertexMask f = by_size[k][col];
      int sign = 1;
      for (int v : members(f)) {
        entries.push_back({index[k - 1].at(f & ~bit(v)), col, sign});
        sign = -sign;
      }
    }
    boundary_rank[k] = static_cast<std::int64_t>(
        rank_mod_p(by_size[k - 1].size(), by_size[k].size(), entries, p));
  }
  for (int k = 0; k <= top; ++k) {
    std::int64_t chains = static_cast<std::int64_t>(by_size[k].size());
    out.ranks[k - 1] = chains - boundary_rank[k] - boundary_rank[k + 1];
  }
  return out;
}

HomologyProfile reduced_homology_ranks(const SimplicialComplex& complex, std::uint32_t p,
                                       const Limits& limits) {
  return reduced_homology_of_faces(complex.faces(limits), p);
}

std::optional<int> homological_dimension(const SimplicialComplex& complex, std::uint32_t p,
                                         const Limits& limits) {
  return reduced_homology_ranks(complex, p, limits).homological_dimension();
}

std::int64_t reduced_euler_characteristic(const std::vector<VertexMask>& faces) {
  std::int64_t chi = 0;
  for (VertexMask f : faces) chi += (popcount(f) % 2 == 1) ? 1 : -1;
  return chi;
}

}  // namespace nil
