#include "nil/monomial.hpp"

#include <algorithm>

#include "nil/error.hpp"

namespace nil {

Monomial Monomial::from_indices(const std::vector<int>& indices) {
  VertexMask support = 0;
  for (int i : indices) {
    if (i < 0 || i >= kMaxVertices) {
      throw ParameterError("variable index " + std::to_string(i + 1) + " out of range");
    }
    if (support & bit(i)) {
      throw DomainError("repeated variable x" + std::to_string(i + 1) +
                        ": only squarefree monomials are supported");
    }
    support |= bit(i);
  }
  return Monomial(support);
}

Monomial Monomial::times(Monomial other) const {
  if (support_ & other.support_) throw DomainError("product is not squarefree");
  return Monomial(support_ | other.support_);
}

bool lex_less(Monomial a, Monomial b) {
  VertexMask diff = a.support() ^ b.support();
  if (diff == 0) return false;
  int first = lowest(diff);
  // Both sequences agree below `first`. The one holding `first` is smaller
  // unless the other has already run out of elements.
  bool a_has = a.contains(first);
  VertexMask above = ~full_mask(first + 1);
  if (a_has) return (b.support() & above) != 0;
  return (a.support() & above) == 0;
}

std::vector<Monomial> minimal_elements(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](Monomial a, Monomial b) { return a.degree() < b.degree() ||
                                                (a.degree() == b.degree() && lex_less(a, b)); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (Monomial m : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](Monomial k) { return k.divides(m); });
    if (!redundant) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(), lex_less);
  return kept;
}

MonomialIdeal::MonomialIdeal(int n_vars, std::vector<Monomial> gens) : n_vars_(n_vars) {
  if (n_vars < 0 || n_vars > kMaxVertices) {
    throw ParameterError("variable count " + std::to_string(n_vars) + " out of range");
  }
  for (Monomial m : gens) {
    if (m.support() & ~full_mask(n_vars)) {
      throw ParameterError("generator uses a variable outside x1..x" + std::to_string(n_vars));
    }
  }
  gens_ = minimal_elements(std::move(gens));
}

VertexMask MonomialIdeal::support() const {
  VertexMask out = 0;
  for (Monomial m : gens_) out |= m.support();
  return out;
}

bool MonomialIdeal::contains(Monomial m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](Monomial g) { return g.divides(m); });
}

bool MonomialIdeal::is_subset_of(const MonomialIdeal& other) const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](Monomial g) { return other.contains(g); });
}

MonomialIdeal minimalize(int n_vars, std::vector<Monomial> gens) {
  return MonomialIdeal(n_vars, std::move(gens));
}

MonomialIdeal closed_neighborhood_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (int v = 0; v < g.order(); ++v) gens.emplace_back(closed_neighborhood(g, v));
  return MonomialIdeal(g.order(), std::move(gens));
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges()) gens.emplace_back(bit(u) | bit(v));
  return MonomialIdeal(g.order(), std::move(gens));
}

namespace {

void extend_paths(const Graph& g, int t, int last, VertexMask visited, int length,
                  std::vector<Monomial>& out) {
  if (length == t) {
    out.emplace_back(visited);
    return;
  }
  for (int u : members(g.neighbors(last) & ~visited)) {
    extend_paths(g, t, u, visited | bit(u), length + 1, out);
  }
}

}  // namespace

MonomialIdeal path_ideal(const Graph& g, int t) {
  if (t < 1) throw ParameterError("path length t must be >= 1");
  std::vector<Monomial> gens;
  if (t <= g.order()) {
    for (int v = 0; v < g.order(); ++v) extend_paths(g, t, v, bit(v), 1, gens);
  }
  return MonomialIdeal(g.order(), std::move(gens));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, Monomial m) {
  std::vector<Monomial> gens;
  for (Monomial g : ideal.generators()) gens.push_back(g.colon(m));
  return MonomialIdeal(ideal.n_vars(), std::move(gens));
}

namespace {

void require_same_universe(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n_vars() != b.n_vars()) {
    throw ParameterError("ideals live in different polynomial rings (" +
                         std::to_string(a.n_vars()) + " vs " + std::to_string(b.n_vars()) +
                         " variables)");
  }
}

}  // namespace

MonomialIdeal add_ideals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_universe(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.n_vars(), std::move(gens));
}

MonomialIdeal intersect_ideals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_universe(a, b);
  std::vector<Monomial> gens;
  for (Monomial x : a.generators()) {
    for (Monomial y : b.generators()) gens.push_back(x.lcm(y));
  }
  return MonomialIdeal(a.n_vars(), std::move(gens));
}

MonomialIdeal scale_by_monomial(const MonomialIdeal& ideal, Monomial m) {
  std::vector<Monomial> gens;
  for (Monomial g : ideal.generators()) gens.push_back(g.times(m));
  return MonomialIdeal(ideal.n_vars(), std::move(gens));
}

MonomialIdeal add_variable(const MonomialIdeal& ideal, int var) {
  if (var < 0 || var >= ideal.n_vars()) {
    throw ParameterError("variable x" + std::to_string(var + 1) + " outside the ring");
  }
  std::vector<Monomial> gens = ideal.generators();
  gens.emplace_back(bit(var));
  return MonomialIdeal(ideal.n_vars(), std::move(gens));
}

std::pair<MonomialIdeal, MonomialIdeal> split_at_variable(const MonomialIdeal& ideal, int var) {
  std::vector<Monomial> with;
  std::vector<Monomial> without;
  for (Monomial g : ideal.generators()) (g.contains(var) ? with : without).push_back(g);
  if (with.empty()) {
    throw ParameterError("x" + std::to_string(var + 1) + " divides no generator");
  }
  return {MonomialIdeal(ideal.n_vars(), std::move(with)),
          MonomialIdeal(ideal.n_vars(), std::move(without))};
}

MonomialIdeal relabel(const MonomialIdeal& ideal, const std::vector<int>& mapping, int n_vars) {
  if (static_cast<int>(mapping.size()) < ideal.n_vars()) {
    throw ParameterError("relabel mapping shorter than the variable count");
  }
  std::vector<Monomial> gens;
  for (Monomial g : ideal.generators()) {
    VertexMask support = 0;
    for (int v : members(g.support())) {
      if (mapping[v] < 0 || mapping[v] >= n_vars) {
        throw ParameterError("relabel target out of range");
      }
      if (support & bit(mapping[v])) throw ParameterError("relabel mapping is not injective");
      support |= bit(mapping[v]);
    }
    gens.emplace_back(support);
  }
  return MonomialIdeal(n_vars, std::move(gens));
}

MonomialIdeal extend_universe(const MonomialIdeal& ideal, int n_vars) {
  if (n_vars < ideal.n_vars()) throw ParameterError("cannot shrink the variable universe");
  return MonomialIdeal(n_vars, ideal.generators());
}

}  // namespace nil
