#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nil/graph.hpp"

namespace nil {

/// Squarefree monomial x_F, stored as its support F.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(VertexMask support) : support_(support) {}
  static Monomial from_indices(const std::vector<int>& indices);

  VertexMask support() const { return support_; }
  int degree() const { return popcount(support_); }
  bool is_one() const { return support_ == 0; }
  bool contains(int var) const { return (support_ >> var) & 1U; }

  bool divides(Monomial other) const { return (support_ & ~other.support_) == 0; }
  Monomial lcm(Monomial other) const { return Monomial(support_ | other.support_); }
  Monomial gcd(Monomial other) const { return Monomial(support_ & other.support_); }
  /// this / gcd(this, other)
  Monomial colon(Monomial other) const { return Monomial(support_ & ~other.support_); }
  /// Product; throws DomainError when the supports overlap (not squarefree).
  Monomial times(Monomial other) const;

  friend bool operator==(Monomial a, Monomial b) { return a.support_ == b.support_; }

 private:
  VertexMask support_ = 0;
};

/// Lexicographic order of the ascending index sequences:
/// x1x2 < x1x2x3 < x1x3 < x2.
bool lex_less(Monomial a, Monomial b);

/// Squarefree monomial ideal of K[x_1..x_n] held by its minimal generators.
///
/// The zero ideal has no generators; the unit ideal has the single generator
/// 1 and is reported by is_unit().
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes `gens`. Throws ParameterError if a support leaves the
  /// universe.
  MonomialIdeal(int n_vars, std::vector<Monomial> gens);

  static MonomialIdeal zero(int n_vars) { return MonomialIdeal(n_vars, {}); }
  static MonomialIdeal unit(int n_vars) { return MonomialIdeal(n_vars, {Monomial()}); }

  int n_vars() const { return n_vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  /// Union of generator supports.
  VertexMask support() const;

  bool contains(Monomial m) const;
  /// this ⊆ other as ideals.
  bool is_subset_of(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_vars_ == b.n_vars_ && a.gens_ == b.gens_;
  }

 private:
  int n_vars_ = 0;
  std::vector<Monomial> gens_;  // minimal, sorted by lex_less
};

/// Keeps exactly the divisibility-minimal elements, sorted by lex_less.
std::vector<Monomial> minimal_elements(std::vector<Monomial> gens);

MonomialIdeal minimalize(int n_vars, std::vector<Monomial> gens);

/// NI(G): generated by the products over closed neighborhoods.
MonomialIdeal closed_neighborhood_ideal(const Graph& g);

MonomialIdeal edge_ideal(const Graph& g);

/// J_t(G): products over the vertex sets of paths on t vertices. Throws
/// ParameterError for t < 1; t > n gives the zero ideal.
MonomialIdeal path_ideal(const Graph& g, int t);

/// (I : m), generated by g / gcd(g, m).
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, Monomial m);
MonomialIdeal add_ideals(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect_ideals(const MonomialIdeal& a, const MonomialIdeal& b);
/// m * I. Throws DomainError when m shares a variable with a generator.
MonomialIdeal scale_by_monomial(const MonomialIdeal& ideal, Monomial m);
/// <I, x_var>
MonomialIdeal add_variable(const MonomialIdeal& ideal, int var);

/// J generated by the generators divisible by x_var, K by the rest. Throws
/// ParameterError if no generator involves x_var.
std::pair<MonomialIdeal, MonomialIdeal> split_at_variable(const MonomialIdeal& ideal, int var);

/// Moves variable i to mapping[i] in a universe of `n_vars`; the mapping must
/// be injective on the support.
MonomialIdeal relabel(const MonomialIdeal& ideal, const std::vector<int>& mapping, int n_vars);

/// Same generators in a larger universe of `n_vars` variables.
MonomialIdeal extend_universe(const MonomialIdeal& ideal, int n_vars);

}  // namespace nil
