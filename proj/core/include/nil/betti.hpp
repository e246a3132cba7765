#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nil/limits.hpp"
#include "nil/monomial.hpp"

namespace nil {

/// Graded Betti numbers beta_{i,j}(R/I) over GF(p). Only nonzero entries are
/// stored.
class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (homological index i, internal degree j)

  BettiTable() = default;
  BettiTable(int n_vars, std::uint32_t field_char) : n_vars_(n_vars), field_char_(field_char) {}

  int n_vars() const { return n_vars_; }
  std::uint32_t field_char() const { return field_char_; }
  const std::map<Key, std::int64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  std::int64_t at(int i, int j) const;
  void add(int i, int j, std::int64_t count);

  /// max j - i over nonzero entries.
  std::optional<int> regularity() const;
  /// max i over nonzero entries.
  std::optional<int> projective_dimension() const;
  std::int64_t total(int i) const;

  /// beta_{i,j}(I) = beta_{i+1,j}(R/I).
  std::int64_t ideal_betti(int i, int j) const { return at(i + 1, j); }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int n_vars_ = 0;
  std::uint32_t field_char_ = 2;
  std::map<Key, std::int64_t> entries_;
};

/// Throw ParameterError on an empty table.
int regularity(const BettiTable& table);
int projective_dimension(const BettiTable& table);

struct HochsterOptions {
  std::uint32_t field_char = 2;
  int jobs = 1;
  /// Skip subsets W whose induced complex is a cone (W is not a union of
  /// generator supports); their homology is zero.
  bool prune_cones = true;
};

/// beta_{i,j}(R/I) = sum over |W| = j of dim reduced H_{j-i-1}(Δ(I)|_W).
BettiTable betti_table_hochster(const MonomialIdeal& ideal, const HochsterOptions& options,
                                const Limits& limits = default_limits());
BettiTable betti_table_hochster(const MonomialIdeal& ideal, std::uint32_t field_char = 2);

/// Tor of R/I against the residue field from the Taylor complex. Independent
/// of the Stanley-Reisner machinery.
BettiTable betti_table_taylor_oracle(const MonomialIdeal& ideal, std::uint32_t field_char = 2,
                                     const Limits& limits = default_limits());

/// Table of R1/I1 ⊗ R2/I2 for ideals in disjoint variables.
BettiTable convolve_tables(const BettiTable& a, const BettiTable& b);

struct ShiftCheck {
  BettiTable original;  // R/I
  BettiTable shifted;   // R'/x_{n+1} I
  bool identity_holds = false;  // beta_{i,j}(R/I) = beta_{i,j+1}(R'/I') for i >= 1
  bool reg_increments = false;
  bool pd_unchanged = false;

  /// The regularity claim needs I != 0, where it is checked; otherwise only
  /// the table identity and pd are required.
  bool ok() const;
};

ShiftCheck shift_check_extra_variable(const MonomialIdeal& ideal, std::uint32_t field_char = 2,
                                      const Limits& limits = default_limits());

struct SplitRow {
  int i = 0;
  int j = 0;
  std::int64_t beta_i = 0;          // beta_{i,j}(I)
  std::int64_t beta_j = 0;          // beta_{i,j}(J)
  std::int64_t beta_k = 0;          // beta_{i,j}(K)
  std::int64_t beta_jk_shifted = 0; // beta_{i-1,j}(J ∩ K)
  std::int64_t residual = 0;
};

struct SplitReport {
  int variable = 0;
  MonomialIdeal j_part;
  MonomialIdeal k_part;
  MonomialIdeal intersection;
  std::vector<SplitRow> rows;  // every (i,j) where some term is nonzero
  bool verdict = false;        // all residuals zero
  bool pd_recursion_holds = false;
  int pd_i = 0;
  int pd_j = 0;
  int pd_k = 0;
  int pd_jk = 0;
};

/// Splits the generators of I by divisibility by x_var and compares the
/// Betti numbers of I with those of J, K and J ∩ K.
SplitReport betti_splitting_report(const MonomialIdeal& ideal, int var,
                                   std::uint32_t field_char = 2,
                                   const Limits& limits = default_limits());

}  // namespace nil
