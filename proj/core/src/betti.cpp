#include "nil/betti.hpp"

#include <algorithm>
#include <thread>

#include "nil/error.hpp"
#include "nil/linalg.hpp"
#include "nil/simplicial.hpp"

namespace nil {

std::int64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::int64_t count) {
  if (count == 0) return;
  std::int64_t& slot = entries_[{i, j}];
  slot += count;
  if (slot == 0) entries_.erase({i, j});
}

std::optional<int> BettiTable::regularity() const {
  std::optional<int> out;
  for (const auto& [key, count] : entries_) {
    out = std::max(out.value_or(key.second - key.first), key.second - key.first);
  }
  return out;
}

std::optional<int> BettiTable::projective_dimension() const {
  if (entries_.empty()) return std::nullopt;
  int pd = 0;
  for (const auto& [key, count] : entries_) pd = std::max(pd, key.first);
  return pd;
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t sum = 0;
  for (const auto& [key, count] : entries_) {
    if (key.first == i) sum += count;
  }
  return sum;
}

int regularity(const BettiTable& table) {
  auto reg = table.regularity();
  if (!reg) throw ParameterError("regularity of an empty Betti table");
  return *reg;
}

int projective_dimension(const BettiTable& table) {
  auto pd = table.projective_dimension();
  if (!pd) throw ParameterError("projective dimension of an empty Betti table");
  return *pd;
}

namespace {

void check_field(std::uint32_t p) {
  if (!is_prime(p) || p >= (std::uint32_t{1} << 31)) {
    throw ParameterError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
}

void require_proper(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw DomainError("the unit ideal has no Betti table");
}

}  // namespace

BettiTable betti_table_hochster(const MonomialIdeal& ideal, const HochsterOptions& options,
                                const Limits& limits) {
  require_proper(ideal);
  check_field(options.field_char);
  const int n = ideal.n_vars();
  if (n > std::min(limits.hochster_vars, 40)) {
    throw SizeError("hochster_vars", std::min(limits.hochster_vars, 40), n);
  }

  const auto& gens = ideal.generators();
  std::vector<VertexMask> faces;
  const VertexMask all = full_mask(n);
  for (VertexMask f = 0;; ++f) {
    bool face = std::none_of(gens.begin(), gens.end(),
                             [&](Monomial g) { return (g.support() & ~f) == 0; });
    if (face) faces.push_back(f);
    if (f == all) break;
  }

  const std::uint64_t subsets = std::uint64_t{1} << n;
  auto accumulate = [&](std::uint64_t first, std::uint64_t stride, BettiTable& out) {
    std::vector<VertexMask> local;
    for (std::uint64_t w = first; w < subsets; w += stride) {
      if (options.prune_cones) {
        VertexMask covered = 0;
        for (Monomial g : gens) {
          if ((g.support() & ~w) == 0) covered |= g.support();
        }
        if (covered != w) continue;
      }
      local.clear();
      for (VertexMask f : faces) {
        if ((f & ~w) == 0) local.push_back(f);
      }
      const int j = popcount(w);
      HomologyProfile h = reduced_homology_of_faces(local, options.field_char);
      for (const auto& [d, rank] : h.ranks) {
        if (rank != 0) out.add(j - d - 1, j, rank);
      }
    }
  };

  BettiTable table(n, options.field_char);
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    accumulate(0, 1, table);
    return table;
  }
  std::vector<BettiTable> partial(jobs, BettiTable(n, options.field_char));
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      accumulate(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(jobs), partial[t]);
    });
  }
  for (auto& w : workers) w.join();
  for (const BettiTable& part : partial) {
    for (const auto& [key, count] : part.entries()) table.add(key.first, key.second, count);
  }
  return table;
}

BettiTable betti_table_hochster(const MonomialIdeal& ideal, std::uint32_t field_char) {
  HochsterOptions options;
  options.field_char = field_char;
  return betti_table_hochster(ideal, options);
}

BettiTable betti_table_taylor_oracle(const MonomialIdeal& ideal, std::uint32_t field_char,
                                     const Limits& limits) {
  require_proper(ideal);
  check_field(field_char);
  const auto& gens = ideal.generators();
  const int g = static_cast<int>(gens.size());
  if (g > limits.taylor_generators) {
    throw SizeError("taylor_generators", limits.taylor_generators, g);
  }

  // Subsets of generators grouped by the support of their lcm. The Taylor
  // differential is multigraded, so each group is its own complex.
  const std::uint32_t subsets = std::uint32_t{1} << g;
  std::vector<VertexMask> lcm(subsets, 0);
  for (std::uint32_t s = 1; s < subsets; ++s) {
    int top = 31 - std::countl_zero(s);
    lcm[s] = lcm[s & ~(std::uint32_t{1} << top)] | gens[top].support();
  }
  std::map<VertexMask, std::vector<std::uint32_t>> groups;
  for (std::uint32_t s = 0; s < subsets; ++s) groups[lcm[s]].push_back(s);

  BettiTable table(ideal.n_vars(), field_char);
  for (const auto& [support, members_of] : groups) {
    std::vector<std::vector<std::uint32_t>> by_size(g + 2);
    for (std::uint32_t s : members_of) by_size[std::popcount(s)].push_back(s);
    std::vector<std::int64_t> rank(g + 2, 0);  // rank[i]: C_i -> C_{i-1}
    for (int i = 1; i <= g; ++i) {
      if (by_size[i].empty() || by_size[i - 1].empty()) continue;
      std::map<std::uint32_t, std::uint32_t> row_of;
      for (std::uint32_t r = 0; r < by_size[i - 1].size(); ++r) row_of[by_size[i - 1][r]] = r;
      std::vector<Entry> entries;
      for (std::uint32_t col = 0; col < by_size[i].size(); ++col) {
        std::uint32_t s = by_size[i][col];
        int sign = 1;
        for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
          std::uint32_t drop = rest & (~rest + 1);
          auto it = row_of.find(s & ~drop);
          if (it != row_of.end()) entries.push_back({it->second, col, sign});
          sign = -sign;
        }
      }
      rank[i] = static_cast<std::int64_t>(
          rank_mod_p(by_size[i - 1].size(), by_size[i].size(), entries, field_char));
    }
    const int degree = popcount(support);
    for (int i = 0; i <= g; ++i) {
      std::int64_t dim = static_cast<std::int64_t>(by_size[i].size()) - rank[i] - rank[i + 1];
      if (dim != 0) table.add(i, degree, dim);
    }
  }
  return table;
}

BettiTable convolve_tables(const BettiTable& a, const BettiTable& b) {
  if (a.field_char() != b.field_char()) {
    throw ParameterError("cannot convolve Betti tables over different fields");
  }
  BettiTable out(a.n_vars() + b.n_vars(), a.field_char());
  for (const auto& [ka, ca] : a.entries()) {
    for (const auto& [kb, cb] : b.entries()) {
      out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return out;
}

bool ShiftCheck::ok() const {
  bool zero = original.entries().size() == 1 && original.at(0, 0) == 1;
  return identity_holds && pd_unchanged && (zero || reg_increments);
}

ShiftCheck shift_check_extra_variable(const MonomialIdeal& ideal, std::uint32_t field_char,
                                      const Limits& limits) {
  const int n = ideal.n_vars();
  MonomialIdeal scaled = scale_by_monomial(extend_universe(ideal, n + 1), Monomial(bit(n)));
  HochsterOptions options;
  options.field_char = field_char;
  ShiftCheck check;
  check.original = betti_table_hochster(ideal, options, limits);
  check.shifted = betti_table_hochster(scaled, options, limits);

  bool same = check.original.at(0, 0) == check.shifted.at(0, 0);
  for (const auto& [key, count] : check.original.entries()) {
    if (key.first >= 1 && check.shifted.at(key.first, key.second + 1) != count) same = false;
  }
  for (const auto& [key, count] : check.shifted.entries()) {
    if (key.first >= 1 && check.original.at(key.first, key.second - 1) != count) same = false;
  }
  check.identity_holds = same;
  check.reg_increments = regularity(check.shifted) == regularity(check.original) + 1;
  check.pd_unchanged = projective_dimension(check.shifted) == projective_dimension(check.original);
  return check;
}

SplitReport betti_splitting_report(const MonomialIdeal& ideal, int var, std::uint32_t field_char,
                                   const Limits& limits) {
  SplitReport report;
  report.variable = var;
  std::tie(report.j_part, report.k_part) = split_at_variable(ideal, var);
  report.intersection = intersect_ideals(report.j_part, report.k_part);

  HochsterOptions options;
  options.field_char = field_char;
  const BettiTable ti = betti_table_hochster(ideal, options, limits);
  const BettiTable tj = betti_table_hochster(report.j_part, options, limits);
  const BettiTable tk = betti_table_hochster(report.k_part, options, limits);
  const BettiTable tjk = betti_table_hochster(report.intersection, options, limits);

  // Ideal Betti numbers beta_{i,j}(I) sit at (i + 1, j) in the quotient table.
  std::map<BettiTable::Key, bool> keys;
  for (const BettiTable* t : {&ti, &tj, &tk}) {
    for (const auto& [key, count] : t->entries()) {
      if (key.first >= 1) keys[{key.first - 1, key.second}] = true;
    }
  }
  for (const auto& [key, count] : tjk.entries()) {
    if (key.first >= 1) keys[{key.first, key.second}] = true;
  }
  report.verdict = true;
  for (const auto& [key, unused] : keys) {
    SplitRow row;
    row.i = key.first;
    row.j = key.second;
    row.beta_i = ti.ideal_betti(row.i, row.j);
    row.beta_j = tj.ideal_betti(row.i, row.j);
    row.beta_k = tk.ideal_betti(row.i, row.j);
    row.beta_jk_shifted = row.i >= 1 ? tjk.ideal_betti(row.i - 1, row.j) : 0;
    row.residual = row.beta_i - row.beta_j - row.beta_k - row.beta_jk_shifted;
    if (row.residual != 0) report.verdict = false;
    report.rows.push_back(row);
  }
  report.pd_i = projective_dimension(ti);
  report.pd_j = projective_dimension(tj);
  report.pd_k = projective_dimension(tk);
  report.pd_jk = projective_dimension(tjk);
  report.pd_recursion_holds =
      report.pd_i == std::max({report.pd_j, report.pd_k, report.pd_jk + 1});
  return report;
}

}  // namespace nil
