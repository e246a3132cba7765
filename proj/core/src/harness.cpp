#include "nil/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "nil/enumerate.hpp"
#include "nil/error.hpp"
#include "nil/simplicial.hpp"

namespace nil {

json SuiteReport::to_json(bool with_time) const {
  json fails = json::array();
  for (const Failure& f : failures) {
    fails.push_back({{"graph", f.graph},
                     {"tag", f.tag},
                     {"expected", f.expected},
                     {"actual", f.actual},
                     {"note", f.note}});
  }
  json out = {{"suite", suite},     {"params", params},     {"cases", cases},
              {"failures", fails},  {"findings", findings}, {"seed", seed}};
  if (with_time) out["elapsed_ms"] = elapsed_ms;
  return out;
}

MonomialIdeal random_ideal(std::uint64_t seed, int max_vars, int max_gens) {
  std::mt19937_64 rng(seed);
  const int n = std::uniform_int_distribution<int>(1, max_vars)(rng);
  const int count = std::uniform_int_distribution<int>(0, max_gens)(rng);
  std::vector<Monomial> gens;
  for (int k = 0; k < count; ++k) {
    VertexMask support = std::uniform_int_distribution<VertexMask>(1, full_mask(n))(rng);
    gens.emplace_back(support);
  }
  return MonomialIdeal(n, std::move(gens));
}

namespace {

/// Shared state of one suite run. Read-only apart from the cache, which
/// synchronizes itself.
struct Context {
  SuiteOptions options;

  BettiTable table(const Graph& g, const std::string& kind, std::uint32_t p) const {
    if (options.cache != nullptr) return options.cache->table_for(g, kind, p, options.limits);
    HochsterOptions h;
    h.field_char = p;
    return betti_table_hochster(graph_ideal(g, kind), h, options.limits);
  }

  BettiTable table(const MonomialIdeal& ideal, std::uint32_t p) const {
    HochsterOptions h;
    h.field_char = p;
    return betti_table_hochster(ideal, h, options.limits);
  }

  /// Table of NI(g) over the primary field, cross-checked over the second
  /// field when one is set.
  BettiTable ni_table(const Graph& g, const std::string& encoding, CaseOutcome& out) const {
    BettiTable t = table(g, "ni", options.p);
    if (options.cross_p && *options.cross_p != options.p) {
      BettiTable q = table(g, "ni", *options.cross_p);
      if (q.entries() != t.entries()) {
        out.findings.push_back({{"kind", "field_discrepancy"},
                                {"graph", encoding},
                                {"p", options.p},
                                {"q", *options.cross_p},
                                {"table_p", betti_to_json(t)},
                                {"table_q", betti_to_json(q)}});
      }
    }
    return t;
  }
};

void fail(CaseOutcome& out, const CaseInput& in, json expected, json actual, std::string note) {
  out.failures.push_back({in.encoding, in.tag, std::move(expected), std::move(actual), std::move(note)});
}

void expect_eq(CaseOutcome& out, const CaseInput& in, const std::string& what, json expected,
               json actual) {
  if (expected != actual) fail(out, in, std::move(expected), std::move(actual), what);
}

std::string ideal_encoding(const MonomialIdeal& ideal) { return "ideal:" + ideal_to_json(ideal).dump(); }

MonomialIdeal decode_ideal(const std::string& encoding) {
  if (encoding.rfind("ideal:", 0) != 0) throw ParseError(1, "not an ideal encoding");
  return ideal_from_json(json::parse(encoding.substr(6)));
}

CaseInput graph_case(const std::string& tag, const Graph& g) { return {tag, encode_graph(g)}; }

json ideal_json(const MonomialIdeal& ideal) { return ideal_to_json(ideal); }

/// NI of the subgraph induced on `keep`, written in the variables of `g`.
MonomialIdeal embedded_ni(const Graph& g, VertexMask keep) {
  MonomialIdeal local = closed_neighborhood_ideal(g.induced(keep));
  return relabel(local, members(keep), g.order());
}

int cycle_pd_formula(int n) {
  if (n % 4 == 0) return n / 2;
  return (n - n % 4 + 2) / 2;
}

bool is_star(const Graph& g) {
  const int n = g.order();
  if (n < 2 || g.size() != n - 1) return false;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) return true;
  }
  return false;
}

/// Independent chordality test: no induced cycle on four or more vertices.
bool chordal_by_cycles(const Graph& g) {
  const int n = g.order();
  for (VertexMask w = 0; w < bit(n); ++w) {
    if (popcount(w) < 4) continue;
    Graph h = g.induced(w);
    bool all_two = true;
    for (int v = 0; v < h.order(); ++v) all_two = all_two && h.degree(v) == 2;
    if (all_two && structure_predicates(h).components.size() == 1) return false;
  }
  return true;
}

std::vector<Graph> graph_classes_up_to(int n_max, const Limits& limits) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    for (Graph& g : unlabeled_graphs(n, false, limits)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> labeled_graphs_up_to(int n_max, const Limits& limits) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    for_each_labeled_graph(n, false, [&](const Graph& g) { out.push_back(g); }, limits);
  }
  return out;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Suites. Each one lists its cases and checks a single case.

struct Suite {
  SuiteInfo info;
  std::function<std::vector<CaseInput>(const Context&, int n_max)> cases;
  std::function<void(const Context&, const CaseInput&, CaseOutcome&)> check;
  /// Optional summary over all outcomes, in emission order.
  std::function<void(const Context&, const std::vector<std::pair<CaseInput, CaseOutcome>>&,
                     SuiteReport&)>
      summarize;
};

// forest-equality ------------------------------------------------------------

std::vector<CaseInput> forest_cases(const Context& ctx, int n_max) {
  std::vector<CaseInput> out;
  std::vector<std::vector<Graph>> trees(n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    trees[n] = unlabeled_trees(n, ctx.options.limits);
    for (const Graph& t : trees[n]) out.push_back(graph_case("tree", t));
  }
  // Random forests: two or three trees with at most 12 vertices in total.
  std::mt19937_64 rng(ctx.options.seed);
  const int want = ctx.options.samples > 0 ? ctx.options.samples : 30;
  std::set<CanonicalForm> seen;
  for (int attempt = 0; attempt < 50 * want && static_cast<int>(seen.size()) < want; ++attempt) {
    int parts = std::uniform_int_distribution<int>(2, 3)(rng);
    Graph forest(0);
    for (int k = 0; k < parts; ++k) {
      int size = std::uniform_int_distribution<int>(1, std::min(n_max, 6))(rng);
      const auto& pool = trees[size];
      const Graph& t = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      if (forest.order() + t.order() > 12) break;
      forest = disjoint_union(forest, t);
    }
    if (forest.order() == 0) continue;
    CanonicalForm form = canonical_form(forest);
    if (seen.insert(form).second) out.push_back(graph_case("forest", from_canonical(form)));
  }
  for (int n = 2; n <= 8; ++n) out.push_back(graph_case("star", star_graph(n)));
  out.push_back(graph_case("path3", path_graph(3)));
  return out;
}

void forest_check(const Context& ctx, const CaseInput& in, CaseOutcome& out) {
  Graph g = decode_graph(in.encoding);
  if (!structure_predicates(g).is_forest) {
    fail(out, in, "forest", "not a forest", "case generator produced a non-forest");
    return;
  }
  BettiTable t = ctx.ni_table(g, in.encoding, out);
  const int reg = regularity(t);
  const int a = matching_number(g);
  out.data = {{"n", g.order()}, {"reg", reg}, {"a", a}};
  if (in.tag == "star") {
    expect_eq(out, in, "reg of a star", 1, reg);
    expect_eq(out, in, "matching number of a star", 1, a);
  } else if (in.tag == "path3") {
    expect_eq(out, in, "P_3 (reg, pd, a)", json::array({1, 2, 1}),
              json::array({reg, projective_dimension(t), a}));
  } else {
    expect_eq(out, in, "reg = matching number", a, reg);
  }
}

void forest_summary(const Context&, const std::vector<std::pair<CaseInput, CaseOutcome>>& all,
                    SuiteReport& report) {
  std::map<int, int> per_n;
  int forests = 0;
  for (const auto& [in, out] : all) {
    if (in.tag == "tree") ++per_n[out.data.value("n", 0)];
    if (in.tag == "forest") ++forests;
  }
  json counts = json::object();
  for (auto [n, c] : per_n) counts[std::to_string(n)] = c;
  report.params["tree_classes"] = counts;
  report.params["random_forests"] = forests;
}

// lower-bound ---------------------------------------------------------------

std::vector<CaseInput> lower_cases(const Context& ctx, int n_max) {
  std::vector<CaseInput> out;
  for (const Graph& g : graph_classes_up_to(n_max, ctx.options.limits)) {
    out.push_back(graph_case("graph", g));
  }
  out.push_back(graph_case("c7", cycle_graph(7)));
  for (int m = 3; m <= 7; ++m) out.push_back(graph_case("complete", complete_graph(m)));
  return out;
}

void lower_check(const Context& ctx, const CaseInput& in, CaseOutcome& out) {
  Graph g = decode_graph(in.encoding);
  BettiTable t = ctx.ni_table(g, in.encoding, out);
  const int reg = regularity(t);
  const int a = matching_number(g);
  const int n = g.order();
  out.data = {{"n", n}, {"reg", reg}, {"a", a}};
  if (in.tag == "c7") {
    expect_eq(out, in, "C_7 (reg, a)", json::array({4, 3}), json::array({reg, a}));
    return;
  }
  if (in.tag == "complete") {
    expect_eq(out, in, "K_m (reg, a)", json::array({n - 1, n / 2}), json::array({reg, a}));
    return;
  }
  if (reg < a) fail(out, in, "reg >= " + std::to_string(a), reg, "reg >= matching number");

  auto hdim = homological_dimension(dominance_complex(g, ctx.options.limits), ctx.options.p,
                                    ctx.options.limits);
  const int chi = clique_cover_number(g, ctx.options.limits);
  json chain = {{"reg", reg}, {"hdim_plus_1", hdim ? json(*hdim + 1) : json(nullptr)},
                {"n_minus_chi", n - chi}, {"a", a}};
  out.data["chain"] = chain;
  if (!hdim) {
    fail(out, in, "h-dim(D(G)) defined", chain, "dominance complex has no reduced homology");
    return;
  }
  if (!(reg >= *hdim + 1 && *hdim + 1 >= n - chi && n - chi >= a)) {
    fail(out, in, "reg >= hdim+1 >= n-chi(G^c) >= a", chain, "inequality chain");
  }
}

void lower_summary(const Context&, const std::vector<std::pair<CaseInput, CaseOutcome>>& all,
                   SuiteReport& report) {
  std::map<int, std::pair<int, int>> census;  // n -> (reg == a, reg > a)
  for (const auto& [in, out] : all) {
    if (in.tag != "graph" || !out.data.is_object()) continue;
    int n = out.data["n"];
    if (out.data["reg"] == out.data["a"]) {
      ++census[n].first;
    } else {
      ++census[n].second;
    }
  }
  json rows = json::array();
  json classes = json::object();
  for (auto [n, c] : census) {
    rows.push_back({{"n", n}, {"reg_equals_a", c.first}, {"reg_exceeds_a", c.second}});
    classes[std::to_string(n)] = c.first + c.second;
  }
  report.params["graph_classes"] = classes;
  report.findings.push_back({{"kind", "equality_census"}, {"rows", rows}});
}

// pd-bounds -----------------------------------------------------------------

std::vector<CaseInput> pd_cases(const Context& ctx, int n_max) {
  std::vector<CaseInput> out;
  for (int n = 1; n <= n_max; ++n) {
    for (const Graph& g : unlabeled_forests(n, ctx.options.limits)) out.push_back(graph_case("forest", g));
  }
  for (int n = 3; n <= n_max; ++n) {
    for (const Graph& g : unlabeled_unicyclic(n, ctx.options.limits)) {
      out.push_back(graph_case("unicyclic", g));
    }
  }
  for (int m = 4; m <= 8; ++m) out.push_back(graph_case("complete", complete_graph(m)));
  out.push_back(graph_case("c5", cycle_graph(5)));
  return out;
}

void pd_check(const Context& ctx, const CaseInput& in, CaseOutcome& out) {
  Graph g = decode_graph(in.encoding);
  BettiTable t = ctx.ni_table(g, in.encoding, out);
  const int pd = projective_dimension(t);
  const int a = matching_number(g);
  const int n = g.order();
  out.data = {{"n", n}, {"pd", pd}, {"a", a}};
  if (in.tag == "complete") {
    expect_eq(out, in, "K_m (pd, a)", json::array({1, n / 2}), json::array({pd, a}));
    if (pd < a) {
      out.findings.push_back({{"kind", "expected_reversal"}, {"graph", in.encoding}, {"pd", pd}, {"a", a}});
    }
    return;
  }
  if (in.tag == "c5") {
    expect_eq(out, in, "C_5 (pd, a)", json::array({3, 2}), json::array({pd, a}));
    return;
  }
  Structure s = structure_predicates(g);
  if (in.tag == "forest" ? !s.is_forest : !s.is_unicyclic) {
    fail(out, in, in.tag, "wrong graph class", "case generator produced the wrong class");
  }
  if (pd < a) fail(out, in, "pd >= " + std::to_string(a), pd, "pd >= matching number");
}

// closed-forms ----------------------------------------------------------------

std::vector<CaseInput> closed_cases(const Context& ctx, int) {
  std::vector<CaseInput> out;
  for (int n = 3; n <= 12; ++n) out.push_back(graph_case("cycle", cycle_graph(n)));
  for (int n = 3; n <= 10; ++n) out.push_back(graph_case("wheel", wheel_graph(n + 1)));
  for (const Graph& g : graph_classes_up_to(4, ctx.options.limits)) {
    out.push_back(graph_case("whiskered", g));
  }
  for (int n = 2; n <= 5; ++n) out.push_back(graph_case("bipartite_n2", complete_bipartite_graph(n, 2)));
  for (int m = 2; m <= 8; ++m) out.push_back(graph_case("complete", complete_graph(m)));
  out.push_back(graph_case("c7", cycle_graph(7)));
  out.push_back(graph_case("c5", cycle_graph(5)));
  return out;
}

void closed_check(const Context& ctx, const CaseInput& in, CaseOutcome& out) {
  Graph g = decode_graph(in.encoding);
  const int n = g.order();
  if (in.tag == "cycle") {
    BettiTable t = ctx.ni_table(g, in.encoding, out);
    expect_eq(out, in, "pd of C_n", cycle_pd_formula(n), projective_dimension(t));
    out.data = {{"n", n}, {"pd", projective_dimension(t)}, {"reg", regularity(t)}};
  } else if (in.tag == "wheel") {
    const int rim = n - 1;
    const int a = matching_number(g);
    expect_eq(out, in, "matching number of W_{n+1}", (rim + 1) / 2, a);
    const int expected = rim % 4 == 3 ? a - 1 : a;
    BettiTable t = ctx.ni_table(g, in.encoding, out);
    expect_eq(out, in, "pd of W_{n+1}, direct", expected, projective_dimension(t));
    expect_eq(out, in, "pd of W_{n+1}, rim formula", cycle_pd_formula(rim), expected);

    // Hub scaling: NI(W) = x_hub * NI(C_rim) with the rim on vertices 1..rim.
    std::vector<int> shift(rim);
    for (int i = 0; i < rim; ++i) shift[i] = i + 1;
    MonomialIdeal rim_ni = closed_neighborhood_ideal(cycle_graph(rim));
    MonomialIdeal scaled = scale_by_monomial(relabel(rim_ni, shift, n), Monomial(bit(0)));
    if (!(scaled == closed_neighborhood_ideal(g))) {
      fail(out, in, ideal_json(scaled), ideal_json(closed_neighborhood_ideal(g)),
           "NI(W) = x * NI(C_n)");
    }
    ShiftCheck sc = shift_check_extra_variable(rim_ni, ctx.options.p, ctx.options.limits);
    if (!sc.ok()) fail(out, in, "shift identity", betti_to_json(sc.shifted), "hub scaling shift");
    expect_eq(out, in, "pd of W_{n+1}, via hub scaling", expected, projective_dimension(sc.original));
    out.data = {{"n", rim}, {"pd", projective_dimension(t)}, {"a", a}};
  } else if (in.tag == "whiskered") {
    Graph w = whisker_all(g);
    BettiTable t = ctx.ni_table(w, encode_graph(w), out);
    const int a = matching_number(w);
    expect_eq(out, in, "whiskered (reg, pd, a)", json::array({n, n, n}),
              json::array({regularity(t), projective_dimension(t), a}));
  } else if (in.tag == "bipartite_n2") {
    BettiTable t = ctx.ni_table(g, in.encoding, out);
    const int m = n - 2;
    if (regularity(t) < m) fail(out, in, "reg >= " + std::to_string(m), regularity(t), "K_{n,2}");
    out.data = {{"n", m}, {"reg", regularity(t)}};
  } else if (in.tag == "complete") {
    BettiTable t = ctx.ni_table(g, in.encoding, out);
    expect_eq(out, in, "K_m (reg, pd)", json::array({n - 1, 1}),
              json::array({regularity(t), projective_dimension(t)}));
  } else if (in.tag == "c7") {
    expect_eq(out, in, "reg of C_7", 4, regularity(ctx.ni_table(g, in.encoding, out)));
  } else if (in.tag == "c5") {
    expect_eq(out, in, "pd of C_5", 3, projective_dimension(ctx.ni_table(g, in.encoding, out)));
  } else {
    throw ParameterError("unknown case tag '" + in.tag + "'");
  }
}

// structural-identities ---------------------------------------------------------

Graph figure_tree() {
  // Root z = 0, y1..y7 = 1..7.
  return Graph(8, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {4, 6}, {4, 7}});
}

std::vector<CaseInput> structural_cases(const Context& ctx, int n_max) {
  std::vector<CaseInput> out;
  for (const Graph& g : graph_classes_up_to(n_max, ctx.options.limits)) {
    Structure s = structure_predicates(g);
    if (s.is_chordal) out.push_back(graph_case("split", g));
    if (s.components.size() > 1) out.push_back(graph_case("components", g));
    if (s.is_tree && g.order() >= 3 && !is_star(g)) out.push_back(graph_case("tree_colon", g));
  }
  out.push_back(graph_case("tree_colon", figure_tree()));
  out.push_back(graph_case("components", disjoint_union(path_graph(3), cycle_graph(3))));
  const int samples = ctx.options.samples > 0 ? ctx.options.samples : 60;
  std::mt19937_64 rng(ctx.options.seed ^ 0x5eedULL);
  for (int k = 0; k < samples; ++k) {
    out.push_back({"shift", ideal_encoding(random_ideal(rng(), 7, 6))});
  }
  return out;
}

void split_check(const Context& ctx, const CaseInput& in, const Graph& g, CaseOutcome& out) {
  MonomialIdeal ni = closed_neighborhood_ideal(g);
  int splits = 0;
  for (int v : members(simplicial_vertices(g))) {
    SplitReport r = betti_splitting_report(ni, v, ctx.options.p, ctx.options.limits);
    ++splits;
    if (!r.verdict) fail(out, in, "zero residuals", split_report_to_json(r), "Betti splitting at x" + std::to_string(v + 1));
    if (!r.pd_recursion_holds) {
      fail(out, in, "pd recursion", split_report_to_json(r), "pd recursion at x" + std::to_string(v + 1));
    }
    VertexMask closed = closed_neighborhood(g, v);
    MonomialIdeal expected = scale_by_monomial(embedded_ni(g, g.vertices() & ~closed), Monomial(closed));
    if (!(expected == r.intersection)) {
      fail(out, in, ideal_json(expected), ideal_json(r.intersection),
           "J ∩ K = x_{N[v]} NI(G \\ N[v]) at x" + std::to_string(v + 1));
    }
  }
  out.data = {{"splits", splits}};
}

void tree_colon_check(const Context& ctx, const CaseInput& in, const Graph& t, CaseOutcome& out) {
  const int n = t.order();
  const MonomialIdeal ni = closed_neighborhood_ideal(t);
  std::set<int> done;
  int setups = 0;
  for (int root = 0; root < n; ++root) {
    RootedLevels lv = rooted_levels(t, root);
    if (lv.height < 2) continue;
    for (int leaf = 0; leaf < n; ++leaf) {
      if (lv.level[leaf] != lv.height) continue;
      int y = lowest(t.neighbors(leaf));
      if (!done.insert(y).second) continue;
      ++setups;
      VertexMask xs = 0;
      int b = -1;
      for (int u : members(t.neighbors(y))) {
        if (lv.level[u] == lv.height) xs |= bit(u);
        if (lv.level[u] == lv.height - 2) b = u;
      }
      const std::string where = "root x" + std::to_string(root + 1) + ", y = x" + std::to_string(y + 1);
      if (b < 0 || t.degree(b) < 2) {
        fail(out, in, "non-leaf b adjacent to y", b + 1, where);
        continue;
      }
      for (int x : members(xs)) {
        if (t.degree(x) != 1) fail(out, in, "x_i are leaves", x + 1, where);
      }
      const Monomial ym(bit(y));
      MonomialIdeal colon = colon_by_monomial(ni, ym);
      MonomialIdeal t1 = embedded_ni(t, t.vertices() & ~(xs | bit(y)));
      std::vector<Monomial> vars;
      for (int x : members(xs)) vars.emplace_back(bit(x));
      MonomialIdeal rhs = add_ideals(MonomialIdeal(n, vars), t1);
      if (!(colon == rhs)) fail(out, in, ideal_json(rhs), ideal_json(colon), "(NI(T):y) = <x_1..x_t> + NI(T'), " + where);

      MonomialIdeal plus_y = add_variable(ni, y);
      MonomialIdeal t2 = add_variable(embedded_ni(t, t.vertices() & ~xs), y);
      if (!(plus_y == t2)) fail(out, in, ideal_json(t2), ideal_json(plus_y), "<NI(T),y> = <NI(T''),y>, " + where);

      // Regularity bounds for colon and sum by y; a unit colon has no table.
      const int reg_i = regularity(ctx.table(ni, ctx.options.p));
      const int reg_plus = regularity(ctx.table(plus_y, ctx.options.p));
      if (reg_plus > reg_i) fail(out, in, "reg(R/<I,y>) <= " + std::to_string(reg_i), reg_plus, "bound (i), " + where);
      int bound = reg_plus;
      if (!colon.is_unit()) {
        const int reg_colon = regularity(ctx.table(colon, ctx.options.p));
        bound = std::max(bound, reg_colon + 1);
        const int reg_t1 = regularity(ctx.table(t1, ctx.options.p));
        expect_eq(out, in, "reg(R/(NI(T):y)) = reg(R/NI(T')), " + where, reg_t1, reg_colon);
      }
      if (reg_i > bound) fail(out, in, "reg(R/I) <= " + std::to_string(bound), reg_i, "bound (ii), " + where);
    }
  }
  out.data = {{"setups", setups}};
  if (setups == 0) fail(out, in, "at least one setup", 0, "tree without a deepest-leaf setup");
}

void components_check(const Context& ctx, const CaseInput& in, const Graph& g, CaseOutcome& out) {
  BettiTable whole = ctx.ni_table(g, in.encoding, out);
  BettiTable product;
  int reg_sum = 0;
  int pd_sum = 0;
  bool first = true;
  for (const Graph& c : component_graphs(g)) {
    BettiTable tc = ctx.table(c, "ni", ctx.options.p);
    reg_sum += regularity(tc);
    pd_sum += projective_dimension(tc);
    product = first ? tc : convolve_tables(product, tc);
    first = false;
  }
  if (whole.entries() != product.entries()) {
    fail(out, in, betti_to_json(product), betti_to_json(whole), "table = convolution of component tables");
  }
  expect_eq(out, in, "reg and pd add over components", json::array({reg_sum, pd_sum}),
            json::array({regularity(whole), projective_dimension(whole)}));
}

void structural_check(const Context& ctx, const CaseInput& in, CaseOutcome& out) {
  if (in.tag == "shift") {
    MonomialIdeal ideal = decode_ideal(in.encoding);
    ShiftCheck sc = shift_check_extra_variable(ideal, ctx.options.p, ctx.options.limits);
    if (!sc.ok()) {
      fail(out, in, betti_to_json(sc.original), betti_to_json(sc.shifted),
           "beta_{i,j}(R/I) = beta_{i,j+1}(R'/x I), reg + 1, same pd");
    }
    return;
  }
  Graph g = decode_graph(in.encoding);
  if (in.tag == "split") {
    split_check(ctx, in, g, out);
  } else if (in.tag == "tree_colon") {
    tree_colon_check(ctx, in, g, out);
  } else if (in.tag == "components") {
    components_check(ctx, in, g, out);
  } else {
    throw ParameterError("unknown case tag '" + in.tag + "'");
  }
}

// oracle-equivalence --------------------------------------------------------

std::vector<CaseInput> labeled_cases(const Context& ctx, int n_max, const std::string& tag) {
  std::vector<CaseInput> out;
  for (const Graph& g : labeled_graphs_up_to(n_max, ctx.options.limits)) out.push_back(graph_case(tag, g));
  return out;
}

std::vector<std::uint32_t> oracle_fields(const SuiteOptions& options) {
  std::uint32_t q = options.cross_p.value_or(options.p == 32003 ? 2 : 32003);
  if (q == options.p) return {options.p};
  return {options.p, q};
}

void oracle_check(const Context& ctx, const CaseInput& in, CaseOutcome& out) {
  Graph g = decode_graph(in.encoding);
  std::map<std::string, BettiTable> first_field;
  for (std::uint32_t p : oracle_fields(ctx.options)) {
    for (const std::string kind : {"ni", "edge", "path3"}) {
      MonomialIdeal ideal = graph_ideal(g, kind);
      BettiTable h = ctx.table(ideal, p);
      BettiTable t = betti_table_taylor_oracle(ideal, p, ctx.options.limits);
      if (!(h == t)) {
        fail(out, in, betti_to_json(t), betti_to_json(h),
             "Hochster vs Taylor, " + kind + " over GF(" + std::to_string(p) + ")");
      }
      auto [it, inserted] = first_field.emplace(kind, h);
      if (!inserted && it->second.entries() != h.entries()) {
        out.findings.push_back({{"kind", "field_discrepancy"}, {"graph", in.encoding}, {"ideal", kind},
                                {"p", it->second.field_char()}, {"q", p}});
      }
    }
  }
}

// stanley-reisner -------------------------------------------------------------

void sr_check(const Context& ctx, const CaseInput& in, CaseOutcome& out) {
  Graph g = decode_graph(in.encoding);
  const Limits& limits = ctx.options.limits;
  SimplicialComplex d = dominance_complex(g, limits);
  MonomialIdeal ni = closed_neighborhood_ideal(g);
  MonomialIdeal sr = stanley_reisner_ideal(d, limits);
  if (!(sr == ni)) fail(out, in, ideal_json(ni), ideal_json(sr), "I_{D(G)} = NI(G)");
  SimplicialComplex back = stanley_reisner_complex(sr, limits);
  if (!(back == d)) fail(out, in, complex_to_json(d), complex_to_json(back), "Δ(I_Δ) = Δ for D(G)");

  // D(G) against its definition, face by face.
  for (VertexMask w = 0; w < bit(g.order()); ++w) {
    bool face = is_dominating(g, g.vertices() & ~w);
    if (face != d.contains(w)) {
      fail(out, in, face, d.contains(w), "D(G) membership of mask " + std::to_string(w));
      break;
    }
  }
  for (const std::string kind : {"ni", "edge", "path3"}) {
    MonomialIdeal ideal = graph_ideal(g, kind);
    SimplicialComplex delta = stanley_reisner_complex(ideal, limits);
    MonomialIdeal round = stanley_reisner_ideal(delta, limits);
    if (!(round == ideal)) fail(out, in, ideal_json(ideal), ideal_json(round), "I_{Δ(I)} = I for " + kind);
    if (!(stanley_reisner_complex(round, limits) == delta)) {
      fail(out, in, complex_to_json(delta), complex_to_json(stanley_reisner_complex(round, limits)),
           "Δ(I_Δ) = Δ for Δ(" + kind + ")");
    }
  }
}

// froberg ------------------------------------------------------------------------

std::vector<CaseInput> class_cases(const Context& ctx, int n_max, const std::string& tag) {
  std::vector<CaseInput> out;
  for (const Graph& g : graph_classes_up_to(n_max, ctx.options.limits)) out.push_back(graph_case(tag, g));
  return out;
}

void froberg_check(const Context& ctx, const CaseInput& in, CaseOutcome& out) {
  Graph g = decode_graph(in.encoding);
  const bool chordal = structure_predicates(g).is_chordal;
  expect_eq(out, in, "chordality: elimination vs induced cycles", chordal_by_cycles(g), chordal);
  Graph gc = g.complement();
  const int reg = regularity(ctx.table(gc, "edge", ctx.options.p));
  out.data = {{"chordal", chordal}, {"reg", reg}};
  if (gc.size() == 0) {
    // I(G^c) = 0 has regularity 0, so only chordality is checked here.
    expect_eq(out, in, "complete graphs are chordal", true, chordal);
    out.findings.push_back({{"kind", "empty_complement"}, {"graph", in.encoding}, {"chordal", chordal},
                            {"reg", reg}});
    return;
  }
  expect_eq(out, in, "reg(R/I(G^c)) = 1 iff chordal", chordal, reg == 1);
}

// properties -------------------------------------------------------------------

std::vector<CaseInput> property_cases(const Context& ctx, int) {
  std::vector<CaseInput> out;
  const int count = ctx.options.samples > 0 ? ctx.options.samples : 250;
  std::mt19937_64 rng(ctx.options.seed);
  for (int k = 0; k < count; ++k) {
    std::uint64_t s = rng();
    if (k % 2 == 0) {
      out.push_back({"property", ideal_encoding(random_ideal(s, 8, 7))});
    } else {
      // NI of a random graph on up to 8 vertices.
      std::mt19937_64 local(s);
      int n = std::uniform_int_distribution<int>(1, 8)(local);
      Graph g(n);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (std::bernoulli_distribution(0.4)(local)) g.add_edge(u, v);
        }
      }
      out.push_back({"property", ideal_encoding(closed_neighborhood_ideal(g))});
    }
  }
  return out;
}

void property_check(const Context& ctx, const CaseInput& in, CaseOutcome& out) {
  const MonomialIdeal ideal = decode_ideal(in.encoding);
  const int n = ideal.n_vars();
  const std::uint32_t p = ctx.options.p;
  const auto& gens = ideal.generators();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = 0; b < gens.size(); ++b) {
      if (a != b && gens[a].divides(gens[b])) {
        fail(out, in, "incomparable generators", json::array({a, b}), "minimal generators");
      }
    }
  }

  const BettiTable table = ctx.table(ideal, p);
  if (projective_dimension(table) > n) fail(out, in, "pd <= " + std::to_string(n), projective_dimension(table), "pd bound");

  // K-polynomial: sum_i (-1)^i beta_{i,j} against the face count of Δ.
  const SimplicialComplex delta = stanley_reisner_complex(ideal, ctx.options.limits);
  const std::vector<VertexMask> faces = delta.faces(ctx.options.limits);
  std::vector<std::int64_t> from_faces(n + 1, 0);
  for (VertexMask f : faces) {
    const int k = popcount(f);
    // t^k (1 - t)^(n - k)
    std::int64_t c = 1;
    for (int r = 0; r <= n - k; ++r) {
      from_faces[k + r] += (r % 2 == 0 ? c : -c);
      c = c * (n - k - r) / (r + 1);
    }
  }
  std::vector<std::int64_t> from_betti(n + 1, 0);
  for (const auto& [key, count] : table.entries()) from_betti[key.second] += (key.first % 2 == 0 ? count : -count);
  if (from_faces != from_betti) fail(out, in, from_faces, from_betti, "K-polynomial from faces vs Betti numbers");

  const HomologyProfile h = reduced_homology_of_faces(faces, p);
  std::int64_t alternating = 0;
  for (const auto& [d, rank] : h.ranks) alternating += (d % 2 == 0 ? rank : -rank);
  expect_eq(out, in, "reduced Euler characteristic = alternating homology ranks",
            reduced_euler_characteristic(faces), alternating);

  // Relabeling by a permutation derived from the case itself.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64(fnv1a(in.encoding)));
  const MonomialIdeal moved = relabel(ideal, perm, n);
  const BettiTable moved_table = ctx.table(moved, p);
  if (!(moved_table == table)) fail(out, in, betti_to_json(table), betti_to_json(moved_table), "relabeling invariance of tables");
  const HomologyProfile moved_h = reduced_homology_ranks(stanley_reisner_complex(moved, ctx.options.limits), p, ctx.options.limits);
  if (moved_h.ranks != h.ranks) fail(out, in, homology_to_json(h), homology_to_json(moved_h), "relabeling invariance of homology");

  HochsterOptions plain;
  plain.field_char = p;
  plain.prune_cones = false;
  plain.jobs = 2;
  const BettiTable unpruned = betti_table_hochster(ideal, plain, ctx.options.limits);
  if (!(unpruned == table)) fail(out, in, betti_to_json(table), betti_to_json(unpruned), "cone pruning and threads");
}

// cache-audit ---------------------------------------------------------------------

void audit_fill(const Context& ctx, const CaseInput& in, CaseOutcome&) {
  Graph g = decode_graph(in.encoding);
  ctx.table(g, "ni", ctx.options.p);
}

void audit_summary(const Context& ctx, const std::vector<std::pair<CaseInput, CaseOutcome>>&,
                   SuiteReport& report) {
  if (ctx.options.cache == nullptr) return;
  AuditResult r = audit_cache(*ctx.options.cache, 0.05, ctx.options.seed, ctx.options.limits);
  report.params["sampled"] = r.sampled;
  for (const std::string& key : r.mismatched_keys) {
    report.failures.push_back({key, "audit", "cached table", "different fresh table", "cache audit"});
  }
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {{"forest-equality", "reg(R/NI(G)) = matching number for trees and forests", 8, 10},
       forest_cases, forest_check, forest_summary},
      {{"lower-bound", "reg(R/NI(G)) >= matching number with the full inequality chain", 6, 7},
       lower_cases, lower_check, lower_summary},
      {{"pd-bounds", "pd(R/NI(G)) >= matching number for forests and unicyclic graphs", 8, 9},
       pd_cases, pd_check, nullptr},
      {{"closed-forms", "cycle, wheel, complete, whiskered and K_{n,2} formulas", std::nullopt,
        std::nullopt},
       closed_cases, closed_check, nullptr},
      {{"structural-identities", "Betti splitting, colon/deletion identities, convolution, shift", 6, 7},
       structural_cases, structural_check, nullptr},
      {{"oracle-equivalence", "Hochster vs Taylor tables for NI, edge and 3-path ideals", 5, 5},
       [](const Context& ctx, int n) { return labeled_cases(ctx, n, "oracle"); }, oracle_check, nullptr},
      {{"stanley-reisner", "Stanley-Reisner round trips and I_{D(G)} = NI(G)", 5, 6},
       [](const Context& ctx, int n) { return labeled_cases(ctx, n, "sr"); }, sr_check, nullptr},
      {{"froberg", "reg(R/I(G^c)) = 1 iff G chordal", 6, 7},
       [](const Context& ctx, int n) { return class_cases(ctx, n, "froberg"); }, froberg_check, nullptr},
      {{"properties", "randomized invariants of tables and complexes", std::nullopt, std::nullopt},
       property_cases, property_check, nullptr},
      {{"cache-audit", "cached tables equal fresh recomputation on a 5% sample", 5, 7},
       [](const Context& ctx, int n) { return class_cases(ctx, n, "audit"); }, audit_fill, audit_summary},
  };
  return all;
}

const Suite& find_suite(const std::string& name) {
  for (const Suite& s : suites()) {
    if (s.info.name == name) return s;
  }
  std::string known;
  for (const Suite& s : suites()) known += (known.empty() ? "" : ", ") + s.info.name;
  throw ParameterError("unknown suite '" + name + "'; known suites: " + known);
}

void run_one(const Suite& suite, const Context& ctx, const CaseInput& in, CaseOutcome& out) {
  try {
    suite.check(ctx, in, out);
  } catch (const std::exception& e) {
    fail(out, in, "no error", e.what(), "exception while checking the case");
  }
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const Suite& s : suites()) out.push_back(s.info);
    return out;
  }();
  return infos;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const SuiteInfo& s : suite_catalog()) out.push_back(s.name);
  return out;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  const Suite& suite = find_suite(name);
  const auto start = std::chrono::steady_clock::now();

  BettiCache scratch;  // in-memory cache when the audit has none
  Context ctx{options};
  if (name == "cache-audit" && ctx.options.cache == nullptr) ctx.options.cache = &scratch;

  int n_max = options.n_max.value_or(suite.info.default_n.value_or(0));
  if (suite.info.max_n && n_max > *suite.info.max_n && !options.lift_ceiling) {
    throw SizeError(name + ".n_max", *suite.info.max_n, n_max);
  }
  if (suite.info.default_n && n_max < 1) throw ParameterError("n_max must be at least 1");

  SuiteReport report;
  report.suite = name;
  report.seed = options.seed;
  report.params = {{"p", options.p}};
  if (suite.info.default_n) report.params["n_max"] = n_max;
  if (options.cross_p) report.params["cross_p"] = *options.cross_p;
  if (options.samples > 0) report.params["samples"] = options.samples;

  std::vector<CaseInput> inputs = suite.cases(ctx, n_max);
  std::stable_sort(inputs.begin(), inputs.end(), [](const CaseInput& a, const CaseInput& b) {
    return std::tie(a.encoding, a.tag) < std::tie(b.encoding, b.tag);
  });
  std::vector<CaseOutcome> outcomes(inputs.size());

  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(inputs.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < inputs.size(); k = next++) run_one(suite, ctx, inputs[k], outcomes[k]);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<std::pair<CaseInput, CaseOutcome>> all;
  all.reserve(inputs.size());
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    for (Failure& f : outcomes[k].failures) report.failures.push_back(std::move(f));
    for (json& f : outcomes[k].findings) report.findings.push_back(std::move(f));
    all.emplace_back(std::move(inputs[k]), std::move(outcomes[k]));
  }
  report.cases = static_cast<std::int64_t>(all.size());
  std::map<std::string, std::int64_t> per_tag;
  for (const auto& entry : all) ++per_tag[entry.first.tag];
  report.params["case_tags"] = per_tag;
  if (suite.summarize) suite.summarize(ctx, all, report);

  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

CaseOutcome replay_case(const std::string& name, const CaseInput& input, const SuiteOptions& options) {
  const Suite& suite = find_suite(name);
  Context ctx{options};
  CaseOutcome out;
  run_one(suite, ctx, input, out);
  return out;
}

}  // namespace nil
