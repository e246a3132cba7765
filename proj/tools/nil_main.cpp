// nil: closed neighborhood ideals of graphs from the command line.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "nil/nil.hpp"

namespace {

using nil::json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kGuard = 3, kOracle = 4 };

struct Globals {
  int max_n = 0;
  int max_gens = 0;
  bool use_cache = false;
  bool no_cache = false;
};

std::uint32_t default_p() {
  const char* env = std::getenv("NIL_DEFAULT_P");
  if (env == nullptr || *env == '\0') return 2;
  try {
    return static_cast<std::uint32_t>(std::stoul(env));
  } catch (const std::exception&) {
    throw nil::ParameterError(std::string("NIL_DEFAULT_P is not a number: ") + env);
  }
}

void apply_guards(const Globals& g) {
  nil::Limits& limits = nil::default_limits();
  if (g.max_n > 0) {
    if (g.max_n > limits.graph_enumeration) {
      std::cerr << "warning: raising size guards to " << g.max_n << "; this may be slow\n";
    }
    limits.subset_search = std::max(limits.subset_search, g.max_n);
    limits.exact_coloring = std::max(limits.exact_coloring, g.max_n);
    limits.graph_enumeration = std::max(limits.graph_enumeration, g.max_n);
    limits.tree_enumeration = std::max(limits.tree_enumeration, g.max_n);
    limits.hochster_vars = std::max(limits.hochster_vars, g.max_n);
  }
  if (g.max_gens > 0) {
    if (g.max_gens > limits.taylor_generators) {
      std::cerr << "warning: raising the Taylor generator guard to " << g.max_gens
                << "; this may be slow\n";
    }
    limits.taylor_generators = std::max(limits.taylor_generators, g.max_gens);
  }
}

std::unique_ptr<nil::BettiCache> open_cache(const Globals& g) {
  const bool env = std::getenv("NIL_CACHE_DIR") != nullptr;
  if (g.no_cache || !(g.use_cache || env)) return nullptr;
  return std::make_unique<nil::BettiCache>(nil::BettiCache::default_path());
}

bool is_file(const std::string& path) { return std::filesystem::is_regular_file(path); }

/// A family spec, or a path to an edge-list file.
nil::Graph load_graph(const std::string& input) {
  if (is_file(input)) return nil::read_edge_list_file(input);
  return nil::build_family(nil::parse_family(input));
}

std::string first_content_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  return {};
}

struct IdealInput {
  nil::MonomialIdeal ideal;
  std::optional<nil::Graph> graph;
  std::vector<std::string> labels;
};

/// Ideal files hold JSON, an edge list (first line "n m"), or one
/// generator per line. Anything else is read as a graph spec.
IdealInput load_ideal(const std::string& input, const std::string& kind) {
  IdealInput out;
  if (is_file(input)) {
    std::ifstream in(input);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const std::string first = first_content_line(text);
    long long a = 0;
    long long b = 0;
    std::string rest;
    std::istringstream probe(first);
    const bool two_ints = static_cast<bool>(probe >> a >> b) && !(probe >> rest);
    if (first.find('{') != std::string::npos) {
      json j = json::parse(text, nullptr, false);
      if (j.is_discarded()) throw nil::ParseError(1, input + ": invalid JSON");
      out.ideal = nil::ideal_from_json(j);
      return out;
    }
    if (!two_ints) {
      std::istringstream again(text);
      out.ideal = nil::read_ideal_text(again);
      return out;
    }
  }
  nil::Graph g = load_graph(input);
  out.ideal = nil::graph_ideal(g, kind);
  out.labels = g.labels();
  out.graph = std::move(g);
  return out;
}

nil::BettiTable table_for(const IdealInput& in, const std::string& kind, std::uint32_t p,
                          nil::BettiCache* cache) {
  if (cache != nullptr && in.graph) return cache->table_for(*in.graph, kind, p);
  nil::HochsterOptions options;
  options.field_char = p;
  return nil::betti_table_hochster(in.ideal, options);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// ---------------------------------------------------------------------------

int cmd_invariants(const std::string& input, const std::string& format, std::uint32_t p,
                   nil::BettiCache* cache) {
  nil::Graph g = load_graph(input);
  nil::Structure s = nil::structure_predicates(g);
  const int a = nil::matching_number(g);
  const int chi = nil::clique_cover_number(g);
  nil::MonomialIdeal ni = nil::closed_neighborhood_ideal(g);
  IdealInput in{ni, g, g.labels()};
  nil::BettiTable table = table_for(in, "ni", p, cache);
  const int reg = nil::regularity(table);
  const int pd = nil::projective_dimension(table);

  std::vector<std::string> gens;
  for (nil::Monomial m : ni.generators()) gens.push_back(nil::format_monomial(m, g.labels()));

  if (format == "json") {
    json out = {{"n", g.order()},
                {"m", g.size()},
                {"matching_number", a},
                {"clique_cover_number", chi},
                {"chordal", s.is_chordal},
                {"forest", s.is_forest},
                {"tree", s.is_tree},
                {"unicyclic", s.is_unicyclic},
                {"generators", gens},
                {"ideal", nil::ideal_to_json(ni)},
                {"betti", nil::betti_to_json(table)},
                {"reg", reg},
                {"pd", pd},
                {"p", p}};
    std::cout << out.dump(2) << '\n';
  } else if (format == "csv") {
    std::string joined;
    for (const auto& m : gens) joined += (joined.empty() ? "" : " ") + m;
    std::cout << "n,m,matching_number,clique_cover_number,chordal,forest,tree,unicyclic,reg,pd,p,"
                 "generators\n";
    std::cout << g.order() << ',' << g.size() << ',' << a << ',' << chi << ',' << s.is_chordal
              << ',' << s.is_forest << ',' << s.is_tree << ',' << s.is_unicyclic << ',' << reg
              << ',' << pd << ',' << p << ',' << csv_escape(joined) << '\n';
  } else {
    std::cout << "graph        " << input << '\n'
              << "vertices     " << g.order() << '\n'
              << "edges        " << g.size() << '\n'
              << "matching     " << a << '\n'
              << "chi(G^c)     " << chi << '\n'
              << "chordal      " << (s.is_chordal ? "yes" : "no") << '\n'
              << "forest       " << (s.is_forest ? "yes" : "no") << '\n'
              << "unicyclic    " << (s.is_unicyclic ? "yes" : "no") << '\n'
              << "generators   ";
    for (std::size_t k = 0; k < gens.size(); ++k) std::cout << (k ? ", " : "") << gens[k];
    std::cout << "\n\nBetti numbers of R/NI(G) over GF(" << p << ")\n"
              << nil::format_betti_table(table) << '\n'
              << "reg          " << reg << '\n'
              << "pd           " << pd << '\n';
  }
  return kOk;
}

int cmd_betti(const std::string& input, const std::string& kind_arg, std::uint32_t p,
              bool oracle, const std::string& format, nil::BettiCache* cache) {
  const std::string kind = nil::ideal_kind_name(kind_arg);
  IdealInput in = load_ideal(input, kind);
  nil::BettiTable table = table_for(in, kind, p, cache);

  std::optional<nil::BettiTable> taylor;
  if (oracle) taylor = nil::betti_table_taylor_oracle(in.ideal, p);
  const bool agree = !taylor || *taylor == table;

  if (format == "json") {
    json out = {{"ideal", nil::ideal_to_json(in.ideal)}, {"kind", kind}, {"betti", nil::betti_to_json(table)}};
    if (taylor) {
      out["oracle"] = nil::betti_to_json(*taylor);
      out["oracle_agrees"] = agree;
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "Betti numbers over GF(" << p << ")\n" << nil::format_betti_table(table);
    auto reg = table.regularity();
    std::cout << "reg " << *reg << ", pd " << *table.projective_dimension() << '\n';
    if (taylor) {
      std::cout << (agree ? "oracle: Taylor complex agrees\n" : "oracle: MISMATCH\n");
    }
  }
  if (!agree) {
    std::cerr << "Hochster table:\n" << nil::format_betti_table(table)
              << "Taylor table:\n" << nil::format_betti_table(*taylor);
    return kOracle;
  }
  return kOk;
}

int cmd_verify(const std::string& suite, nil::SuiteOptions options, const std::string& out_path) {
  nil::SuiteReport report = nil::run_suite(suite, options);
  const std::string text = report.to_json().dump(2) + "\n";
  if (!out_path.empty()) nil::write_file_atomic(out_path, text);
  std::cout << "suite " << report.suite << "  seed " << report.seed << "  p " << options.p << '\n'
            << "cases " << report.cases << "  failures " << report.failures.size() << "  findings "
            << report.findings.size() << "  " << report.elapsed_ms << " ms\n";
  for (const nil::Failure& f : report.failures) {
    std::cout << "FAIL " << f.tag << ' ' << f.graph << ": " << f.note << " expected "
              << f.expected.dump() << " got " << f.actual.dump() << '\n';
  }
  std::cout << (report.passed() ? "PASS" : "FAIL") << '\n';
  return report.passed() ? kOk : kFailed;
}

int cmd_gen(const std::string& family, int n, bool labeled, bool connected, const std::string& format) {
  std::vector<nil::Graph> graphs;
  if (family == "trees") {
    graphs = nil::enumerate_trees(n, !labeled);
  } else if (family == "graphs") {
    graphs = nil::enumerate_graphs(n, connected, !labeled);
  } else if (family == "forests") {
    graphs = nil::unlabeled_forests(n);
  } else if (family == "unicyclic") {
    graphs = nil::unlabeled_unicyclic(n);
  } else {
    throw nil::ParameterError("unknown family '" + family + "' (trees, graphs, forests, unicyclic)");
  }
  for (const nil::Graph& g : graphs) {
    if (format == "edges") {
      std::cout << nil::write_edge_list(g) << '\n';
    } else if (format == "canonical") {
      std::cout << nil::canonical_form(g).to_string() << '\n';
    } else {
      std::cout << nil::encode_graph(g) << '\n';
    }
  }
  std::cerr << graphs.size() << " graphs\n";
  return kOk;
}

/// Open-ended tabulation of reg and pd against the matching number.
int cmd_census(const std::string& family, int n_min, int n_max, std::uint32_t p, bool list,
               nil::BettiCache* cache) {
  std::cout << "n,classes,reg_eq_a,reg_gt_a,pd_lt_a,pd_eq_a,pd_gt_a\n";
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<nil::Graph> graphs;
    if (family == "graphs") {
      graphs = nil::unlabeled_graphs(n, false);
    } else if (family == "connected") {
      graphs = nil::unlabeled_graphs(n, true);
    } else if (family == "trees") {
      graphs = nil::unlabeled_trees(n);
    } else if (family == "unicyclic") {
      graphs = nil::unlabeled_unicyclic(n);
    } else {
      throw nil::ParameterError("unknown family '" + family + "'");
    }
    int reg_eq = 0;
    int reg_gt = 0;
    int pd_lt = 0;
    int pd_eq = 0;
    int pd_gt = 0;
    std::vector<std::string> equal;
    for (const nil::Graph& g : graphs) {
      IdealInput in{nil::closed_neighborhood_ideal(g), g, {}};
      nil::BettiTable t = table_for(in, "ni", p, cache);
      const int a = nil::matching_number(g);
      const int reg = nil::regularity(t);
      const int pd = nil::projective_dimension(t);
      if (reg == a) {
        ++reg_eq;
        equal.push_back(nil::encode_graph(g));
      } else {
        ++reg_gt;
      }
      (pd < a ? pd_lt : pd == a ? pd_eq : pd_gt) += 1;
    }
    std::cout << n << ',' << graphs.size() << ',' << reg_eq << ',' << reg_gt << ',' << pd_lt << ','
              << pd_eq << ',' << pd_gt << '\n';
    if (list) {
      for (const auto& e : equal) std::cout << "# reg=a " << e << '\n';
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nil: Betti numbers of closed neighborhood ideals"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--max-n", globals.max_n, "Raise vertex/variable size guards (may be slow)");
  app.add_option("--max-gens", globals.max_gens, "Raise the Taylor generator guard (may be slow)");
  app.add_flag("--cache", globals.use_cache, "Use the Betti cache (also on when NIL_CACHE_DIR is set)");
  app.add_flag("--no-cache", globals.no_cache, "Never touch the Betti cache");

  std::uint32_t p = 2;
  std::string input;
  std::string format = "pretty";

  auto* inv = app.add_subcommand("invariants", "Graph invariants and the Betti table of NI(G)");
  inv->add_option("input", input, "Family spec (cycle:5, whiskered(path:3), ...) or edge-list file")->required();
  inv->add_option("--format", format)->check(CLI::IsMember({"pretty", "json", "csv"}));
  inv->add_option("--p", p, "Field characteristic");

  std::string kind = "ni";
  bool oracle = false;
  auto* betti = app.add_subcommand("betti", "Betti table of an ideal or of a graph ideal");
  betti->add_option("input", input, "Ideal file, edge-list file or family spec")->required();
  betti->add_option("--ideal", kind, "ni, edge or path:t");
  betti->add_option("--p", p, "Field characteristic");
  betti->add_flag("--oracle", oracle, "Cross-check against the Taylor complex");
  betti->add_option("--format", format)->check(CLI::IsMember({"pretty", "json"}));

  std::string suite;
  nil::SuiteOptions options;
  int n_max = 0;
  std::uint32_t cross_p = 0;
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite_help = "One of:";
  for (const auto& s : nil::suite_names()) suite_help += " " + s;
  verify->add_option("suite", suite, suite_help)->required();
  verify->add_option("--n", n_max, "Largest vertex count");
  verify->add_option("--p", p, "Field characteristic");
  verify->add_option("--cross-p", cross_p, "Second field; disagreements are findings");
  verify->add_option("--seed", options.seed, "Seed for sampled cases");
  verify->add_option("--jobs", options.jobs, "Worker threads");
  verify->add_option("--samples", options.samples, "Sampled case count for random suites");
  verify->add_option("--out", out_path, "Write the JSON report here");

  std::string family;
  int gen_n = 0;
  bool labeled = false;
  bool connected = false;
  std::string gen_format = "encoding";
  auto* gen = app.add_subcommand("gen", "Enumerate graphs");
  gen->add_option("family", family, "trees, graphs, forests or unicyclic")->required();
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_flag("--labeled", labeled, "Every labeled graph instead of one per class");
  gen->add_flag("--connected", connected, "Connected graphs only");
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"encoding", "edges", "canonical"}));

  int census_min = 1;
  int census_max = 6;
  bool list = false;
  std::string census_family = "graphs";
  auto* census = app.add_subcommand("census", "Tabulate reg and pd against the matching number");
  census->add_option("--family", census_family, "graphs, connected, trees or unicyclic");
  census->add_option("--from", census_min, "Smallest vertex count");
  census->add_option("--n", census_max, "Largest vertex count");
  census->add_option("--p", p, "Field characteristic");
  census->add_flag("--list", list, "List the classes with reg = a");

  try {
    p = default_p();
  } catch (const nil::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    apply_guards(globals);
    auto cache = open_cache(globals);
    if (*inv) return cmd_invariants(input, format, p, cache.get());
    if (*betti) return cmd_betti(input, kind, p, oracle, format, cache.get());
    if (*verify) {
      options.p = p;
      if (n_max > 0) options.n_max = n_max;
      if (cross_p > 0) options.cross_p = cross_p;
      options.cache = cache.get();
      options.limits = nil::default_limits();
      options.lift_ceiling = globals.max_n > 0 && globals.max_n >= n_max;
      try {
        return cmd_verify(suite, options, out_path);
      } catch (const nil::ParameterError& e) {
        if (std::string(e.what()).rfind("unknown suite", 0) == 0) {
          std::cerr << "error: " << e.what() << '\n';
          return kUsage;
        }
        throw;
      }
    }
    if (*gen) return cmd_gen(family, gen_n, labeled, connected, gen_format);
    if (*census) return cmd_census(census_family, census_min, census_max, p, list, cache.get());
  } catch (const nil::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kFailed;
  } catch (const nil::SizeError& e) {
    std::cerr << "size guard '" << e.guard() << "' (limit " << e.limit() << "): " << e.what()
              << "\nraise it with --max-n / --max-gens\n";
    return kGuard;
  } catch (const nil::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kOk;
}
