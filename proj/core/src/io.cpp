#include "nil/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nil/error.hpp"

namespace nil {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

/// Reads exactly two integers from `text`, rejecting anything else.
bool two_ints(const std::string& text, long long& a, long long& b) {
  std::istringstream in(text);
  std::string extra;
  if (!(in >> a >> b)) return false;
  return !(in >> extra);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    if (body.empty()) continue;
    long long a = 0;
    long long b = 0;
    if (!two_ints(body, a, b)) {
      throw ParseError(line_no, "expected two integers, got '" + body + "'");
    }
    if (n < 0) {
      if (a < 0 || a > kMaxVertices) {
        throw ParseError(line_no, "vertex count must be in [0, " + std::to_string(kMaxVertices) + "]");
      }
      if (b < 0) throw ParseError(line_no, "edge count must be nonnegative");
      n = a;
      m = b;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError(line_no, "more edges than the declared " + std::to_string(m));
    }
    if (a < 1 || b < 1 || a > n || b > n) {
      throw ParseError(line_no, "endpoint out of range 1.." + std::to_string(n));
    }
    if (a == b) throw ParseError(line_no, "loop at vertex " + std::to_string(a));
    for (auto [u, v] : edges) {
      if ((u == a - 1 && v == b - 1) || (u == b - 1 && v == a - 1)) {
        throw ParseError(line_no, "repeated edge " + std::to_string(a) + " " + std::to_string(b));
      }
    }
    edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  if (n < 0) throw ParseError(std::max(1, line_no), "missing header line 'n m'");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return read_edge_list(in);
  } catch (const ParseError& e) {
    std::string what = e.what();
    auto colon = what.find(": ");
    throw ParseError(e.line(), path + ": " + (colon == std::string::npos ? what : what.substr(colon + 2)));
  }
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::string encode_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + "|";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(u + 1) + "-" + std::to_string(v + 1);
  }
  return out;
}

Graph decode_graph(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos) throw ParseError(1, "graph encoding needs 'n|edges'");
  int n = 0;
  try {
    n = std::stoi(text.substr(0, bar));
  } catch (const std::exception&) {
    throw ParseError(1, "bad vertex count in '" + text + "'");
  }
  Graph g(n);
  std::string rest = text.substr(bar + 1);
  std::istringstream in(rest);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto dash = item.find('-');
    if (dash == std::string::npos) throw ParseError(1, "bad edge '" + item + "'");
    try {
      g.add_edge(std::stoi(item.substr(0, dash)) - 1, std::stoi(item.substr(dash + 1)) - 1);
    } catch (const ConstructionError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError(1, "bad edge '" + item + "'");
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Ideals

std::string format_monomial(Monomial m, const std::vector<std::string>& labels) {
  if (m.is_one()) return "1";
  std::string out;
  for (int v : members(m.support())) {
    if (!out.empty()) out += "*";
    out += v < static_cast<int>(labels.size()) ? labels[v] : default_label(v);
  }
  return out;
}

std::string write_ideal_text(const MonomialIdeal& ideal, const std::vector<std::string>& labels) {
  std::string out;
  for (Monomial g : ideal.generators()) out += format_monomial(g, labels) + "\n";
  return out;
}

MonomialIdeal read_ideal_text(std::istream& in, int n_vars) {
  std::string line;
  int line_no = 0;
  std::vector<Monomial> gens;
  int max_index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    if (body.empty()) continue;
    if (body == "1") {
      gens.emplace_back();
      continue;
    }
    std::vector<int> indices;
    std::istringstream factors(body);
    std::string factor;
    while (std::getline(factors, factor, '*')) {
      factor = strip_comment(factor);
      if (factor.size() < 2 || factor[0] != 'x' ||
          factor.find_first_not_of("0123456789", 1) != std::string::npos) {
        throw ParseError(line_no, "expected a variable like 'x3', got '" + factor + "'");
      }
      int index = std::stoi(factor.substr(1));
      if (index < 1 || index > kMaxVertices) {
        throw ParseError(line_no, "variable index out of range in '" + factor + "'");
      }
      indices.push_back(index - 1);
      max_index = std::max(max_index, index);
    }
    try {
      gens.push_back(Monomial::from_indices(indices));
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return MonomialIdeal(std::max(n_vars, max_index), std::move(gens));
}

json ideal_to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (Monomial g : ideal.generators()) {
    json idx = json::array();
    for (int v : members(g.support())) idx.push_back(v + 1);
    gens.push_back(idx);
  }
  return {{"n_vars", ideal.n_vars()}, {"gens", gens}};
}

MonomialIdeal ideal_from_json(const json& j) {
  try {
    int n = j.at("n_vars").get<int>();
    std::vector<Monomial> gens;
    for (const json& g : j.at("gens")) {
      std::vector<int> idx;
      for (const json& v : g) {
        int k = v.get<int>();
        if (k < 1 || k > n) throw ParameterError("generator index " + std::to_string(k) + " out of range");
        idx.push_back(k - 1);
      }
      gens.push_back(Monomial::from_indices(idx));
    }
    return MonomialIdeal(n, std::move(gens));
  } catch (const json::exception& e) {
    throw ParseError(1, std::string("ideal JSON: ") + e.what());
  }
}

json complex_to_json(const SimplicialComplex& complex) {
  json facets = json::array();
  for (VertexMask f : complex.facets()) {
    json idx = json::array();
    for (int v : members(f)) idx.push_back(v + 1);
    facets.push_back(idx);
  }
  return {{"n", complex.n_vertices()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
  try {
    int n = j.at("n").get<int>();
    std::vector<VertexMask> facets;
    for (const json& f : j.at("facets")) {
      VertexMask mask = 0;
      for (const json& v : f) {
        int k = v.get<int>();
        if (k < 1 || k > n) throw ParameterError("facet vertex " + std::to_string(k) + " out of range");
        mask |= bit(k - 1);
      }
      facets.push_back(mask);
    }
    return {n, std::move(facets)};
  } catch (const json::exception& e) {
    throw ParseError(1, std::string("complex JSON: ") + e.what());
  }
}

json homology_to_json(const HomologyProfile& h) {
  json ranks = json::object();
  for (const auto& [d, r] : h.ranks) ranks[std::to_string(d)] = r;
  return {{"p", h.field_char}, {"ranks", ranks}};
}

json betti_to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, count] : table.entries()) {
    entries.push_back({key.first, key.second, count});
  }
  json out = {{"p", table.field_char()}, {"entries", entries}};
  auto reg = table.regularity();
  auto pd = table.projective_dimension();
  out["reg"] = reg ? json(*reg) : json(nullptr);
  out["pd"] = pd ? json(*pd) : json(nullptr);
  return out;
}

BettiTable betti_from_json(const json& j, int n_vars) {
  try {
    BettiTable table(n_vars, j.at("p").get<std::uint32_t>());
    for (const json& e : j.at("entries")) {
      table.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::int64_t>());
    }
    return table;
  } catch (const json::exception& e) {
    throw ParseError(1, std::string("Betti JSON: ") + e.what());
  }
}

std::string format_betti_table(const BettiTable& table) {
  const int pd = table.projective_dimension().value_or(0);
  const int reg = table.regularity().value_or(0);
  int min_row = 0;
  for (const auto& [key, count] : table.entries()) min_row = std::min(min_row, key.second - key.first);

  auto cell = [](std::int64_t v) { return v == 0 ? std::string(".") : std::to_string(v); };
  std::vector<int> width(pd + 1, 1);
  for (int i = 0; i <= pd; ++i) {
    width[i] = std::max<int>(std::to_string(i).size(), std::to_string(table.total(i)).size());
    for (const auto& [key, count] : table.entries()) {
      if (key.first == i) width[i] = std::max<int>(width[i], cell(count).size());
    }
  }
  auto pad = [](const std::string& s, int w) {
    return std::string(w > static_cast<int>(s.size()) ? w - s.size() : 0, ' ') + s;
  };
  std::ostringstream out;
  out << pad("", 6);
  for (int i = 0; i <= pd; ++i) out << ' ' << pad(std::to_string(i), width[i]);
  out << "\ntotal:";
  for (int i = 0; i <= pd; ++i) out << ' ' << pad(std::to_string(table.total(i)), width[i]);
  out << '\n';
  for (int row = min_row; row <= reg; ++row) {
    out << pad(std::to_string(row) + ":", 6);
    for (int i = 0; i <= pd; ++i) out << ' ' << pad(cell(table.at(i, i + row)), width[i]);
    out << '\n';
  }
  return out.str();
}

json split_report_to_json(const SplitReport& report) {
  json rows = json::array();
  for (const SplitRow& r : report.rows) {
    rows.push_back({{"i", r.i},
                    {"j", r.j},
                    {"beta_I", r.beta_i},
                    {"beta_J", r.beta_j},
                    {"beta_K", r.beta_k},
                    {"beta_JK_shifted", r.beta_jk_shifted},
                    {"residual", r.residual}});
  }
  return {{"variable", report.variable + 1},
          {"J", ideal_to_json(report.j_part)},
          {"K", ideal_to_json(report.k_part)},
          {"J_cap_K", ideal_to_json(report.intersection)},
          {"rows", rows},
          {"verdict", report.verdict},
          {"pd", {{"I", report.pd_i}, {"J", report.pd_j}, {"K", report.pd_k}, {"J_cap_K", report.pd_jk}}},
          {"pd_recursion_holds", report.pd_recursion_holds}};
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out << contents;
    if (!out) throw Error("short write to '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

}  // namespace nil
