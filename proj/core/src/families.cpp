#include <cctype>
#include <map>

#include "nil/error.hpp"
#include "nil/graph.hpp"
#include "nil/io.hpp"

namespace nil {

namespace {

using Kind = FamilySpec::Kind;

const std::map<std::string, Kind>& kind_names() {
  static const std::map<std::string, Kind> names = {
      {"path", Kind::kPath},
      {"cycle", Kind::kCycle},
      {"star", Kind::kStar},
      {"complete", Kind::kComplete},
      {"complete_bipartite", Kind::kCompleteBipartite},
      {"wheel", Kind::kWheel},
      {"whiskered", Kind::kWhiskered},
      {"edge_list", Kind::kEdgeList},
      {"disjoint_union", Kind::kDisjointUnion},
  };
  return names;
}

std::string kind_name(Kind kind) {
  for (const auto& [name, k] : kind_names()) {
    if (k == kind) return name;
  }
  return "?";
}

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : text_(text) {}

  FamilySpec parse() {
    FamilySpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ConstructionError("bad family spec '" + text_ + "' at offset " +
                            std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int parse_int() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  FamilySpec parse_spec() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name = text_.substr(start, pos_ - start);
    auto it = kind_names().find(name);
    if (it == kind_names().end()) fail("unknown family '" + name + "'");

    FamilySpec spec;
    spec.kind = it->second;
    if (spec.kind == Kind::kWhiskered || spec.kind == Kind::kDisjointUnion) {
      if (!accept('(')) fail("expected '('");
      do {
        spec.bases.push_back(parse_spec());
      } while (accept(','));
      if (!accept(')')) fail("expected ')'");
    } else if (spec.kind == Kind::kEdgeList) {
      if (!accept(':')) fail("expected ':'");
      std::size_t end = pos_;
      int depth = 0;
      while (end < text_.size()) {
        char c = text_[end];
        if (c == '(') ++depth;
        if ((c == ')' || c == ',') && depth == 0) break;
        if (c == ')') --depth;
        ++end;
      }
      spec.path = text_.substr(pos_, end - pos_);
      pos_ = end;
      if (spec.path.empty()) fail("expected a file path");
    } else {
      if (!accept(':')) fail("expected ':'");
      spec.params.push_back(parse_int());
      while (spec.kind == Kind::kCompleteBipartite && accept(',')) {
        spec.params.push_back(parse_int());
      }
    }
    spec.validate();
    return spec;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

void FamilySpec::validate() const {
  auto need = [&](std::size_t params_count, std::size_t base_count) {
    if (params.size() != params_count) {
      throw ConstructionError(kind_name(kind) + " takes " + std::to_string(params_count) +
                              " parameter(s), got " + std::to_string(params.size()));
    }
    if (base_count != static_cast<std::size_t>(-1) && bases.size() != base_count) {
      throw ConstructionError(kind_name(kind) + " takes " + std::to_string(base_count) +
                              " base spec(s)");
    }
  };
  switch (kind) {
    case Kind::kCompleteBipartite:
      need(2, 0);
      break;
    case Kind::kWhiskered:
      need(0, 1);
      break;
    case Kind::kDisjointUnion:
      need(0, static_cast<std::size_t>(-1));
      if (bases.empty()) throw ConstructionError("disjoint_union needs at least one base");
      break;
    case Kind::kEdgeList:
      need(0, 0);
      if (path.empty()) throw ConstructionError("edge_list needs a file path");
      break;
    default:
      need(1, 0);
  }
  for (int p : params) {
    if (p < 1) throw ConstructionError(kind_name(kind) + " parameters must be >= 1");
  }
  if (kind == Kind::kCycle && params[0] < 3) {
    throw ConstructionError("cycle needs at least 3 vertices");
  }
  if (kind == Kind::kWheel && params[0] < 4) {
    throw ConstructionError("wheel needs at least 4 vertices");
  }
  for (const FamilySpec& base : bases) base.validate();
}

FamilySpec parse_family(const std::string& text) { return SpecParser(text).parse(); }

std::string to_string(const FamilySpec& spec) {
  std::string out = kind_name(spec.kind);
  if (spec.kind == Kind::kEdgeList) return out + ":" + spec.path;
  if (!spec.bases.empty()) {
    out += "(";
    for (std::size_t i = 0; i < spec.bases.size(); ++i) {
      if (i > 0) out += ",";
      out += to_string(spec.bases[i]);
    }
    return out + ")";
  }
  out += ":";
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(spec.params[i]);
  }
  return out;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw ConstructionError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph star_graph(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite_graph(int m, int n) {
  Graph g(m + n);
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
  }
  return g;
}

Graph wheel_graph(int n) {
  if (n < 4) throw ConstructionError("wheel needs at least 4 vertices");
  const int rim = n - 1;
  Graph g(n);
  for (int i = 0; i < rim; ++i) {
    g.add_edge(0, 1 + i);
    g.add_edge(1 + i, 1 + (i + 1) % rim);
  }
  return g;
}

Graph whisker_all(const Graph& g) {
  const int n = g.order();
  Graph out(2 * n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  std::vector<std::string> labels = g.labels();
  for (int i = 0; i < n; ++i) {
    out.add_edge(i, n + i);
    labels.push_back("y" + std::to_string(i + 1));
  }
  out.set_labels(std::move(labels));
  return out;
}

Graph build_family(const FamilySpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case Kind::kPath:
      return path_graph(spec.params[0]);
    case Kind::kCycle:
      return cycle_graph(spec.params[0]);
    case Kind::kStar:
      return star_graph(spec.params[0]);
    case Kind::kComplete:
      return complete_graph(spec.params[0]);
    case Kind::kCompleteBipartite:
      return complete_bipartite_graph(spec.params[0], spec.params[1]);
    case Kind::kWheel:
      return wheel_graph(spec.params[0]);
    case Kind::kWhiskered:
      return whisker_all(build_family(spec.bases[0]));
    case Kind::kEdgeList:
      return read_edge_list_file(spec.path);
    case Kind::kDisjointUnion: {
      Graph g = build_family(spec.bases[0]);
      for (std::size_t i = 1; i < spec.bases.size(); ++i) {
        g = disjoint_union(g, build_family(spec.bases[i]));
      }
      return g;
    }
  }
  throw ConstructionError("unhandled family kind");
}

}  // namespace nil
