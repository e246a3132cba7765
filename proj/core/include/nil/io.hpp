#pragma once

#include <istream>
#include <string>

#include <nlohmann/json.hpp>

#include "nil/betti.hpp"
#include "nil/graph.hpp"
#include "nil/monomial.hpp"
#include "nil/simplicial.hpp"

namespace nil {

using json = nlohmann::json;

// Edge lists: first line "n m", then m lines "u v" with 1-based indices.
// Blank lines and '#' comments are skipped.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Graph& g);

/// Compact, reconstructible encoding: "n|u-v,u-v,..." (1-based).
std::string encode_graph(const Graph& g);
Graph decode_graph(const std::string& text);

// Ideals. Text: one generator per line as '*'-joined labels ("x1*x2"), "1"
// for the unit monomial. JSON: {"n_vars": n, "gens": [[indices]]} with
// 1-based indices.
std::string format_monomial(Monomial m, const std::vector<std::string>& labels = {});
std::string write_ideal_text(const MonomialIdeal& ideal, const std::vector<std::string>& labels = {});
/// Labels are "x<k>"; the universe is the largest index seen unless
/// `n_vars` is larger.
MonomialIdeal read_ideal_text(std::istream& in, int n_vars = 0);
json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const json& j);

// Complexes: {"n": n, "facets": [[indices]]}, 1-based.
json complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const json& j);

/// {"p": p, "ranks": {"-1": r, "0": r, ...}}
json homology_to_json(const HomologyProfile& h);

/// {"p": p, "entries": [[i, j, count]...], "reg": r, "pd": d}
json betti_to_json(const BettiTable& table);
BettiTable betti_from_json(const json& j, int n_vars = 0);

/// Triangular table: columns are i, rows are j - i.
std::string format_betti_table(const BettiTable& table);

json split_report_to_json(const SplitReport& report);

/// Writes to a temporary sibling and renames over `path`.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace nil
