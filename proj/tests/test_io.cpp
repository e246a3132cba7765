#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nil/betti.hpp"
#include "nil/error.hpp"
#include "nil/io.hpp"

using namespace nil;

namespace {

int parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_edge_list(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(EdgeList, ReadsWithComments) {
  std::istringstream in("# a path\n3 2\n\n1 2  # first\n2 3\n");
  Graph g = read_edge_list(in);
  EXPECT_EQ(g, path_graph(3));
  std::istringstream back(write_edge_list(g));
  EXPECT_EQ(read_edge_list(back), g);
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line(""), 1);
  EXPECT_EQ(parse_error_line("3\n"), 1);
  EXPECT_EQ(parse_error_line("3 2\n1 2\n2 2\n"), 3);   // loop
  EXPECT_EQ(parse_error_line("3 2\n1 2\n1 4\n"), 3);   // endpoint out of range
  EXPECT_EQ(parse_error_line("3 2\n1 2\n2 1\n"), 3);   // repeated edge
  EXPECT_EQ(parse_error_line("3 2\n1 x\n"), 2);
  EXPECT_EQ(parse_error_line("3 1\n1 2\n2 3\n"), 3);   // too many edges
  EXPECT_NE(parse_error_line("3 2\n1 2\n"), 0);       // too few edges
  EXPECT_EQ(parse_error_line("3 2\n1 2\n2 3\n"), 0);
}

TEST(EdgeList, FileErrorNamesThePath) {
  auto path = std::filesystem::temp_directory_path() / "nil_io_bad.txt";
  std::ofstream(path) << "2 1\n1 1\n";
  try {
    read_edge_list_file(path.string());
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("nil_io_bad.txt"), std::string::npos);
  }
  std::filesystem::remove(path);
  EXPECT_THROW(read_edge_list_file("/nonexistent/nil/graph.txt"), Error);
}

TEST(Encoding, RoundTrip) {
  for (const Graph& g : {path_graph(4), cycle_graph(6), Graph(3), complete_graph(5), wheel_graph(6)}) {
    EXPECT_EQ(decode_graph(encode_graph(g)), g);
  }
  EXPECT_EQ(encode_graph(path_graph(3)), "3|1-2,2-3");
  EXPECT_EQ(encode_graph(Graph(2)), "2|");
  EXPECT_THROW(decode_graph("3|1-4"), Error);
  EXPECT_THROW(decode_graph("x|"), Error);
}

TEST(IdealIo, TextAndJson) {
  MonomialIdeal i = closed_neighborhood_ideal(cycle_graph(5));
  std::istringstream text(write_ideal_text(i));
  EXPECT_EQ(read_ideal_text(text, 5), i);
  EXPECT_EQ(ideal_from_json(ideal_to_json(i)), i);
  EXPECT_EQ(format_monomial(Monomial(0b101)), "x1*x3");
  EXPECT_EQ(format_monomial(Monomial()), "1");
  EXPECT_EQ(format_monomial(Monomial(0b11), {"a", "b"}), "a*b");

  std::istringstream unit("1\n");
  EXPECT_TRUE(read_ideal_text(unit, 2).is_unit());
  std::istringstream bad("x1*y2\n");
  EXPECT_THROW(read_ideal_text(bad), ParseError);
  EXPECT_THROW(ideal_from_json(json{{"n_vars", 2}, {"gens", {{1, 3}}}}), Error);
  EXPECT_THROW(ideal_from_json(json::parse("[1,2]")), ParseError);
}

TEST(ComplexIo, RoundTrip) {
  SimplicialComplex c(5, {0b00111, 0b11000, 0b10100});
  EXPECT_EQ(complex_from_json(complex_to_json(c)), c);
  SimplicialComplex e = SimplicialComplex::empty_complex(2);
  EXPECT_EQ(complex_from_json(complex_to_json(e)), e);
  SimplicialComplex v = SimplicialComplex::void_complex(2);
  EXPECT_EQ(complex_from_json(complex_to_json(v)), v);
}

TEST(BettiIo, JsonAndTable) {
  BettiTable t = betti_table_hochster(closed_neighborhood_ideal(cycle_graph(5)));
  json j = betti_to_json(t);
  EXPECT_EQ(j["reg"], 2);
  EXPECT_EQ(j["pd"], 3);
  EXPECT_EQ(j["p"], 2);
  EXPECT_EQ(betti_from_json(j, 5), t);
  const std::string text = format_betti_table(t);
  EXPECT_NE(text.find("total:"), std::string::npos);
  EXPECT_NE(text.find("1"), std::string::npos);
  EXPECT_EQ(text, format_betti_table(betti_from_json(j, 5)));

  BettiTable p3 = betti_table_hochster(closed_neighborhood_ideal(path_graph(3)));
  EXPECT_EQ(format_betti_table(p3),
            "       0 1 2\n"
            "total: 1 2 1\n"
            "    0: 1 . .\n"
            "    1: . 2 1\n");
}

TEST(Files, AtomicWrite) {
  auto dir = std::filesystem::temp_directory_path() / "nil_io_atomic";
  std::filesystem::create_directories(dir);
  auto path = (dir / "out.json").string();
  write_file_atomic(path, "first");
  write_file_atomic(path, "second");
  std::ifstream in(path);
  std::string s;
  std::getline(in, s);
  EXPECT_EQ(s, "second");
  EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
  std::filesystem::remove_all(dir);
}
