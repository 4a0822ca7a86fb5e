#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "topo/errors.hpp"
#include "topo/multigraph.hpp"

using topo::Multigraph;

TEST_SUITE("multigraph") {

TEST_CASE("arcs are normalized and loops are counted twice") {
  Multigraph g(3);
  g.add_arc(2, 0);
  g.add_arc(1, 1);
  CHECK(g.arcs() == std::vector<std::pair<int, int>>{{0, 2}, {1, 1}});
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(2) == 1);
  CHECK(g.degree_sequence() == std::vector<int>{1, 2, 1});
  CHECK(g.has_loops());
  CHECK_FALSE(g.has_parallel_arcs());
  g.add_arc(0, 2);
  CHECK(g.has_parallel_arcs());
}

TEST_CASE("add_node appends an isolated node") {
  Multigraph g(1);
  CHECK(g.add_node() == 1);
  CHECK(g.add_node() == 2);
  CHECK(g.n_nodes() == 3);
  CHECK(g.degree(2) == 0);
}

TEST_CASE("connectivity and Betti number") {
  Multigraph g(4);
  g.add_arc(0, 1);
  g.add_arc(2, 3);
  CHECK_FALSE(g.is_connected());
  CHECK(g.n_components() == 2);
  CHECK(g.first_betti_number() == 0);
  g.add_arc(1, 2);
  CHECK(g.is_connected());
  g.add_arc(3, 0);
  CHECK(g.first_betti_number() == 1);
  g.add_arc(1, 1);  // a loop is a cycle
  CHECK(g.first_betti_number() == 2);
  g.add_arc(0, 1);  // as is a parallel arc
  CHECK(g.first_betti_number() == 3);

  Multigraph empty(0);
  CHECK(empty.n_components() == 0);
  CHECK(empty.is_connected());
  CHECK(empty.first_betti_number() == 0);
}

TEST_CASE("simple underlying graph collapses noise") {
  Multigraph g(3);
  g.add_arc(0, 1);
  g.add_arc(1, 0);
  g.add_arc(2, 2);
  g.add_arc(1, 2);
  Multigraph s = g.simple_underlying_graph();
  CHECK(s.n_nodes() == 3);
  CHECK(s.arcs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(g.simple_adjacency() ==
        std::vector<std::vector<int>>{{1}, {0, 2}, {1}});
}

TEST_CASE("canonicalize sorts the arc list") {
  Multigraph g(3);
  g.add_arc(1, 2);
  g.add_arc(0, 2);
  g.add_arc(0, 1);
  g.canonicalize();
  CHECK(g.arcs() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("parse_gr reads the PACE format") {
  Multigraph g = topo::parse_gr(
      "c a triangle with a pendant\n"
      "p tw 4 4\n"
      "1 2\n"
      "2 3\n"
      "3 1\n"
      "c another comment\n"
      "1 4\n");
  CHECK(g.n_nodes() == 4);
  CHECK(g.n_arcs() == 4);
  CHECK(g.first_betti_number() == 1);
}

TEST_CASE("parse_gr rejects malformed input") {
  auto line_of = [](const std::string& text) {
    try {
      topo::parse_gr(text);
    } catch (const topo::ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("1 2\n") == 1);
  CHECK(line_of("p tw 2 1\np tw 2 1\n") == 2);
  CHECK(line_of("p cep 2 1\n1 2\n") == 1);
  CHECK(line_of("p tw 2 1\n1\n") == 2);
  CHECK(line_of("p tw 2 1\n1 2 3\n") == 2);
  CHECK(line_of("p tw 2 1\n1 3\n") == 2);
  CHECK(line_of("p tw 2 1\n0 1\n") == 2);
  CHECK(line_of("p tw 2 2\n1 2\n") > 0);  // arc count mismatch
}

TEST_CASE("dot export lists every arc once") {
  Multigraph g(2);
  g.add_arc(0, 1);
  g.add_arc(0, 1);
  const std::string dot = topo::to_dot(g);
  CHECK(dot.find("graph") == 0);
  CHECK(dot.find("0 -- 1") != std::string::npos);
  CHECK(dot.rfind("}\n") == dot.size() - 2);
}

TEST_CASE("json export round-trips") {
  Multigraph g(3);
  g.add_arc(0, 1);
  g.add_arc(1, 1);
  g.add_arc(0, 1);
  const std::string text = topo::to_json_string(g);
  Multigraph back = topo::multigraph_from_json(text);
  CHECK(back == g);
  CHECK(topo::to_json_string(back) == text);
}

TEST_CASE("multigraph_from_json rejects bad payloads") {
  CHECK_THROWS_AS(topo::multigraph_from_json("not json"), topo::ParseError);
  CHECK_THROWS_AS(topo::multigraph_from_json("{}"), topo::ParseError);
  CHECK_THROWS_AS(topo::multigraph_from_json(R"({"n_nodes": 2})"),
                  topo::ParseError);
  CHECK_THROWS_AS(
      topo::multigraph_from_json(R"({"arcs": [[0]], "n_nodes": 2})"),
      topo::ParseError);
  CHECK_THROWS_AS(
      topo::multigraph_from_json(R"({"arcs": [[0, 5]], "n_nodes": 2})"),
      topo::ParseError);
  CHECK_THROWS_AS(
      topo::multigraph_from_json(R"({"arcs": [[0, 1.5]], "n_nodes": 2})"),
      topo::ParseError);
}

}  // TEST_SUITE
