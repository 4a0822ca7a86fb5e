#pragma once

#include <string>
#include <utility>
#include <vector>

namespace topo {

// Undirected multigraph. Arcs are stored explicitly, so parallel arcs are
// distinct and loops (u == v) are permitted. Arc endpoints are normalized
// to u <= v; canonical() additionally sorts the arc list.
class Multigraph {
public:
  Multigraph() = default;
  explicit Multigraph(int n_nodes) : n_nodes_(n_nodes) {}

  int n_nodes() const { return n_nodes_; }
  int n_arcs() const { return static_cast<int>(arcs_.size()); }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

  // Appends a node and returns its index.
  int add_node() { return n_nodes_++; }
  void add_arc(int u, int v);

  // Degree counts a loop at v twice.
  int degree(int v) const;
  std::vector<int> degree_sequence() const;

  bool has_loops() const;
  bool has_parallel_arcs() const;

  bool is_connected() const;
  int n_components() const;

  // Sum over components of (arcs - nodes + 1); the cycle rank.
  int first_betti_number() const;

  // Same node set, loops dropped, parallel arcs collapsed to one.
  Multigraph simple_underlying_graph() const;

  // Adjacency lists of the simple underlying graph.
  std::vector<std::vector<int>> simple_adjacency() const;

  // Sorts the arc list lexicographically (endpoints are already normalized).
  void canonicalize();

  bool operator==(const Multigraph&) const = default;

private:
  int n_nodes_ = 0;
  std::vector<std::pair<int, int>> arcs_;
};

// ===== Text formats =====

// PACE-style .gr: optional 'c' comment lines, one 'p tw <n> <m>' header,
// then m lines "<u> <v>" with 1-based endpoints. Throws ParseError.
Multigraph parse_gr(const std::string& text);

// Graphviz output, "graph G { ... }" with one "u -- v;" line per arc.
std::string to_dot(const Multigraph& g);

// {"arcs":[[u,v],...],"n_nodes":n} with the arc list in stored order.
std::string to_json_string(const Multigraph& g);
Multigraph multigraph_from_json(const std::string& text);

}  // namespace topo
