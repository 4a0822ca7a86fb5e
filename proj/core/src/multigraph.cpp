#include "topo/multigraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "topo/errors.hpp"

namespace topo {

void Multigraph::add_arc(int u, int v) {
  if (u > v) std::swap(u, v);
  arcs_.emplace_back(u, v);
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : arcs_) {
    if (a == v) ++d;
    if (b == v) ++d;
  }
  return d;
}

std::vector<int> Multigraph::degree_sequence() const {
  std::vector<int> deg(n_nodes_, 0);
  for (const auto& [a, b] : arcs_) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

bool Multigraph::has_loops() const {
  return std::any_of(arcs_.begin(), arcs_.end(),
                     [](const auto& e) { return e.first == e.second; });
}

bool Multigraph::has_parallel_arcs() const {
  auto sorted = arcs_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

namespace {

// Union-find over 0..n-1, used for component counting.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int Multigraph::n_components() const {
  if (n_nodes_ == 0) return 0;
  UnionFind uf(n_nodes_);
  for (const auto& [a, b] : arcs_) uf.unite(a, b);
  std::set<int> roots;
  for (int i = 0; i < n_nodes_; ++i) roots.insert(uf.find(i));
  return static_cast<int>(roots.size());
}

bool Multigraph::is_connected() const { return n_components() <= 1; }

int Multigraph::first_betti_number() const {
  return n_arcs() - n_nodes_ + n_components();
}

Multigraph Multigraph::simple_underlying_graph() const {
  Multigraph g(n_nodes_);
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : arcs_) {
    if (a == b) continue;
    if (seen.insert({a, b}).second) g.add_arc(a, b);
  }
  g.canonicalize();
  return g;
}

std::vector<std::vector<int>> Multigraph::simple_adjacency() const {
  std::vector<std::set<int>> nbr(n_nodes_);
  for (const auto& [a, b] : arcs_) {
    if (a == b) continue;
    nbr[a].insert(b);
    nbr[b].insert(a);
  }
  std::vector<std::vector<int>> adj(n_nodes_);
  for (int i = 0; i < n_nodes_; ++i) adj[i].assign(nbr[i].begin(), nbr[i].end());
  return adj;
}

void Multigraph::canonicalize() { std::sort(arcs_.begin(), arcs_.end()); }

// ===== Text formats =====

Multigraph parse_gr(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  Multigraph g;
  int arcs_seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      if (n >= 0) throw ParseError("duplicate problem line", lineno);
      std::string p, tw;
      if (!(ls >> p >> tw >> n >> m) || p != "p" || tw != "tw" || n < 0 || m < 0)
        throw ParseError("expected 'p tw <n> <m>'", lineno);
      g = Multigraph(n);
      continue;
    }
    if (n < 0) throw ParseError("arc before problem line", lineno);
    int u, v;
    if (!(ls >> u >> v)) throw ParseError("expected '<u> <v>'", lineno);
    std::string rest;
    if (ls >> rest) throw ParseError("trailing token '" + rest + "'", lineno);
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError("endpoint out of range 1.." + std::to_string(n), lineno);
    g.add_arc(u - 1, v - 1);
    ++arcs_seen;
  }
  if (n < 0) throw ParseError("missing problem line", lineno == 0 ? 1 : lineno);
  if (arcs_seen != m)
    throw ParseError("header announced " + std::to_string(m) + " arcs, found " +
                         std::to_string(arcs_seen),
                     lineno);
  return g;
}

std::string to_dot(const Multigraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int i = 0; i < g.n_nodes(); ++i) out << "  " << i << ";\n";
  for (const auto& [a, b] : g.arcs()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace topo
