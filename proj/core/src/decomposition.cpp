#include "topo/decomposition.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace topo {

namespace {

int max_bag_width(const std::vector<std::vector<int>>& bags) {
  std::size_t m = 0;
  for (const auto& b : bags) m = std::max(m, b.size());
  return static_cast<int>(m) - 1;
}

bool bag_has(const std::vector<int>& bag, int v) {
  return std::binary_search(bag.begin(), bag.end(), v);
}

}  // namespace

int TreeDecomposition::width() const { return max_bag_width(bags); }

int PathDecomposition::width() const { return max_bag_width(bags); }

TreeDecomposition PathDecomposition::as_tree() const {
  TreeDecomposition t;
  t.bags = bags;
  t.tree = Multigraph(static_cast<int>(bags.size()));
  for (std::size_t i = 0; i + 1 < bags.size(); ++i)
    t.tree.add_arc(static_cast<int>(i), static_cast<int>(i + 1));
  return t;
}

ValidationResult validate_decomposition(const Multigraph& g,
                                        const TreeDecomposition& d) {
  ValidationResult res;
  const int b = static_cast<int>(d.bags.size());

  if (d.tree.n_nodes() != b) {
    res.fail("shape: tree has " + std::to_string(d.tree.n_nodes()) +
             " nodes for " + std::to_string(b) + " bags");
    return res;
  }
  if (b == 0) {
    if (g.n_nodes() > 0) res.fail("property 1: node 0 appears in no bag");
    return res;
  }
  if (d.tree.has_loops()) {
    res.fail("shape: tree contains a loop");
    return res;
  }
  if (d.tree.n_arcs() != b - 1 || !d.tree.is_connected()) {
    res.fail("shape: bag graph is not a tree (" +
             std::to_string(d.tree.n_arcs()) + " arcs on " +
             std::to_string(b) + " bags, " +
             std::to_string(d.tree.n_components()) + " components)");
    return res;
  }

  for (int i = 0; i < b; ++i) {
    const auto& bag = d.bags[i];
    if (!std::is_sorted(bag.begin(), bag.end()) ||
        std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      res.fail("shape: bag " + std::to_string(i) + " is not a sorted set");
      return res;
    }
    for (int v : bag)
      if (v < 0 || v >= g.n_nodes()) {
        res.fail("shape: bag " + std::to_string(i) + " contains node " +
                 std::to_string(v) + " outside the graph");
        return res;
      }
  }

  // Property 1: coverage.
  std::vector<char> seen(g.n_nodes(), 0);
  for (const auto& bag : d.bags)
    for (int v : bag) seen[v] = 1;
  for (int v = 0; v < g.n_nodes(); ++v)
    if (!seen[v])
      res.fail("property 1: node " + std::to_string(v) + " appears in no bag");

  // Property 2: arc coverage (loops and parallels reduce to the simple arc).
  const Multigraph simple = g.simple_underlying_graph();
  for (const auto& [u, v] : simple.arcs()) {
    bool covered = false;
    for (const auto& bag : d.bags)
      if (bag_has(bag, u) && bag_has(bag, v)) {
        covered = true;
        break;
      }
    if (!covered)
      res.fail("property 2: arc (" + std::to_string(u) + ", " +
               std::to_string(v) + ") is covered by no bag");
  }

  // Property 3: for each node, the bags holding it span a connected subtree.
  auto adj = d.tree.simple_adjacency();
  for (int v = 0; v < g.n_nodes(); ++v) {
    int start = -1, holding = 0;
    for (int i = 0; i < b; ++i)
      if (bag_has(d.bags[i], v)) {
        if (start < 0) start = i;
        ++holding;
      }
    if (holding <= 1) continue;
    std::vector<char> vis(b, 0);
    std::queue<int> q;
    q.push(start);
    vis[start] = 1;
    int reached = 1;
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j : adj[i])
        if (!vis[j] && bag_has(d.bags[j], v)) {
          vis[j] = 1;
          ++reached;
          q.push(j);
        }
    }
    if (reached != holding)
      res.fail("property 3: bags containing node " + std::to_string(v) +
               " form a disconnected subtree");
  }

  return res;
}

ValidationResult validate_decomposition(const Multigraph& g,
                                        const PathDecomposition& d) {
  return validate_decomposition(g, d.as_tree());
}

// ===== Nice decompositions =====

std::string bag_kind_name(BagKind k) {
  switch (k) {
    case BagKind::Leaf: return "leaf";
    case BagKind::Introduce: return "introduce";
    case BagKind::Forget: return "forget";
    case BagKind::Join: return "join";
  }
  return "?";
}

int NiceTreeDecomposition::width() const { return max_bag_width(bags); }

int count_join_bags(const NiceTreeDecomposition& n) {
  int c = 0;
  for (BagKind k : n.kinds)
    if (k == BagKind::Join) ++c;
  return c;
}

ValidationResult validate_nice(const Multigraph& g,
                               const NiceTreeDecomposition& n) {
  ValidationResult res;
  const int b = n.n_bags();
  if (b == 0 || static_cast<int>(n.parent.size()) != b ||
      static_cast<int>(n.kinds.size()) != b) {
    res.fail("shape: bag, parent and kind arrays disagree");
    return res;
  }
  if (n.root < 0 || n.root >= b || n.parent[n.root] != -1) {
    res.fail("shape: root is not a parentless bag");
    return res;
  }

  TreeDecomposition plain;
  plain.bags = n.bags;
  plain.tree = Multigraph(b);
  std::vector<std::vector<int>> children(b);
  for (int i = 0; i < b; ++i) {
    if (i == n.root) continue;
    if (n.parent[i] < 0 || n.parent[i] >= b) {
      res.fail("shape: bag " + std::to_string(i) + " has no valid parent");
      return res;
    }
    plain.tree.add_arc(i, n.parent[i]);
    children[n.parent[i]].push_back(i);
  }

  ValidationResult inner = validate_decomposition(g, plain);
  if (!inner.valid) return inner;

  for (int i = 0; i < b; ++i) {
    const auto& kids = children[i];
    const auto& bag = n.bags[i];
    std::string at = "bag " + std::to_string(i);
    switch (n.kinds[i]) {
      case BagKind::Leaf:
        if (!kids.empty()) res.fail(at + ": leaf with children");
        break;
      case BagKind::Join:
        if (kids.size() != 2)
          res.fail(at + ": join without two children");
        else if (n.bags[kids[0]] != bag || n.bags[kids[1]] != bag)
          res.fail(at + ": join children differ from the join bag");
        break;
      case BagKind::Introduce:
      case BagKind::Forget: {
        if (kids.size() != 1) {
          res.fail(at + ": unary kind without exactly one child");
          break;
        }
        const auto& child = n.bags[kids[0]];
        std::vector<int> small = child, large = bag;
        if (n.kinds[i] == BagKind::Forget) std::swap(small, large);
        if (large.size() != small.size() + 1 ||
            !std::includes(large.begin(), large.end(), small.begin(),
                           small.end()))
          res.fail(at + ": does not " + bag_kind_name(n.kinds[i]) +
                   " exactly one node");
        break;
      }
    }
  }
  return res;
}

// ===== Export =====

std::string to_dot(const TreeDecomposition& d) {
  std::ostringstream out;
  out << "graph decomposition {\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < d.bags.size(); ++i) {
    out << "  b" << i << " [label=\"{";
    for (std::size_t j = 0; j < d.bags[i].size(); ++j) {
      if (j) out << ",";
      out << d.bags[i][j];
    }
    out << "}\"];\n";
  }
  for (const auto& [u, v] : d.tree.arcs())
    out << "  b" << u << " -- b" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace topo
