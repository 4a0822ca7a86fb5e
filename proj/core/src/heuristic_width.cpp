#include "topo/heuristic_width.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace topo {

namespace {

// Eliminates all vertices greedily, connecting the neighborhood of each
// departing vertex into a clique. Returns the order and per-vertex bags.
struct Elimination {
  std::vector<int> order;
  std::vector<std::vector<int>> bags;  // aligned with order, sorted
};

Elimination eliminate(const Multigraph& simple, Strategy strategy) {
  const int n = simple.n_nodes();
  std::vector<std::set<int>> nbr(n);
  for (const auto& [u, v] : simple.arcs()) {
    nbr[u].insert(v);
    nbr[v].insert(u);
  }

  auto fill_in = [&](int v) {
    int missing = 0;
    for (auto it = nbr[v].begin(); it != nbr[v].end(); ++it)
      for (auto jt = std::next(it); jt != nbr[v].end(); ++jt)
        if (!nbr[*it].count(*jt)) ++missing;
    return missing;
  };

  Elimination e;
  std::vector<char> gone(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_score = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long score = strategy == Strategy::MinDegree
                       ? static_cast<long>(nbr[v].size())
                       : fill_in(v);
      if (best < 0 || score < best_score) {
        best = v;
        best_score = score;
      }
    }

    std::vector<int> bag(nbr[best].begin(), nbr[best].end());
    bag.insert(std::lower_bound(bag.begin(), bag.end(), best), best);
    e.order.push_back(best);
    e.bags.push_back(std::move(bag));

    for (int u : nbr[best])
      for (int w : nbr[best])
        if (u < w) {
          nbr[u].insert(w);
          nbr[w].insert(u);
        }
    for (int u : nbr[best]) nbr[u].erase(best);
    nbr[best].clear();
    gone[best] = 1;
  }
  return e;
}

}  // namespace

std::string width_parameter_name(WidthParameter p) {
  return p == WidthParameter::Treewidth ? "treewidth" : "pathwidth";
}

std::string strategy_name(Strategy s) {
  return s == Strategy::MinDegree ? "min_degree" : "min_fill";
}

WidthCertificate heuristic_width(const Multigraph& g, WidthParameter parameter,
                                 Strategy strategy) {
  Multigraph simple = g.simple_underlying_graph();
  const int n = simple.n_nodes();
  Elimination e = eliminate(simple, strategy);

  WidthCertificate cert;
  cert.parameter = width_parameter_name(parameter);
  cert.exact = false;
  cert.value = n == 0 ? -1 : 0;

  if (parameter == WidthParameter::Treewidth) {
    std::vector<int> position(n, -1);
    for (int t = 0; t < n; ++t) position[e.order[t]] = t;

    cert.decomposition.bags = e.bags;
    cert.decomposition.tree = Multigraph(n);
    std::vector<int> roots;
    for (int t = 0; t < n; ++t) {
      int parent = -1;
      for (int u : e.bags[t]) {
        if (u == e.order[t]) continue;
        if (parent < 0 || position[u] < position[parent]) parent = u;
      }
      if (parent >= 0)
        cert.decomposition.tree.add_arc(t, position[parent]);
      else
        roots.push_back(t);
    }
    for (std::size_t c = 0; c + 1 < roots.size(); ++c)
      cert.decomposition.tree.add_arc(roots[c], roots[c + 1]);
  } else {
    // The elimination order works as a layout: bag t keeps every earlier
    // vertex that still has an unplaced neighbor.
    auto adj = simple.simple_adjacency();
    std::vector<char> placed(n, 0);
    PathDecomposition pd;
    for (int t = 0; t < n; ++t) {
      std::vector<int> bag;
      for (int u = 0; u < n; ++u) {
        if (!placed[u]) continue;
        bool open = false;
        for (int x : adj[u])
          if (!placed[x]) {
            open = true;
            break;
          }
        if (open) bag.push_back(u);
      }
      bag.insert(std::lower_bound(bag.begin(), bag.end(), e.order[t]),
                 e.order[t]);
      pd.bags.push_back(std::move(bag));
      placed[e.order[t]] = 1;
    }
    cert.decomposition = pd.as_tree();
  }

  for (const auto& bag : cert.decomposition.bags)
    cert.value = std::max(cert.value, static_cast<int>(bag.size()) - 1);
  return cert;
}

}  // namespace topo
