#include "topo/exact_width.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "topo/errors.hpp"
#include "tree_pathwidth.hpp"

namespace topo {

namespace {

// Subset of up to 128 vertices.
struct Mask {
  std::array<std::uint64_t, 2> w{0, 0};

  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  Mask with(int i) const {
    Mask m = *this;
    m.set(i);
    return m;
  }
  int count() const {
    return std::popcount(w[0]) + std::popcount(w[1]);
  }
  bool none() const { return (w[0] | w[1]) == 0; }
  bool intersects(const Mask& o) const {
    return (w[0] & o.w[0]) | (w[1] & o.w[1]);
  }
  Mask operator|(const Mask& o) const {
    return {{w[0] | o.w[0], w[1] | o.w[1]}};
  }
  Mask operator&(const Mask& o) const {
    return {{w[0] & o.w[0], w[1] & o.w[1]}};
  }
  Mask operator~() const { return {{~w[0], ~w[1]}}; }
  bool operator==(const Mask&) const = default;

  // First set bit at position >= from, or -1.
  int next(int from) const {
    for (int word = from >> 6; word < 2; ++word) {
      std::uint64_t bits = w[word];
      if (word == from >> 6) bits &= ~std::uint64_t{0} << (from & 63);
      if (bits) return word * 64 + std::countr_zero(bits);
      from = (word + 1) * 64;
    }
    return -1;
  }
};

struct MaskHash {
  std::size_t operator()(const Mask& m) const {
    std::uint64_t h = m.w[0] * 0x9e3779b97f4a7c15ull;
    h ^= m.w[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Max over the removal process of the minimum degree; a lower bound for
// treewidth and hence pathwidth.
int degeneracy(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> deg(n);
  std::vector<char> gone(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
  int best = 0;
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int u = 0; u < n; ++u)
      if (!gone[u] && (v < 0 || deg[u] < deg[v])) v = u;
    best = std::max(best, deg[v]);
    gone[v] = 1;
    for (int u : adj[v])
      if (!gone[u]) --deg[u];
  }
  return best;
}

// ===== Treewidth on one component, local labels =====

struct TwSolver {
  int n = 0;
  std::vector<Mask> adj;
  Mask full;
  int k = 0;
  std::unordered_set<Mask, MaskHash> failed;
  std::vector<int> order;

  // q[v]: neighbors of the component of v in G[S + v], for v outside S.
  // Equivalently the bag v would get if eliminated now.
  void reach(const Mask& S, std::vector<Mask>& q) const {
    std::vector<Mask> comp_mask, comp_nbr;
    Mask seen;
    for (int v = S.next(0); v >= 0; v = S.next(v + 1)) {
      if (seen.test(v)) continue;
      Mask cm, cn;
      cm.set(v);
      std::vector<int> stack{v};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        cn = cn | adj[u];
        Mask fresh = adj[u] & S & ~cm;
        for (int x = fresh.next(0); x >= 0; x = fresh.next(x + 1)) {
          cm.set(x);
          stack.push_back(x);
        }
      }
      seen = seen | cm;
      comp_mask.push_back(cm);
      comp_nbr.push_back(cn);
    }
    for (int v = 0; v < n; ++v) {
      if (S.test(v)) continue;
      Mask r = adj[v];
      for (std::size_t c = 0; c < comp_mask.size(); ++c)
        if (adj[v].intersects(comp_mask[c])) r = r | comp_nbr[c];
      r = r & ~S;
      r.reset(v);
      q[v] = r;
    }
  }

  bool simplicial(const std::vector<Mask>& q, int v) const {
    for (int u = q[v].next(0); u >= 0; u = q[v].next(u + 1)) {
      Mask missing = q[v] & ~q[u];
      missing.reset(u);
      if (!missing.none()) return false;
    }
    return true;
  }

  bool dfs(Mask S) {
    if (S == full) return true;
    if (failed.count(S)) return false;
    const Mask entry = S;
    const std::size_t mark = order.size();
    std::vector<Mask> q(n);

    // Eliminate simplicial vertices outright; one whose clique is too big
    // already certifies failure.
    for (;;) {
      reach(S, q);
      int v = -1;
      for (int u = 0; u < n; ++u)
        if (!S.test(u) && simplicial(q, u)) {
          v = u;
          break;
        }
      if (v < 0) break;
      if (q[v].count() > k) {
        order.resize(mark);
        failed.insert(entry);
        return false;
      }
      S.set(v);
      order.push_back(v);
      if (S == full) return true;
    }

    for (int v = 0; v < n; ++v) {
      if (S.test(v) || q[v].count() > k) continue;
      Mask next = S.with(v);
      order.push_back(v);
      if (dfs(next)) return true;
      order.pop_back();
    }
    order.resize(mark);
    failed.insert(entry);
    return false;
  }

  // Smallest k admitting a full elimination; fills order.
  int solve(int lower) {
    for (k = lower;; ++k) {
      failed.clear();
      order.clear();
      if (dfs(Mask{})) return k;
    }
  }
};

// ===== Pathwidth on one component, local labels =====

struct PwSolver {
  int n = 0;
  std::vector<Mask> adj;
  Mask full;
  int k = 0;
  std::unordered_set<Mask, MaskHash> failed;
  std::vector<int> order;

  int boundary(const Mask& S) const {
    int b = 0;
    for (int v = S.next(0); v >= 0; v = S.next(v + 1))
      if (!(adj[v] & ~S).none()) ++b;
    return b;
  }

  bool dfs(Mask S) {
    if (S == full) return true;
    if (failed.count(S)) return false;
    const Mask entry = S;
    const std::size_t mark = order.size();

    // A vertex with every neighbor already placed can go next for free.
    for (;;) {
      int v = -1;
      for (int u = 0; u < n; ++u) {
        if (S.test(u)) continue;
        Mask outside = adj[u] & ~S;
        outside.reset(u);
        if (outside.none()) {
          v = u;
          break;
        }
      }
      if (v < 0) break;
      S.set(v);
      order.push_back(v);
      if (S == full) return true;
    }

    for (int v = 0; v < n; ++v) {
      if (S.test(v)) continue;
      Mask next = S.with(v);
      if (boundary(next) > k || failed.count(next)) continue;
      order.push_back(v);
      if (dfs(next)) return true;
      order.pop_back();
    }
    order.resize(mark);
    failed.insert(entry);
    return false;
  }

  int solve(int lower) {
    for (k = lower;; ++k) {
      failed.clear();
      order.clear();
      if (dfs(Mask{})) return k;
    }
  }
};

std::vector<std::vector<int>> components_of(
    const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n, 0);
  for (int r = 0; r < n; ++r) {
    if (seen[r]) continue;
    std::vector<int> comp{r};
    seen[r] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (int v : adj[comp[head]])
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

void enforce_budget(const Multigraph& simple, const ExactOptions& options,
                    bool forest) {
  if (forest) return;  // polynomial forest solver, no subset blowup
  if (simple.n_nodes() > options.cutoff)
    throw CutoffExceeded(simple.n_nodes(), options.cutoff);
  if (simple.n_nodes() > 128)
    throw DomainError("exact width search supports at most 128 nodes");
}

}  // namespace

WidthCertificate exact_treewidth(const Multigraph& g,
                                 const ExactOptions& options) {
  Multigraph simple = g.simple_underlying_graph();
  const int n = simple.n_nodes();
  const bool forest =
      simple.n_arcs() == simple.n_nodes() - simple.n_components();
  enforce_budget(simple, options, forest);
  auto adj = simple.simple_adjacency();

  WidthCertificate cert;
  cert.parameter = "treewidth";
  cert.exact = true;
  cert.value = n == 0 ? -1 : 0;
  cert.decomposition.tree = Multigraph(0);

  if (forest) {
    // One bag per node, {v, parent} below each component root, with the
    // roots chained so the bags form a single tree.
    cert.decomposition.tree = Multigraph(n);
    cert.decomposition.bags.assign(n, std::vector<int>{});
    std::vector<char> seen(n, 0);
    int prev_root = -1;
    for (int r = 0; r < n; ++r) {
      if (seen[r]) continue;
      seen[r] = 1;
      cert.decomposition.bags[r] = {r};
      if (prev_root >= 0) cert.decomposition.tree.add_arc(prev_root, r);
      prev_root = r;
      std::vector<int> queue{r};
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (int w : adj[queue[head]])
          if (!seen[w]) {
            seen[w] = 1;
            int v = queue[head];
            cert.decomposition.bags[w] = {std::min(v, w), std::max(v, w)};
            cert.decomposition.tree.add_arc(v, w);
            cert.value = 1;
            queue.push_back(w);
          }
    }
    return cert;
  }

  std::vector<int> comp_root_bags;
  for (const auto& comp : components_of(adj)) {
    const int m = static_cast<int>(comp.size());
    std::vector<int> local(n, -1);
    for (int i = 0; i < m; ++i) local[comp[i]] = i;

    TwSolver solver;
    solver.n = m;
    solver.adj.assign(m, Mask{});
    std::vector<std::vector<int>> comp_adj(m);
    for (int i = 0; i < m; ++i) {
      solver.full.set(i);
      for (int x : adj[comp[i]]) {
        solver.adj[i].set(local[x]);
        comp_adj[i].push_back(local[x]);
      }
    }
    cert.value = std::max(cert.value, solver.solve(degeneracy(comp_adj)));

    // Replay the elimination to recover bags; each bag hangs off the bag of
    // the earliest-eliminated vertex of its clique.
    const int base = cert.decomposition.tree.n_nodes();
    std::vector<int> position(m, -1);
    std::vector<Mask> clique(m);
    Mask S;
    std::vector<Mask> q(m);
    int root_bag = -1;
    for (int t = 0; t < m; ++t) {
      int v = solver.order[t];
      solver.reach(S, q);
      clique[t] = q[v];
      std::vector<int> bag{comp[v]};
      for (int u = q[v].next(0); u >= 0; u = q[v].next(u + 1))
        bag.push_back(comp[u]);
      std::sort(bag.begin(), bag.end());
      cert.decomposition.bags.push_back(std::move(bag));
      cert.decomposition.tree.add_node();
      position[v] = t;
      S.set(v);
      if (q[v].none()) root_bag = base + t;
    }
    for (int t = 0; t < m; ++t) {
      int first = -1;
      for (int u = clique[t].next(0); u >= 0; u = clique[t].next(u + 1))
        if (first < 0 || position[u] < position[first]) first = u;
      if (first >= 0)
        cert.decomposition.tree.add_arc(base + t, base + position[first]);
    }
    comp_root_bags.push_back(root_bag);
  }

  for (std::size_t c = 0; c + 1 < comp_root_bags.size(); ++c)
    cert.decomposition.tree.add_arc(comp_root_bags[c], comp_root_bags[c + 1]);
  return cert;
}

WidthCertificate exact_pathwidth(const Multigraph& g,
                                 const ExactOptions& options) {
  Multigraph simple = g.simple_underlying_graph();
  const int n = simple.n_nodes();
  const bool forest =
      simple.n_arcs() == simple.n_nodes() - simple.n_components();
  enforce_budget(simple, options, forest);
  auto adj = simple.simple_adjacency();

  WidthCertificate cert;
  cert.parameter = "pathwidth";
  cert.exact = true;

  if (forest) {
    ForestPathwidth fp = forest_pathwidth(adj);
    cert.value = fp.value;
    cert.decomposition = fp.decomposition.as_tree();
    return cert;
  }

  cert.value = 0;
  PathDecomposition pd;
  for (const auto& comp : components_of(adj)) {
    const int m = static_cast<int>(comp.size());
    std::vector<int> local(n, -1);
    for (int i = 0; i < m; ++i) local[comp[i]] = i;

    PwSolver solver;
    solver.n = m;
    solver.adj.assign(m, Mask{});
    std::vector<std::vector<int>> comp_adj(m);
    for (int i = 0; i < m; ++i) {
      solver.full.set(i);
      for (int x : adj[comp[i]]) {
        solver.adj[i].set(local[x]);
        comp_adj[i].push_back(local[x]);
      }
    }
    cert.value = std::max(cert.value, solver.solve(degeneracy(comp_adj)));

    // Bag i holds the i-th vertex of the layout plus every earlier vertex
    // that still has an unplaced neighbor.
    Mask placed;
    for (int t = 0; t < m; ++t) {
      std::vector<int> bag;
      for (int u = placed.next(0); u >= 0; u = placed.next(u + 1))
        if (!(solver.adj[u] & ~placed).none()) bag.push_back(comp[u]);
      bag.push_back(comp[solver.order[t]]);
      std::sort(bag.begin(), bag.end());
      pd.bags.push_back(std::move(bag));
      placed.set(solver.order[t]);
    }
  }
  cert.decomposition = pd.as_tree();
  return cert;
}

}  // namespace topo
