#include "tree_pathwidth.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "topo/errors.hpp"

// Pathwidth of a forest equals its vertex separation number, and on a tree
// that number follows a branch rule: for k >= 1 the separation is at most k
// exactly when no vertex has three branches of separation k or more. The
// separation is therefore one more than the third-largest branch value over
// all vertices of degree three or higher, with caterpillars as the base of
// the recursion. Only that third-largest value is needed, so the largest
// branch at each vertex is handled by threshold tests (caterpillar check,
// subtree lower bounds from a preorder tour) and almost never evaluated
// exactly. An optimal layout walks the chain of forced heavy branches and
// lays out the light branches hanging off it.

namespace topo {

namespace {

class PieceSolver {
 public:
  explicit PieceSolver(const std::vector<std::vector<int>>& adj)
      : adj_(adj), mark_(adj.size(), 0) {
    build_tour();
  }

  // Connected components of the induced forest, sorted by smallest vertex.
  std::vector<std::vector<int>> components() {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(adj_.size(), 0);
    for (int r = 0; r < static_cast<int>(adj_.size()); ++r) {
      if (seen[r]) continue;
      std::vector<int> comp{r};
      seen[r] = 1;
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (int u : adj_[comp[i]])
          if (!seen[u]) {
            seen[u] = 1;
            comp.push_back(u);
          }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  // Components of piece minus cut, each sorted, ordered by smallest vertex.
  std::vector<std::vector<int>> branches(const std::vector<int>& piece,
                                         int cut) {
    for (int v : piece) mark_[v] = 1;
    mark_[cut] = 0;
    std::vector<std::vector<int>> out;
    for (int r : piece) {
      if (!mark_[r]) continue;
      std::vector<int> comp{r};
      mark_[r] = 0;
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (int u : adj_[comp[i]])
          if (mark_[u]) {
            mark_[u] = 0;
            comp.push_back(u);
          }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  int separation(const std::vector<int>& piece) {
    if (piece.size() <= 1) return 0;
    auto it = memo_.find(piece);
    if (it != memo_.end()) return it->second;
    int best = 1;
    if (!caterpillar(piece)) {
      best = 2;
      for (int v : piece) {
        if (degree_within(piece, v) < 3) continue;
        auto brs = branches(piece, v);
        std::sort(brs.begin(), brs.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                    return a.size() != b.size() ? a.size() < b.size()
                                                : a.front() < b.front();
                  });
        std::vector<int> small;
        for (std::size_t i = 0; i + 1 < brs.size(); ++i)
          small.push_back(separation(brs[i]));
        std::sort(small.rbegin(), small.rend());
        const int s2 = small[1];
        const int s3 = small.size() >= 3 ? small[2] : 0;
        int third;
        if (decide_ge(brs.back(), s2))
          third = s2;
        else if (!decide_ge(brs.back(), s3 + 1))
          third = s3;
        else
          third = std::max(s3, separation(brs.back()));
        best = std::max(best, third + 1);
      }
    }
    memo_[piece] = best;
    return best;
  }

  // Whether the piece has separation at least m. Resolves through shortcuts
  // where possible and falls back to the exact value.
  bool decide_ge(const std::vector<int>& piece, int m) {
    if (m <= 0) return true;
    if (static_cast<int>(piece.size()) <= m) return false;
    auto it = memo_.find(piece);
    if (it != memo_.end()) return it->second >= m;
    if (m == 1) return true;
    if (caterpillar(piece)) return false;
    if (m == 2) return true;

    // Any fully contained subtree of the preorder tour bounds the piece
    // from below; try the small ones first.
    std::vector<int> tins;
    tins.reserve(piece.size());
    for (int v : piece) tins.push_back(tin_[v]);
    std::sort(tins.begin(), tins.end());
    std::vector<std::pair<int, int>> cands;
    for (int w : piece) {
      const int size = tout_[w] - tin_[w] + 1;
      if (size >= static_cast<int>(piece.size())) continue;
      auto lo = std::lower_bound(tins.begin(), tins.end(), tin_[w]);
      auto hi = std::upper_bound(tins.begin(), tins.end(), tout_[w]);
      if (static_cast<int>(hi - lo) == size) cands.emplace_back(size, w);
    }
    std::sort(cands.begin(), cands.end());
    for (const auto& [size, w] : cands)
      if (separation(subtree_piece(w)) >= m) return true;
    return separation(piece) >= m;
  }

  std::vector<std::vector<int>> layout(const std::vector<int>& piece) {
    if (piece.size() == 1) return {{piece[0]}};
    const int k = separation(piece);

    // The path must run through every branch of separation k, and no vertex
    // has more than two of those. Start where the most chains meet.
    int start = -1;
    std::size_t start_heavy = 0;
    for (int v : piece) {
      std::size_t heavy = 0;
      for (const auto& br : branches(piece, v))
        if (decide_ge(br, k)) ++heavy;
      if (start < 0 || heavy > start_heavy) {
        start = v;
        start_heavy = heavy;
      }
      if (start_heavy == 2) break;
    }

    std::vector<int> path{start};
    bool reversed_first = false;
    for (const auto& br : branches(piece, start)) {
      if (!decide_ge(br, k)) continue;
      std::vector<int> arm = follow(piece, start, br, k);
      if (!reversed_first) {
        std::reverse(arm.begin(), arm.end());
        path.insert(path.begin(), arm.begin(), arm.end());
        reversed_first = true;
      } else {
        path.insert(path.end(), arm.begin(), arm.end());
      }
    }

    std::vector<std::vector<int>> bags;
    for (std::size_t i = 0; i < path.size(); ++i) {
      int p = path[i];
      for (const auto& br : branches(piece, p)) {
        if (i > 0 && contains(br, path[i - 1])) continue;
        if (i + 1 < path.size() && contains(br, path[i + 1])) continue;
        for (auto bag : layout(br)) {
          bag.insert(std::lower_bound(bag.begin(), bag.end(), p), p);
          bags.push_back(std::move(bag));
        }
      }
      bags.push_back({p});
      if (i + 1 < path.size()) {
        std::vector<int> step{p, path[i + 1]};
        std::sort(step.begin(), step.end());
        bags.push_back(std::move(step));
      }
    }
    return bags;
  }

 private:
  static bool contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
  }

  int degree_within(const std::vector<int>& piece, int v) const {
    int d = 0;
    for (int u : adj_[v])
      if (contains(piece, u)) ++d;
    return d;
  }

  // Preorder tour of the whole forest. Subtrees of the tour are contiguous
  // index ranges, which makes containment tests against a piece cheap.
  void build_tour() {
    const int n = static_cast<int>(adj_.size());
    tin_.assign(n, 0);
    tout_.assign(n, 0);
    tour_.reserve(n);
    std::vector<char> seen(n, 0);
    std::vector<std::pair<int, std::size_t>> st;
    for (int r = 0; r < n; ++r) {
      if (seen[r]) continue;
      seen[r] = 1;
      tin_[r] = static_cast<int>(tour_.size());
      tour_.push_back(r);
      st.push_back({r, 0});
      while (!st.empty()) {
        const int v = st.back().first;
        bool pushed = false;
        while (st.back().second < adj_[v].size()) {
          int u = adj_[v][st.back().second++];
          if (seen[u]) continue;
          seen[u] = 1;
          tin_[u] = static_cast<int>(tour_.size());
          tour_.push_back(u);
          st.push_back({u, 0});
          pushed = true;
          break;
        }
        if (!pushed) {
          tout_[v] = static_cast<int>(tour_.size()) - 1;
          st.pop_back();
        }
      }
    }
  }

  std::vector<int> subtree_piece(int w) const {
    std::vector<int> out(tour_.begin() + tin_[w],
                         tour_.begin() + tout_[w] + 1);
    std::sort(out.begin(), out.end());
    return out;
  }

  // A caterpillar's non-leaf vertices induce a path; equivalent to
  // separation 1 for trees with at least one edge.
  bool caterpillar(const std::vector<int>& piece) {
    for (int v : piece) mark_[v] = 1;
    std::map<int, int> deg;
    for (int v : piece) {
      int d = 0;
      for (int u : adj_[v])
        if (mark_[u]) ++d;
      deg[v] = d;
    }
    bool ok = true;
    for (int v : piece) {
      if (deg[v] < 2) continue;
      int spine_neighbours = 0;
      for (int u : adj_[v])
        if (mark_[u] && deg[u] >= 2) ++spine_neighbours;
      if (spine_neighbours > 2) ok = false;
    }
    for (int v : piece) mark_[v] = 0;
    return ok;
  }

  // Extends the path from prev into the heavy branch br, following the
  // unique heavy continuation until the rest is light.
  std::vector<int> follow(const std::vector<int>& piece, int prev,
                          std::vector<int> br, int k) {
    std::vector<int> arm;
    for (;;) {
      int u = -1;
      for (int z : adj_[prev])
        if (contains(br, z)) u = z;
      if (u < 0) throw DomainError("forest pathwidth: broken branch chain");
      arm.push_back(u);
      std::vector<std::vector<int>> next;
      for (auto& c : branches(piece, u))
        if (!contains(c, prev) && decide_ge(c, k))
          next.push_back(std::move(c));
      if (next.empty()) return arm;
      if (next.size() > 1)
        throw DomainError("forest pathwidth: chain splits at level " +
                          std::to_string(k));
      prev = u;
      br = std::move(next.front());
    }
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<char> mark_;
  std::vector<int> tin_, tout_, tour_;
  std::map<std::vector<int>, int> memo_;
};

}  // namespace

ForestPathwidth forest_pathwidth(const std::vector<std::vector<int>>& adj) {
  ForestPathwidth out;
  if (adj.empty()) {
    out.value = -1;
    return out;
  }
  PieceSolver solver(adj);
  for (const auto& comp : solver.components()) {
    out.value = std::max(out.value, solver.separation(comp));
    for (auto& bag : solver.layout(comp))
      out.decomposition.bags.push_back(std::move(bag));
  }
  return out;
}

}  // namespace topo
