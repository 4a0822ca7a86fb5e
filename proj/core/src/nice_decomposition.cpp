#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <vector>

#include "topo/decomposition.hpp"
#include "topo/errors.hpp"

namespace topo {

namespace {

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<int> set_and(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Coherence and tree shape are checkable without the graph; coverage and arc
// coverage are not, so callers validate those separately.
void check_convertible(const TreeDecomposition& d) {
  const int b = static_cast<int>(d.bags.size());
  if (d.tree.n_nodes() != b)
    throw DomainError("to_nice: tree size does not match the bag count");
  for (const auto& bag : d.bags)
    if (!std::is_sorted(bag.begin(), bag.end()) ||
        std::adjacent_find(bag.begin(), bag.end()) != bag.end())
      throw DomainError("to_nice: bags must be sorted sets");
  if (b == 0) return;
  if (d.tree.has_loops() || d.tree.n_arcs() != b - 1 || !d.tree.is_connected())
    throw DomainError("to_nice: bag graph is not a tree");

  auto adj = d.tree.simple_adjacency();
  std::set<int> universe;
  for (const auto& bag : d.bags) universe.insert(bag.begin(), bag.end());
  for (int v : universe) {
    int start = -1, holding = 0;
    for (int i = 0; i < b; ++i)
      if (std::binary_search(d.bags[i].begin(), d.bags[i].end(), v)) {
        if (start < 0) start = i;
        ++holding;
      }
    std::vector<char> vis(b, 0);
    std::deque<int> q{start};
    vis[start] = 1;
    int reached = 1;
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (int j : adj[i])
        if (!vis[j] &&
            std::binary_search(d.bags[j].begin(), d.bags[j].end(), v)) {
          vis[j] = 1;
          ++reached;
          q.push_back(j);
        }
    }
    if (reached != holding)
      throw DomainError("to_nice: bags containing node " + std::to_string(v) +
                        " are not connected in the tree");
  }
}

struct SmoothTree {
  std::vector<std::vector<int>> bags;  // all of size width + 1
  std::vector<std::set<int>> nbr;
  int rep = 0;  // image of input bag 0
};

// Pads and contracts until every bag has exactly target nodes, then merges
// equal neighbours and subdivides the remaining arcs into single swaps.
SmoothTree smooth(const TreeDecomposition& d, int target) {
  const int b = static_cast<int>(d.bags.size());
  std::vector<std::vector<int>> bag = d.bags;
  std::vector<std::set<int>> nbr(b);
  for (const auto& [u, v] : d.tree.arcs()) {
    nbr[u].insert(v);
    nbr[v].insert(u);
  }
  std::vector<char> alive(b, 1);
  int rep = 0;

  auto contract = [&](int dead, int into) {
    alive[dead] = 0;
    nbr[into].erase(dead);
    for (int x : nbr[dead])
      if (x != into) {
        nbr[x].erase(dead);
        nbr[x].insert(into);
        nbr[into].insert(x);
      }
    nbr[dead].clear();
    if (rep == dead) rep = into;
  };

  // Grow undersized bags one element at a time, absorbing neighbours that
  // have nothing left to offer.
  std::deque<int> work;
  for (int i = 0; i < b; ++i) work.push_back(i);
  while (!work.empty()) {
    int i = work.front();
    work.pop_front();
    if (!alive[i] || static_cast<int>(bag[i].size()) >= target) continue;
    if (nbr[i].empty()) continue;
    int donor = -1;
    for (int j : nbr[i])
      if (!subset_of(bag[j], bag[i])) {
        donor = j;
        break;
      }
    if (donor >= 0) {
      int extra = set_minus(bag[donor], bag[i]).front();
      bag[i].insert(std::lower_bound(bag[i].begin(), bag[i].end(), extra),
                    extra);
    } else {
      std::vector<int> absorbed(nbr[i].begin(), nbr[i].end());
      for (int j : absorbed) contract(j, i);
    }
    work.push_back(i);
  }

  // All bags are full now; subset-adjacency means equality.
  for (int i = 0; i < b; ++i) {
    if (!alive[i]) continue;
    bool again = true;
    while (again) {
      again = false;
      for (int j : nbr[i])
        if (bag[j] == bag[i]) {
          contract(j, i);
          again = true;
          break;
        }
    }
  }

  SmoothTree out;
  std::vector<int> id(b, -1);
  for (int i = 0; i < b; ++i)
    if (alive[i]) {
      id[i] = static_cast<int>(out.bags.size());
      out.bags.push_back(std::move(bag[i]));
    }
  out.nbr.resize(out.bags.size());
  out.rep = id[rep];
  for (int i = 0; i < b; ++i)
    if (alive[i])
      for (int j : nbr[i])
        if (i < j) {
          // Insert one intermediate bag per extra swap along the arc.
          std::vector<int> drop = set_minus(out.bags[id[i]], out.bags[id[j]]);
          std::vector<int> gain = set_minus(out.bags[id[j]], out.bags[id[i]]);
          int prev = id[i];
          std::vector<int> cur = out.bags[id[i]];
          for (std::size_t t = 0; t + 1 < drop.size(); ++t) {
            cur.erase(std::find(cur.begin(), cur.end(), drop[t]));
            cur.insert(std::lower_bound(cur.begin(), cur.end(), gain[t]),
                       gain[t]);
            int mid = static_cast<int>(out.bags.size());
            out.bags.push_back(cur);
            out.nbr.emplace_back();
            out.nbr[prev].insert(mid);
            out.nbr[mid].insert(prev);
            prev = mid;
          }
          out.nbr[prev].insert(id[j]);
          out.nbr[id[j]].insert(prev);
        }
  return out;
}

}  // namespace

NiceTreeDecomposition to_nice(const TreeDecomposition& d) {
  check_convertible(d);

  std::set<int> universe;
  for (const auto& bag : d.bags) universe.insert(bag.begin(), bag.end());
  const int u = static_cast<int>(universe.size());
  const int w = d.width();

  NiceTreeDecomposition out;
  if (u == 0) {
    out.bags = {{}};
    out.parent = {-1};
    out.kinds = {BagKind::Leaf};
    out.root = 0;
    return out;
  }

  SmoothTree st = smooth(d, w + 1);
  if (static_cast<int>(st.bags.size()) != u - w)
    throw DomainError("to_nice: smoothing reached " +
                      std::to_string(st.bags.size()) + " bags, expected " +
                      std::to_string(u - w));

  // Binarize from the smooth tree. Unary links get one intermediate bag so
  // consecutive bags add or remove a single node; junctions become chains of
  // join bags with a short leg per child.
  auto new_bag = [&](std::vector<int> content, int parent) {
    out.bags.push_back(std::move(content));
    out.parent.push_back(parent);
    return static_cast<int>(out.bags.size()) - 1;
  };

  struct Item {
    int node;        // smooth tree index
    int from;        // smooth tree parent, -1 at the root
    int attach;      // output bag to hang this subtree under
  };
  std::vector<Item> stack{{st.rep, -1, -1}};
  while (!stack.empty()) {
    auto [node, from, attach] = stack.back();
    stack.pop_back();
    int self = new_bag(st.bags[node], attach);

    std::vector<int> kids;
    for (int j : st.nbr[node])
      if (j != from) kids.push_back(j);

    auto leg_to = [&](int child, int top) {
      // top holds this bag's content; swap down to the child's content.
      int mid = new_bag(set_and(st.bags[node], st.bags[child]), top);
      stack.push_back({child, node, mid});
    };

    if (kids.size() == 1) {
      leg_to(kids[0], self);
    } else if (kids.size() >= 2) {
      int chain = self;  // join bag for the current pair of subtrees
      for (std::size_t t = 0; t + 1 < kids.size(); ++t) {
        leg_to(kids[t], new_bag(st.bags[node], chain));
        if (t + 2 < kids.size())
          chain = new_bag(st.bags[node], chain);
        else
          leg_to(kids[t + 1], new_bag(st.bags[node], chain));
      }
    }
  }

  // Kinds follow from the children: none is a leaf, two is a join, one is an
  // introduce or forget depending on the direction of the swap.
  const int nb = out.n_bags();
  std::vector<std::vector<int>> children(nb);
  for (int i = 0; i < nb; ++i)
    if (out.parent[i] >= 0) children[out.parent[i]].push_back(i);
  out.kinds.assign(nb, BagKind::Leaf);
  for (int i = 0; i < nb; ++i) {
    if (children[i].empty())
      out.kinds[i] = BagKind::Leaf;
    else if (children[i].size() == 2)
      out.kinds[i] = BagKind::Join;
    else if (children[i].size() == 1)
      out.kinds[i] = out.bags[i].size() > out.bags[children[i][0]].size()
                         ? BagKind::Introduce
                         : BagKind::Forget;
    else
      throw DomainError("to_nice: bag with more than two children");
  }
  out.root = 0;

  if (nb >= 4 * u)
    throw DomainError("to_nice: produced " + std::to_string(nb) +
                      " bags for " + std::to_string(u) + " nodes");
  return out;
}

NiceTreeDecomposition to_nice(const PathDecomposition& d) {
  return to_nice(d.as_tree());
}

}  // namespace topo
