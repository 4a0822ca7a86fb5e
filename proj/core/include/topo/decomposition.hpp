#pragma once

#include <string>
#include <vector>

#include "topo/multigraph.hpp"
#include "topo/validation.hpp"

namespace topo {

// Tree decomposition: one bag of graph nodes per tree node. Bags are kept
// sorted. Valid when (1) bags cover every graph node, (2) both endpoints of
// every arc share a bag, and (3) the bags containing any fixed node induce a
// connected subtree.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  Multigraph tree;

  int width() const;  // max bag size - 1
};

// Path decomposition: bags in path order; the implied tree is the path
// 0 - 1 - ... - (b-1).
struct PathDecomposition {
  std::vector<std::vector<int>> bags;

  int width() const;
  TreeDecomposition as_tree() const;
};

// Checks the three decomposition properties plus tree shape; loops and
// parallel arcs of g impose nothing beyond node coverage. Violations name
// the property and a witness.
ValidationResult validate_decomposition(const Multigraph& g,
                                        const TreeDecomposition& d);
ValidationResult validate_decomposition(const Multigraph& g,
                                        const PathDecomposition& d);

// ===== Nice tree decompositions =====

enum class BagKind { Leaf, Introduce, Forget, Join };

std::string bag_kind_name(BagKind k);  // lowercase

// Rooted binary-ish form: a leaf bag has no children; an introduce or forget
// bag has one child and differs from it by exactly one node added or
// removed; a join bag has two children whose contents equal its own.
struct NiceTreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<int> parent;  // -1 at the root
  std::vector<BagKind> kinds;
  int root = 0;

  int n_bags() const { return static_cast<int>(bags.size()); }
  int width() const;
};

int count_join_bags(const NiceTreeDecomposition& n);

// Converts via smoothing: pads and contracts until every bag has width+1
// nodes and adjacent bags differ by a single swap (exactly u - width bags
// for u covered nodes), then binarizes with join legs. The result has fewer
// than 4u bags and preserves width; path-shaped inputs produce no join bags.
NiceTreeDecomposition to_nice(const TreeDecomposition& d);
NiceTreeDecomposition to_nice(const PathDecomposition& d);

// Structural check of the nice invariants plus the underlying decomposition
// properties against g.
ValidationResult validate_nice(const Multigraph& g,
                               const NiceTreeDecomposition& n);

// ===== Export =====

std::string to_dot(const TreeDecomposition& d);
std::string to_json_string(const NiceTreeDecomposition& n);

}  // namespace topo
