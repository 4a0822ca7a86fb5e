#pragma once

#include <vector>

#include "topo/decomposition.hpp"

namespace topo {

struct ForestPathwidth {
  int value = 0;
  PathDecomposition decomposition;
};

// Exact pathwidth of a forest given simple adjacency lists. Runs in
// polynomial time, so it has no node budget. Components are laid out in
// order of their smallest node and the bag lists concatenated.
ForestPathwidth forest_pathwidth(const std::vector<std::vector<int>>& adj);

}  // namespace topo
