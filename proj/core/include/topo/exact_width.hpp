#pragma once

#include <string>

#include "topo/decomposition.hpp"
#include "topo/multigraph.hpp"

namespace topo {

// Result of a width computation. For pathwidth the decomposition tree is the
// path 0 - 1 - ... - (b-1), so the bag list is already in path order.
struct WidthCertificate {
  std::string parameter;  // "treewidth" or "pathwidth"
  int value = 0;
  bool exact = true;
  TreeDecomposition decomposition;
};

struct ExactOptions {
  // Node budget; larger graphs raise CutoffExceeded before any search.
  int cutoff = 20;
};

// Exact values by iterative deepening over elimination orders (treewidth)
// or vertex layouts (pathwidth), with memoized failure states. Graphs are
// simplified and split into connected components first. Beyond 128 nodes
// only forests are accepted, whatever the cutoff says.
WidthCertificate exact_treewidth(const Multigraph& g,
                                 const ExactOptions& options = {});
WidthCertificate exact_pathwidth(const Multigraph& g,
                                 const ExactOptions& options = {});

std::string to_json_string(const WidthCertificate& c);

}  // namespace topo
