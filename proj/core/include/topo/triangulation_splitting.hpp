#pragma once

#include <vector>

#include "topo/fork_complex.hpp"
#include "topo/multigraph.hpp"
#include "topo/triangulation.hpp"

namespace topo {

// Which boundary components of a triangulation form the lower and the upper
// boundary of the splitting, by component id.  Together the two lists must
// name every component exactly once.
struct BoundaryPartition {
  std::vector<int> lower;
  std::vector<int> upper;
};

// A Heegaard splitting read off a triangulation.  The fork complex has two
// forks: fork 0 carries the lower boundary components as tines, fork 1 the
// upper ones, and the grips are paired at the splitting genus.  The two
// graphs are the spines of the handlebody sides after contracting each
// boundary surface to a point; their Betti numbers enter the genus.
struct TriangulationSplitting {
  ForkComplex complex;
  int genus = 0;
  Multigraph lower_spine;
  Multigraph upper_spine;
};

// Splitting of a closed triangulation along a thickened 1-skeleton: one
// handlebody is a neighborhood of the vertices and edges, the other of the
// dual graph.  Both genus computations (n + 1 from the dual side, E - V + 1
// from the skeleton side) must agree.  Requires a closed triangulation with
// connected dual graph.
TriangulationSplitting splitting_from_closed_triangulation(
    const Triangulation& t);

// General version for triangulations with boundary.  Requires every
// tetrahedron to touch at most one boundary component; run
// boundary_isolation_subdivision first when that fails.
TriangulationSplitting splitting_from_boundary_triangulation(
    const Triangulation& t, const BoundaryPartition& partition);

}  // namespace topo
