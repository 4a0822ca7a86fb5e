#pragma once

#include "topo/triangulation.hpp"

namespace topo {

// First barycentric subdivision. Each tetrahedron splits into 24 flag
// tetrahedra, one per chain (vertex in edge in face); sub-tetrahedron labels
// are 0 = vertex barycenter, 1 = edge barycenter, 2 = face barycenter,
// 3 = tetrahedron barycenter. Preserves the underlying space, hence
// closedness, orientability and boundary topology, and the result never has
// a reversed edge. The cell count V - E + F - n is preserved exactly when
// the input has no reversed edge; a reversed edge folds at its midpoint, a
// point the input's cell structure does not see, so each reversed edge class
// raises the count by one. Subdividing again is then stable.
Triangulation barycentric_subdivision(const Triangulation& t);

// Index of the flag sub-tetrahedron of (face, edge-of-face, vertex-of-edge)
// inside its parent, in [0, 24).
int flag_index(int face, int edge_of_face_slot, int vertex_slot);

// Subdivides until no tetrahedron is incident to more than one boundary
// component (a tetrahedron is incident to the components its vertex classes
// lie on). One subdivision suffices for any triangulation whose vertex links
// are spheres and disks; a second is attempted otherwise, and failure after
// that throws DomainError.
Triangulation boundary_isolation_subdivision(const Triangulation& t);

// True when every tetrahedron is incident to at most one boundary component.
bool boundary_isolated(const Triangulation& t);

}  // namespace topo
