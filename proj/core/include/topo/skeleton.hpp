#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "topo/multigraph.hpp"
#include "topo/triangulation.hpp"

namespace topo {

// Classification of the link surface of a vertex class by Euler
// characteristic and closedness: (chi 2, closed) is a sphere, (chi 1, with
// boundary) is a disk, anything else is lumped into Other.
enum class LinkType { Sphere, Disk, Other };

std::string link_type_name(LinkType t);

struct BoundaryComponent {
  int component = 0;  // id, by smallest member face
  int genus = 0;      // orientable genus, or crosscap number if non-orientable
  int triangles = 0;

  bool operator==(const BoundaryComponent&) const = default;
};

// Summary of the quotient cell structure of a triangulation. Counts are
// numbers of identification classes of the corresponding simplices;
// euler_characteristic is V - E + F - n.
struct SkeletonReport {
  int vertex_classes = 0;
  int edge_classes = 0;
  int triangle_classes = 0;
  int euler_characteristic = 0;
  std::vector<LinkType> vertex_link_types;  // indexed by vertex class id
  bool has_reversed_edge = false;
  bool orientable = true;
  std::vector<BoundaryComponent> boundary_components;

  bool all_links_are_spheres() const;
};

// Full analysis with the class maps downstream constructions need.
// Corner (tet, v) has index tet*4 + v; edge {a,b} of a tetrahedron has index
// tet*6 + edge_index(a, b); the directed edge a->b has index
// tet*12 + directed_edge_index(a, b); face (tet, f) has index tet*4 + f.
struct SkeletonAnalysis {
  SkeletonReport report;

  std::vector<int> vertex_class;         // size 4n, values in [0, V)
  std::vector<int> edge_class;           // size 6n, values in [0, E)
  std::vector<int> triangle_class;       // size 4n, values in [0, F)
  std::vector<int> directed_edge_class;  // size 12n

  // Directed edge classes are the ends of edge classes; each end lies on a
  // well defined vertex class.
  std::vector<int> directed_class_vertex_class;  // per directed class

  // Per edge class, the directed classes of its two ends (equal exactly for
  // a reversed edge) and the vertex classes they land on.
  std::vector<std::array<int, 2>> edge_ends;
  std::vector<std::array<int, 2>> edge_endpoints;

  std::vector<int> boundary_component_of_face;  // size 4n, -1 when glued

  // Sorted lists of boundary components a class is incident to. A vertex
  // class is incident to the components of the unglued faces its corners lie
  // in; an edge class to those of the unglued faces containing it.
  std::vector<std::vector<int>> vertex_class_boundary;  // per vertex class
  std::vector<std::vector<int>> edge_class_boundary;    // per edge class

  // Union of the vertex list over the tetrahedron's four corners.
  std::vector<int> tet_boundary_components(const Triangulation& t,
                                           int tet) const;
};

int edge_index(int a, int b);                  // 0..5 for the pair {a,b}
std::pair<int, int> edge_vertices(int index);  // inverse, a < b
int directed_edge_index(int a, int b);         // 0..11 for a != b

SkeletonAnalysis analyze_skeleton_detailed(const Triangulation& t);
SkeletonReport analyze_skeleton(const Triangulation& t);

std::string to_json_string(const SkeletonReport& r);

struct ClosedCheck {
  bool closed = false;
  SkeletonReport report;
};

// Closed 3-manifold: every face glued, every vertex link a sphere, and no
// edge identified with itself in reverse.
ClosedCheck is_closed_3_manifold(const Triangulation& t);

// One node per tetrahedron, one arc per gluing. Loops and parallel arcs
// arise naturally; 4-regular exactly when the triangulation is fully glued.
Multigraph dual_graph(const Triangulation& t);

}  // namespace topo
