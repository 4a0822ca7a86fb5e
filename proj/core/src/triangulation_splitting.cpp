#include "topo/triangulation_splitting.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "topo/errors.hpp"
#include "topo/skeleton.hpp"

namespace topo {

namespace {

// side[] entries for boundary components.
constexpr int kLower = 0;
constexpr int kUpper = 1;

std::vector<int> partition_sides(const BoundaryPartition& partition,
                                 int n_components) {
  std::vector<int> side(n_components, -1);
  auto assign = [&](const std::vector<int>& ids, int value) {
    for (int c : ids) {
      if (c < 0 || c >= n_components)
        throw DomainError("boundary partition names component " +
                          std::to_string(c) + " but the triangulation has " +
                          std::to_string(n_components));
      if (side[c] != -1)
        throw DomainError("boundary component " + std::to_string(c) +
                          " listed twice in the partition");
      side[c] = value;
    }
  };
  assign(partition.lower, kLower);
  assign(partition.upper, kUpper);
  for (int c = 0; c < n_components; ++c)
    if (side[c] == -1)
      throw DomainError("boundary component " + std::to_string(c) +
                        " missing from the partition");
  return side;
}

bool touches(const std::vector<int>& components, const std::vector<int>& side,
             int value) {
  return std::any_of(components.begin(), components.end(),
                     [&](int c) { return side[c] == value; });
}

}  // namespace

TriangulationSplitting splitting_from_boundary_triangulation(
    const Triangulation& t, const BoundaryPartition& partition) {
  const int n = t.n_tetrahedra();
  SkeletonAnalysis sk = analyze_skeleton_detailed(t);
  const int n_components =
      static_cast<int>(sk.report.boundary_components.size());
  std::vector<int> side = partition_sides(partition, n_components);

  for (int tet = 0; tet < n; ++tet)
    if (sk.tet_boundary_components(t, tet).size() > 1)
      throw DomainError(
          "tetrahedron " + std::to_string(tet) +
          " touches more than one boundary component; apply "
          "boundary_isolation_subdivision first");

  auto vertex_on = [&](int vc, int value) {
    return touches(sk.vertex_class_boundary[vc], side, value);
  };

  // Lower spine: contract each lower surface to a point, keep interior
  // vertices, and keep every edge class that lies in no boundary face and
  // avoids the upper boundary.  Edge barycenters become nodes so that the
  // two halves of an edge can land on different surfaces.
  Multigraph lower;
  std::vector<int> lower_comp_node(n_components, -1);
  for (int c = 0; c < n_components; ++c)
    if (side[c] == kLower) lower_comp_node[c] = lower.add_node();

  std::vector<int> lower_vertex_node(sk.report.vertex_classes, -1);
  for (int vc = 0; vc < sk.report.vertex_classes; ++vc) {
    if (vertex_on(vc, kUpper)) continue;
    if (vertex_on(vc, kLower))
      lower_vertex_node[vc] = lower_comp_node[sk.vertex_class_boundary[vc][0]];
    else
      lower_vertex_node[vc] = lower.add_node();
  }

  for (int e = 0; e < sk.report.edge_classes; ++e) {
    if (!sk.edge_class_boundary[e].empty()) continue;
    int va = sk.edge_endpoints[e][0];
    int vb = sk.edge_endpoints[e][1];
    if (lower_vertex_node[va] < 0 || lower_vertex_node[vb] < 0) continue;
    int mid = lower.add_node();
    lower.add_arc(mid, lower_vertex_node[va]);
    lower.add_arc(mid, lower_vertex_node[vb]);
  }

  // Upper spine: contract each upper surface with its incident tetrahedra to
  // a point, keep the remaining tetrahedra as nodes, and keep every glued
  // face class whose corners avoid the upper boundary.
  Multigraph upper;
  std::vector<int> upper_comp_node(n_components, -1);
  for (int c = 0; c < n_components; ++c)
    if (side[c] == kUpper) upper_comp_node[c] = upper.add_node();

  std::vector<int> upper_tet_node(n, -1);
  for (int tet = 0; tet < n; ++tet) {
    std::vector<int> comps = sk.tet_boundary_components(t, tet);
    if (touches(comps, side, kUpper))
      upper_tet_node[tet] = upper_comp_node[comps[0]];
    else
      upper_tet_node[tet] = upper.add_node();
  }

  std::vector<int> face_node(sk.report.triangle_classes, -2);
  for (int tet = 0; tet < n; ++tet)
    for (int f = 0; f < 4; ++f) {
      int fc = sk.triangle_class[tet * 4 + f];
      if (sk.boundary_component_of_face[tet * 4 + f] >= 0) {
        face_node[fc] = -1;
        continue;
      }
      for (int v = 0; v < 4; ++v)
        if (v != f && vertex_on(sk.vertex_class[tet * 4 + v], kUpper))
          face_node[fc] = -1;
    }
  for (int fc = 0; fc < sk.report.triangle_classes; ++fc)
    if (face_node[fc] == -2) face_node[fc] = upper.add_node();
  for (int tet = 0; tet < n; ++tet)
    for (int f = 0; f < 4; ++f) {
      if (sk.boundary_component_of_face[tet * 4 + f] >= 0) continue;
      int fc = sk.triangle_class[tet * 4 + f];
      if (face_node[fc] >= 0) upper.add_arc(face_node[fc], upper_tet_node[tet]);
    }

  int genus_lower = lower.first_betti_number();
  int genus_upper = upper.first_betti_number();
  std::vector<int> lower_tines, upper_tines;
  for (int c = 0; c < n_components; ++c) {
    int g = sk.report.boundary_components[c].genus;
    if (side[c] == kLower) {
      genus_lower += g;
      lower_tines.push_back(g);
    } else {
      genus_upper += g;
      upper_tines.push_back(g);
    }
  }
  if (genus_lower != genus_upper)
    throw DomainError("splitting genus mismatch: lower side gives " +
                      std::to_string(genus_lower) + ", upper side gives " +
                      std::to_string(genus_upper));

  TriangulationSplitting out;
  out.genus = genus_lower;
  out.lower_spine = std::move(lower);
  out.upper_spine = std::move(upper);

  Fork fork_lower;
  fork_lower.id = 0;
  fork_lower.grip_genus = out.genus;
  fork_lower.n_tines = static_cast<int>(lower_tines.size());
  fork_lower.tine_genera = lower_tines;
  Fork fork_upper;
  fork_upper.id = 1;
  fork_upper.grip_genus = out.genus;
  fork_upper.n_tines = static_cast<int>(upper_tines.size());
  fork_upper.tine_genera = upper_tines;
  out.complex.forks = {fork_lower, fork_upper};
  out.complex.grip_pairings = {{0, 1}};

  ValidationResult res = validate_fork_complex(out.complex);
  if (!res.valid)
    throw DomainError("extracted splitting fails validation: " +
                      res.violations.front());
  return out;
}

TriangulationSplitting splitting_from_closed_triangulation(
    const Triangulation& t) {
  if (t.n_tetrahedra() == 0)
    throw DomainError("cannot split an empty triangulation");
  ClosedCheck check = is_closed_3_manifold(t);
  if (!check.closed)
    throw DomainError(
        "splitting_from_closed_triangulation requires a closed triangulation");
  if (!dual_graph(t).is_connected())
    throw DomainError(
        "splitting_from_closed_triangulation requires a connected dual graph");

  TriangulationSplitting out = splitting_from_boundary_triangulation(t, {});
  int from_dual = t.n_tetrahedra() + 1;
  int from_skeleton =
      check.report.edge_classes - check.report.vertex_classes + 1;
  if (out.genus != from_dual || out.genus != from_skeleton)
    throw DomainError(
        "genus accounting mismatch on a closed triangulation: spine gives " +
        std::to_string(out.genus) + ", dual count gives " +
        std::to_string(from_dual) + ", skeleton count gives " +
        std::to_string(from_skeleton));
  return out;
}

}  // namespace topo
