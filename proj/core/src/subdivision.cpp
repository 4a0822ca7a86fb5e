#include "topo/subdivision.hpp"

#include <array>
#include <cassert>

#include "topo/errors.hpp"
#include "topo/skeleton.hpp"

namespace topo {

namespace {

// Edges of face f (the three pairs avoiding f), each as its tetrahedron edge
// index, ascending. Slot order within a face is fixed by this enumeration.
std::array<int, 3> face_edge_slots(int f) {
  std::array<int, 3> slots{};
  int k = 0;
  for (int e = 0; e < 6; ++e) {
    auto [a, b] = edge_vertices(e);
    if (a != f && b != f) slots[k++] = e;
  }
  assert(k == 3);
  return slots;
}

struct Flag {
  int face;
  int edge;    // tetrahedron edge index, an edge of `face`
  int vertex;  // endpoint of `edge`
};

Flag flag_of_index(int idx) {
  int face = idx / 6;
  int eslot = (idx % 6) / 2;
  int vslot = idx % 2;
  int edge = face_edge_slots(face)[eslot];
  auto [a, b] = edge_vertices(edge);
  return Flag{face, edge, vslot == 0 ? a : b};
}

int index_of_flag(int face, int edge, int vertex) {
  auto slots = face_edge_slots(face);
  int eslot = -1;
  for (int i = 0; i < 3; ++i)
    if (slots[i] == edge) eslot = i;
  assert(eslot >= 0);
  auto [a, b] = edge_vertices(edge);
  int vslot = (vertex == a) ? 0 : 1;
  assert(vertex == a || vertex == b);
  return face * 6 + eslot * 2 + vslot;
}

}  // namespace

int flag_index(int face, int edge_of_face_slot, int vertex_slot) {
  return face * 6 + edge_of_face_slot * 2 + vertex_slot;
}

Triangulation barycentric_subdivision(const Triangulation& t) {
  const int n = t.n_tetrahedra();
  Triangulation out(24 * n);
  const Perm4 id = Perm4::identity();

  for (int tet = 0; tet < n; ++tet) {
    for (int idx = 0; idx < 24; ++idx) {
      Flag fl = flag_of_index(idx);
      auto [a, b] = edge_vertices(fl.edge);
      int other_v = (fl.vertex == a) ? b : a;
      int self = tet * 24 + idx;

      // Face 0 of the flag tetrahedron (opposite the vertex barycenter) is
      // shared with the flag using the other endpoint of the same edge.
      if (fl.vertex < other_v) {
        int partner = tet * 24 + index_of_flag(fl.face, fl.edge, other_v);
        out.add_gluing({self, 0, partner, 0, id});
      }

      // Face 1 (opposite the edge barycenter): the other edge of `face`
      // through `vertex`.
      {
        int e2 = -1;
        for (int s : face_edge_slots(fl.face)) {
          if (s == fl.edge) continue;
          auto [x, y] = edge_vertices(s);
          if (x == fl.vertex || y == fl.vertex) e2 = s;
        }
        assert(e2 >= 0);
        if (fl.edge < e2) {
          int partner = tet * 24 + index_of_flag(fl.face, e2, fl.vertex);
          out.add_gluing({self, 1, partner, 1, id});
        }
      }

      // Face 2 (opposite the face barycenter): the other face of the
      // tetrahedron containing `edge`.
      {
        int f2 = 6 - a - b - fl.face;
        if (fl.face < f2) {
          int partner = tet * 24 + index_of_flag(f2, fl.edge, fl.vertex);
          out.add_gluing({self, 2, partner, 2, id});
        }
      }
    }
  }

  // Face 3 of a flag (opposite the tetrahedron barycenter) lies inside the
  // original face; original gluings transport flags by their permutation.
  for (const auto& g : t.gluings()) {
    for (int s : face_edge_slots(g.src_face)) {
      auto [a, b] = edge_vertices(s);
      int ds = edge_index(g.perm[a], g.perm[b]);
      for (int v : {a, b}) {
        int self = g.src_tet * 24 + index_of_flag(g.src_face, s, v);
        int partner = g.dst_tet * 24 + index_of_flag(g.dst_face, ds, g.perm[v]);
        out.add_gluing({self, 3, partner, 3, id});
      }
    }
  }

  return out;
}

bool boundary_isolated(const Triangulation& t) {
  SkeletonAnalysis an = analyze_skeleton_detailed(t);
  for (int tet = 0; tet < t.n_tetrahedra(); ++tet)
    if (an.tet_boundary_components(t, tet).size() > 1) return false;
  return true;
}

Triangulation boundary_isolation_subdivision(const Triangulation& t) {
  Triangulation s = barycentric_subdivision(t);
  if (boundary_isolated(s)) return s;
  s = barycentric_subdivision(s);
  if (boundary_isolated(s)) return s;
  throw DomainError(
      "boundary components remain entangled after two subdivisions; "
      "the input is not a manifold triangulation");
}

}  // namespace topo
