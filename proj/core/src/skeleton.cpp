#include "topo/skeleton.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <set>

#include "topo/errors.hpp"

namespace topo {

namespace {

constexpr std::array<std::array<int, 2>, 6> kEdgeVerts = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }

  // Maps roots to consecutive ids in order of first appearance.
  std::vector<int> compress(int* n_classes) {
    std::vector<int> id(parent.size(), -1);
    int next = 0;
    for (size_t i = 0; i < parent.size(); ++i) {
      int r = find(static_cast<int>(i));
      if (id[r] < 0) id[r] = next++;
      id[i] = id[r];
    }
    *n_classes = next;
    return id;
  }
};

}  // namespace

int edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int i = 0; i < 6; ++i)
    if (kEdgeVerts[i][0] == a && kEdgeVerts[i][1] == b) return i;
  assert(false && "bad edge");
  return -1;
}

std::pair<int, int> edge_vertices(int index) {
  return {kEdgeVerts[index][0], kEdgeVerts[index][1]};
}

int directed_edge_index(int a, int b) {
  assert(a != b && a >= 0 && a < 4 && b >= 0 && b < 4);
  return a * 3 + (b > a ? b - 1 : b);
}

std::string link_type_name(LinkType t) {
  switch (t) {
    case LinkType::Sphere: return "sphere";
    case LinkType::Disk: return "disk";
    case LinkType::Other: return "other";
  }
  return "other";
}

bool SkeletonReport::all_links_are_spheres() const {
  return std::all_of(vertex_link_types.begin(), vertex_link_types.end(),
                     [](LinkType t) { return t == LinkType::Sphere; });
}

namespace {

// Walks around an edge of a boundary triangle, pivoting through glued faces
// until the next boundary face. Returns the partner side together with the
// accumulated vertex correspondence from the start tetrahedron.
struct BoundarySide {
  int tet;
  int face;
  int a, b;     // edge endpoints in the partner tetrahedron's labels
  Perm4 to_partner;  // start-tet labels -> partner-tet labels
};

BoundarySide walk_to_partner(const Triangulation& t, int tet, int face, int a,
                             int b) {
  int cur_tet = tet;
  int cur_a = a, cur_b = b;
  int pivot = 6 - a - b - face;
  Perm4 rho = Perm4::identity();
  int guard = 24 * t.n_tetrahedra() + 8;
  while (guard-- > 0) {
    auto side = t.glued_to(cur_tet, pivot);
    if (!side) return BoundarySide{cur_tet, pivot, cur_a, cur_b, rho};
    rho = rho.then(side->perm);
    int na = side->perm[cur_a], nb = side->perm[cur_b];
    int arrived = side->other_face;
    cur_tet = side->other_tet;
    cur_a = na;
    cur_b = nb;
    pivot = 6 - na - nb - arrived;
  }
  throw DomainError("edge fan does not terminate; corrupt gluing structure");
}

// +1 when (a,b) appears forward in the ascending cyclic order of the face's
// three vertices, -1 otherwise.
int side_direction(int face, int a, int b) {
  std::array<int, 3> vs{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != face) vs[k++] = v;
  for (int i = 0; i < 3; ++i)
    if (vs[i] == a && vs[(i + 1) % 3] == b) return 1;
  return -1;
}

}  // namespace

SkeletonAnalysis analyze_skeleton_detailed(const Triangulation& t) {
  const int n = t.n_tetrahedra();
  SkeletonAnalysis an;

  UnionFind vtx_uf(4 * n), edge_uf(6 * n), dir_uf(12 * n), face_uf(4 * n);

  for (const auto& g : t.gluings()) {
    face_uf.unite(g.src_tet * 4 + g.src_face, g.dst_tet * 4 + g.dst_face);
    for (int v = 0; v < 4; ++v) {
      if (v == g.src_face) continue;
      vtx_uf.unite(g.src_tet * 4 + v, g.dst_tet * 4 + g.perm[v]);
    }
    for (int a = 0; a < 4; ++a) {
      if (a == g.src_face) continue;
      for (int b = a + 1; b < 4; ++b) {
        if (b == g.src_face) continue;
        edge_uf.unite(g.src_tet * 6 + edge_index(a, b),
                      g.dst_tet * 6 + edge_index(g.perm[a], g.perm[b]));
        dir_uf.unite(g.src_tet * 12 + directed_edge_index(a, b),
                     g.dst_tet * 12 + directed_edge_index(g.perm[a], g.perm[b]));
        dir_uf.unite(g.src_tet * 12 + directed_edge_index(b, a),
                     g.dst_tet * 12 + directed_edge_index(g.perm[b], g.perm[a]));
      }
    }
  }

  int V = 0, E = 0, F = 0, D = 0;
  an.vertex_class = vtx_uf.compress(&V);
  an.edge_class = edge_uf.compress(&E);
  an.triangle_class = face_uf.compress(&F);
  an.directed_edge_class = dir_uf.compress(&D);

  an.report.vertex_classes = V;
  an.report.edge_classes = E;
  an.report.triangle_classes = F;
  an.report.euler_characteristic = V - E + F - n;

  // --- edge ends and reversed edges ---
  an.directed_class_vertex_class.assign(D, -1);
  for (int tet = 0; tet < n; ++tet)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        if (a == b) continue;
        int dc = an.directed_edge_class[tet * 12 + directed_edge_index(a, b)];
        an.directed_class_vertex_class[dc] = an.vertex_class[tet * 4 + a];
      }

  an.edge_ends.assign(E, {-1, -1});
  an.edge_endpoints.assign(E, {-1, -1});
  an.report.has_reversed_edge = false;
  for (int tet = 0; tet < n; ++tet)
    for (int e = 0; e < 6; ++e) {
      int ec = an.edge_class[tet * 6 + e];
      auto [a, b] = edge_vertices(e);
      int fwd = an.directed_edge_class[tet * 12 + directed_edge_index(a, b)];
      int rev = an.directed_edge_class[tet * 12 + directed_edge_index(b, a)];
      if (fwd == rev) an.report.has_reversed_edge = true;
      if (an.edge_ends[ec][0] < 0) {
        an.edge_ends[ec] = {fwd, rev};
        an.edge_endpoints[ec] = {an.vertex_class[tet * 4 + a],
                                 an.vertex_class[tet * 4 + b]};
      }
    }

  // --- vertex links ---
  // The link of a vertex class is a surface: one triangle per corner in the
  // class, sides glued by the face gluings, corners given by directed edge
  // classes. With T triangles and B unglued sides, 2*chi = 2*corners - T - B.
  {
    std::vector<int> link_triangles(V, 0), link_boundary_sides(V, 0);
    std::vector<std::set<int>> link_corners(V);
    for (int tet = 0; tet < n; ++tet)
      for (int v = 0; v < 4; ++v) {
        int vc = an.vertex_class[tet * 4 + v];
        ++link_triangles[vc];
        for (int f = 0; f < 4; ++f) {
          if (f == v) continue;
          if (!t.glued_to(tet, f)) ++link_boundary_sides[vc];
        }
        for (int a = 0; a < 4; ++a) {
          if (a == v) continue;
          link_corners[vc].insert(
              an.directed_edge_class[tet * 12 + directed_edge_index(v, a)]);
        }
      }
    an.report.vertex_link_types.resize(V);
    for (int vc = 0; vc < V; ++vc) {
      int T = link_triangles[vc];
      int B = link_boundary_sides[vc];
      int corners = static_cast<int>(link_corners[vc].size());
      int chi2 = 2 * corners - T - B;  // twice the Euler characteristic
      LinkType type = LinkType::Other;
      if (B == 0 && chi2 == 4)
        type = LinkType::Sphere;
      else if (B > 0 && chi2 == 2)
        type = LinkType::Disk;
      an.report.vertex_link_types[vc] = type;
    }
  }

  // --- orientability ---
  // Assign each tetrahedron a sign; a gluing with permutation sigma forces
  // o(dst) = -o(src) * sign(sigma). A contradiction means non-orientable.
  {
    std::vector<int> orient(n, 0);
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (other, rel sign)
    bool ok = true;
    for (const auto& g : t.gluings()) {
      int rel = -g.perm.sign();
      if (g.src_tet == g.dst_tet) {
        if (rel != 1) ok = false;
        continue;
      }
      adj[g.src_tet].push_back({g.dst_tet, rel});
      adj[g.dst_tet].push_back({g.src_tet, rel});
    }
    for (int start = 0; start < n && ok; ++start) {
      if (orient[start] != 0) continue;
      orient[start] = 1;
      std::vector<int> stack{start};
      while (!stack.empty() && ok) {
        int u = stack.back();
        stack.pop_back();
        for (auto [w, rel] : adj[u]) {
          int expect = orient[u] * rel;
          if (orient[w] == 0) {
            orient[w] = expect;
            stack.push_back(w);
          } else if (orient[w] != expect) {
            ok = false;
            break;
          }
        }
      }
    }
    an.report.orientable = ok;
  }

  // --- boundary surface ---
  an.boundary_component_of_face.assign(4 * n, -1);
  std::vector<int> bfaces;  // face ids of unglued faces
  for (int tet = 0; tet < n; ++tet)
    for (int f = 0; f < 4; ++f)
      if (!t.glued_to(tet, f)) bfaces.push_back(tet * 4 + f);

  if (!bfaces.empty()) {
    std::map<int, int> bindex;  // face id -> position in bfaces
    for (size_t i = 0; i < bfaces.size(); ++i) bindex[bfaces[i]] = static_cast<int>(i);

    const int nb = static_cast<int>(bfaces.size());
    UnionFind comp_uf(nb), corner_uf(3 * nb);

    // corner slot of vertex v in face (tet, f): position among the three
    // face vertices in ascending order
    auto corner_slot = [](int face, int v) {
      int slot = 0;
      for (int w = 0; w < 4; ++w) {
        if (w == face) continue;
        if (w == v) return slot;
        ++slot;
      }
      assert(false);
      return -1;
    };

    int self_paired = 0;
    for (int bi = 0; bi < nb; ++bi) {
      int tet = bfaces[bi] / 4, face = bfaces[bi] % 4;
      for (int e = 0; e < 6; ++e) {
        auto [a, b] = edge_vertices(e);
        if (a == face || b == face) continue;
        BoundarySide p = walk_to_partner(t, tet, face, a, b);
        int pid = p.tet * 4 + p.face;
        auto it = bindex.find(pid);
        assert(it != bindex.end() && "partner side must be a boundary face");
        int pj = it->second;
        comp_uf.unite(bi, pj);
        corner_uf.unite(bi * 3 + corner_slot(face, a),
                        pj * 3 + corner_slot(p.face, p.to_partner[a]));
        corner_uf.unite(bi * 3 + corner_slot(face, b),
                        pj * 3 + corner_slot(p.face, p.to_partner[b]));
        if (pj == bi && p.face == face && ((p.a == a && p.b == b) || (p.a == b && p.b == a)))
          ++self_paired;
      }
    }
    // Each side was processed from both ends, so self pairings are counted
    // once per traversal direction.
    self_paired /= 2;

    int n_comps = 0;
    std::vector<int> comp_of = comp_uf.compress(&n_comps);
    for (int bi = 0; bi < nb; ++bi)
      an.boundary_component_of_face[bfaces[bi]] = comp_of[bi];

    // per-component counts
    std::vector<int> faces_in(n_comps, 0), selfp_in(n_comps, 0);
    for (int bi = 0; bi < nb; ++bi) ++faces_in[comp_of[bi]];
    // Self-paired sides are rare; recount them per component.
    if (self_paired > 0) {
      for (int bi = 0; bi < nb; ++bi) {
        int tet = bfaces[bi] / 4, face = bfaces[bi] % 4;
        for (int e = 0; e < 6; ++e) {
          auto [a, b] = edge_vertices(e);
          if (a == face || b == face) continue;
          BoundarySide p = walk_to_partner(t, tet, face, a, b);
          if (p.tet == tet && p.face == face &&
              ((p.a == a && p.b == b) || (p.a == b && p.b == a)))
            ++selfp_in[comp_of[bi]];
        }
      }
      for (auto& s : selfp_in) s /= 2;
    }

    std::vector<std::set<int>> corners_in(n_comps);
    for (int bi = 0; bi < nb; ++bi)
      for (int s = 0; s < 3; ++s)
        corners_in[comp_of[bi]].insert(corner_uf.find(bi * 3 + s));

    // orientation propagation over boundary triangles
    std::vector<int> face_orient(nb, 0);
    std::vector<bool> comp_orientable(n_comps, true);
    for (int start = 0; start < nb; ++start) {
      if (face_orient[start] != 0) continue;
      face_orient[start] = 1;
      std::vector<int> stack{start};
      while (!stack.empty()) {
        int bi = stack.back();
        stack.pop_back();
        int tet = bfaces[bi] / 4, face = bfaces[bi] % 4;
        for (int e = 0; e < 6; ++e) {
          auto [a, b] = edge_vertices(e);
          if (a == face || b == face) continue;
          BoundarySide p = walk_to_partner(t, tet, face, a, b);
          int pj = bindex.at(p.tet * 4 + p.face);
          int d1 = side_direction(face, a, b);
          int d2 = side_direction(p.face, p.to_partner[a], p.to_partner[b]);
          int expect = -face_orient[bi] * d1 * d2;
          if (face_orient[pj] == 0) {
            face_orient[pj] = expect;
            stack.push_back(pj);
          } else if (face_orient[pj] != expect) {
            comp_orientable[comp_of[bi]] = false;
          }
        }
      }
    }

    for (int c = 0; c < n_comps; ++c) {
      int Fb = faces_in[c];
      int Eb = (3 * Fb + selfp_in[c]) / 2;
      int Vb = static_cast<int>(corners_in[c].size());
      int chi = Vb - Eb + Fb;
      BoundaryComponent bc;
      bc.component = c;
      bc.triangles = Fb;
      bc.genus = comp_orientable[c] ? (2 - chi) / 2 : (2 - chi);
      an.report.boundary_components.push_back(bc);
      if (!comp_orientable[c]) an.report.orientable = false;
    }
  }

  // --- class-to-boundary incidence ---
  an.vertex_class_boundary.assign(V, {});
  an.edge_class_boundary.assign(E, {});
  for (int fid : bfaces) {
    int tet = fid / 4, face = fid % 4;
    int comp = an.boundary_component_of_face[fid];
    for (int v = 0; v < 4; ++v) {
      if (v == face) continue;
      an.vertex_class_boundary[an.vertex_class[tet * 4 + v]].push_back(comp);
    }
    for (int a = 0; a < 4; ++a) {
      if (a == face) continue;
      for (int b = a + 1; b < 4; ++b) {
        if (b == face) continue;
        an.edge_class_boundary[an.edge_class[tet * 6 + edge_index(a, b)]]
            .push_back(comp);
      }
    }
  }
  auto dedup = [](std::vector<std::vector<int>>& lists) {
    for (auto& l : lists) {
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
    }
  };
  dedup(an.vertex_class_boundary);
  dedup(an.edge_class_boundary);

  return an;
}

std::vector<int> SkeletonAnalysis::tet_boundary_components(
    const Triangulation& t, int tet) const {
  (void)t;
  std::vector<int> comps;
  for (int v = 0; v < 4; ++v) {
    const auto& vb = vertex_class_boundary[vertex_class[tet * 4 + v]];
    comps.insert(comps.end(), vb.begin(), vb.end());
  }
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  return comps;
}

SkeletonReport analyze_skeleton(const Triangulation& t) {
  return analyze_skeleton_detailed(t).report;
}

ClosedCheck is_closed_3_manifold(const Triangulation& t) {
  ClosedCheck result;
  result.report = analyze_skeleton(t);
  result.closed = t.all_faces_glued() &&
                  result.report.all_links_are_spheres() &&
                  !result.report.has_reversed_edge;
  return result;
}

Multigraph dual_graph(const Triangulation& t) {
  Multigraph g(t.n_tetrahedra());
  for (const auto& gl : t.gluings()) g.add_arc(gl.src_tet, gl.dst_tet);
  g.canonicalize();
  return g;
}

}  // namespace topo
