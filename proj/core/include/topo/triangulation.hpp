#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topo/permutation.hpp"

namespace topo {

// One face gluing. Face f of a tetrahedron is the triangle omitting vertex
// f, so perm must map src_face to dst_face. Stored in canonical orientation:
// (src_tet, src_face) <= (dst_tet, dst_face) lexicographically (gluing a face
// to itself is never valid, so equality cannot occur).
struct FaceGluing {
  int src_tet = 0;
  int src_face = 0;
  int dst_tet = 0;
  int dst_face = 0;
  Perm4 perm;

  bool operator==(const FaceGluing&) const = default;
};

// A 3-manifold triangulation: n tetrahedra plus a set of face gluings.
// Each (tet, face) pair appears in at most one gluing. Faces not mentioned
// are boundary faces.
class Triangulation {
public:
  Triangulation() = default;
  explicit Triangulation(int n_tetrahedra);

  int n_tetrahedra() const { return n_tetrahedra_; }
  int n_gluings() const { return static_cast<int>(gluings_.size()); }

  // Canonical list, sorted by (src_tet, src_face).
  const std::vector<FaceGluing>& gluings() const;

  // Normalizes orientation, rejects a face glued to itself, duplicate use of
  // a face, indices out of range, and a perm that does not map src_face to
  // dst_face.
  void add_gluing(FaceGluing g);

  // The gluing covering (tet, face) together with the permutation oriented
  // to act from that side, or nullopt for a boundary face.
  struct Side {
    int other_tet;
    int other_face;
    Perm4 perm;  // maps labels of `tet` to labels of `other_tet`
  };
  std::optional<Side> glued_to(int tet, int face) const;

  bool all_faces_glued() const { return n_gluings() * 2 == n_tetrahedra_ * 4; }

  bool operator==(const Triangulation& other) const;

private:
  int n_tetrahedra_ = 0;
  mutable std::vector<FaceGluing> gluings_;
  mutable bool sorted_ = true;
  std::vector<std::int32_t> partner_;  // face id -> partner face id, or -1
  std::vector<Perm4> partner_perm_;    // valid where partner_ >= 0
};

// ===== Text format =====
//
//   tets <n>
//   <src_tet> <src_face> -> <dst_tet> <dst_face> <perm>
//
// one gluing per line, '#' starts a comment line, blank lines are skipped,
// <perm> is the image of 0123 written as four digits. Serialization is
// canonical (gluings sorted by (src_tet, src_face)), so serialize-parse
// round-trips are byte-identical on canonical files.

Triangulation parse_triangulation(const std::string& text);
std::string serialize_triangulation(const Triangulation& t);

}  // namespace topo
