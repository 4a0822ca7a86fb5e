#include "topo/triangulation.hpp"

#include <algorithm>
#include <sstream>

#include "topo/errors.hpp"

namespace topo {

namespace {

bool side_less(int tet_a, int face_a, int tet_b, int face_b) {
  return tet_a < tet_b || (tet_a == tet_b && face_a < face_b);
}

}  // namespace

Triangulation::Triangulation(int n_tetrahedra)
    : n_tetrahedra_(n_tetrahedra),
      partner_(static_cast<size_t>(4) * std::max(0, n_tetrahedra), -1),
      partner_perm_(static_cast<size_t>(4) * std::max(0, n_tetrahedra)) {}

void Triangulation::add_gluing(FaceGluing g) {
  auto bad = [](const std::string& what) { throw DomainError(what); };

  if (g.src_tet < 0 || g.src_tet >= n_tetrahedra_ || g.dst_tet < 0 ||
      g.dst_tet >= n_tetrahedra_)
    bad("tetrahedron index out of range");
  if (g.src_face < 0 || g.src_face > 3 || g.dst_face < 0 || g.dst_face > 3)
    bad("face index out of range");
  if (g.src_tet == g.dst_tet && g.src_face == g.dst_face)
    bad("face glued to itself");
  if (g.perm[g.src_face] != g.dst_face)
    bad("permutation does not map source face to destination face");

  if (side_less(g.dst_tet, g.dst_face, g.src_tet, g.src_face)) {
    FaceGluing flipped;
    flipped.src_tet = g.dst_tet;
    flipped.src_face = g.dst_face;
    flipped.dst_tet = g.src_tet;
    flipped.dst_face = g.src_face;
    flipped.perm = g.perm.inverse();
    g = flipped;
  }

  int src_id = g.src_tet * 4 + g.src_face;
  int dst_id = g.dst_tet * 4 + g.dst_face;
  if (partner_[src_id] >= 0 || partner_[dst_id] >= 0) bad("face already glued");

  partner_[src_id] = dst_id;
  partner_perm_[src_id] = g.perm;
  partner_[dst_id] = src_id;
  partner_perm_[dst_id] = g.perm.inverse();
  gluings_.push_back(g);
  sorted_ = false;
}

const std::vector<FaceGluing>& Triangulation::gluings() const {
  if (!sorted_) {
    std::sort(gluings_.begin(), gluings_.end(),
              [](const auto& a, const auto& b) {
                return side_less(a.src_tet, a.src_face, b.src_tet, b.src_face);
              });
    sorted_ = true;
  }
  return gluings_;
}

std::optional<Triangulation::Side> Triangulation::glued_to(int tet,
                                                           int face) const {
  int id = tet * 4 + face;
  int p = partner_[id];
  if (p < 0) return std::nullopt;
  return Side{p / 4, p % 4, partner_perm_[id]};
}

bool Triangulation::operator==(const Triangulation& other) const {
  return n_tetrahedra_ == other.n_tetrahedra_ && gluings() == other.gluings();
}

// ===== Text format =====

Triangulation parse_triangulation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  Triangulation t;

  auto column_of = [](const std::string& l, const std::string& token,
                      int occurrence) {
    // 1-based column of the given whitespace-separated token occurrence.
    std::istringstream ls(l);
    std::string tok;
    int seen = 0;
    size_t pos = 0;
    while (ls >> tok) {
      pos = l.find(tok, pos);
      if (tok == token && ++seen == occurrence)
        return static_cast<int>(pos) + 1;
      pos += tok.size();
    }
    return 0;
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = line;
    if (auto hash = stripped.find('#'); hash != std::string::npos)
      stripped = stripped.substr(0, hash);
    std::istringstream ls(stripped);
    std::string first;
    if (!(ls >> first)) continue;  // blank or comment-only line

    if (!have_header) {
      if (first != "tets")
        throw ParseError("expected 'tets <n>' header", lineno, 1);
      long long n;
      if (!(ls >> n) || n < 1)
        throw ParseError("tetrahedron count must be a positive integer",
                         lineno);
      std::string rest;
      if (ls >> rest)
        throw ParseError("trailing token '" + rest + "'", lineno,
                         column_of(line, rest, 1));
      t = Triangulation(static_cast<int>(n));
      have_header = true;
      continue;
    }

    std::string arrow, perm_text;
    int src_tet, src_face, dst_tet, dst_face;
    std::istringstream gs(stripped);
    if (!(gs >> src_tet >> src_face >> arrow >> dst_tet >> dst_face >>
          perm_text))
      throw ParseError(
          "expected '<src_tet> <src_face> -> <dst_tet> <dst_face> <perm>'",
          lineno);
    if (arrow != "->")
      throw ParseError("expected '->'", lineno, column_of(line, arrow, 1));
    std::string rest;
    if (gs >> rest)
      throw ParseError("trailing token '" + rest + "'", lineno,
                       column_of(line, rest, 1));
    Perm4 perm;
    if (!Perm4::parse(perm_text, perm))
      throw ParseError("'" + perm_text + "' is not a permutation of 0123",
                       lineno, column_of(line, perm_text, 1));
    FaceGluing g{src_tet, src_face, dst_tet, dst_face, perm};
    try {
      t.add_gluing(g);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (!have_header)
    throw ParseError("missing 'tets <n>' header", lineno == 0 ? 1 : lineno);
  return t;
}

std::string serialize_triangulation(const Triangulation& t) {
  std::ostringstream out;
  out << "tets " << t.n_tetrahedra() << "\n";
  for (const auto& g : t.gluings())
    out << g.src_tet << " " << g.src_face << " -> " << g.dst_tet << " "
        << g.dst_face << " " << g.perm.str() << "\n";
  return out.str();
}

}  // namespace topo
