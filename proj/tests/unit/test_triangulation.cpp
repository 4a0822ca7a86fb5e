#include <optional>
#include <string>

#include "doctest.h"
#include "topo/errors.hpp"
#include "topo/triangulation.hpp"

using topo::FaceGluing;
using topo::Perm4;
using topo::Triangulation;

namespace {

Perm4 perm(const std::string& text) {
  Perm4 p;
  REQUIRE(Perm4::parse(text, p));
  return p;
}

}  // namespace

TEST_SUITE("triangulation") {

TEST_CASE("add_gluing stores the canonical orientation") {
  Triangulation t(2);
  // Given with src > dst; the stored record must be flipped with the
  // inverse permutation.
  t.add_gluing({1, 2, 0, 1, perm("0312")});
  REQUIRE(t.n_gluings() == 1);
  const FaceGluing& g = t.gluings()[0];
  CHECK(g.src_tet == 0);
  CHECK(g.src_face == 1);
  CHECK(g.dst_tet == 1);
  CHECK(g.dst_face == 2);
  CHECK(g.perm == perm("0231"));
}

TEST_CASE("glued_to answers from both sides with inverse permutations") {
  Triangulation t(2);
  t.add_gluing({0, 1, 1, 2, perm("0231")});
  auto a = t.glued_to(0, 1);
  REQUIRE(a.has_value());
  CHECK(a->other_tet == 1);
  CHECK(a->other_face == 2);
  CHECK(a->perm == perm("0231"));
  auto b = t.glued_to(1, 2);
  REQUIRE(b.has_value());
  CHECK(b->other_tet == 0);
  CHECK(b->other_face == 1);
  CHECK(b->perm == perm("0312"));
  CHECK(a->perm.then(b->perm).is_identity());
  CHECK_FALSE(t.glued_to(0, 0).has_value());
  CHECK_FALSE(t.glued_to(1, 3).has_value());
}

TEST_CASE("gluing a tetrahedron to itself along two faces is legal") {
  Triangulation t(1);
  t.add_gluing({0, 0, 0, 1, perm("1023")});
  REQUIRE(t.n_gluings() == 1);
  CHECK(t.glued_to(0, 0)->other_face == 1);
  CHECK(t.glued_to(0, 1)->other_face == 0);
}

TEST_CASE("add_gluing rejects malformed records") {
  Triangulation t(2);
  CHECK_THROWS_AS(t.add_gluing({0, 0, 0, 0, perm("0123")}), topo::DomainError);
  CHECK_THROWS_AS(t.add_gluing({0, 0, 1, 1, perm("0123")}), topo::DomainError);
  CHECK_THROWS_AS(t.add_gluing({0, 0, 2, 0, perm("0123")}), topo::DomainError);
  CHECK_THROWS_AS(t.add_gluing({-1, 0, 1, 0, perm("0123")}), topo::DomainError);
  CHECK_THROWS_AS(t.add_gluing({0, 4, 1, 0, perm("0123")}), topo::DomainError);
  t.add_gluing({0, 0, 1, 0, perm("0123")});
  // Both sides of the stored gluing are now occupied.
  CHECK_THROWS_AS(t.add_gluing({0, 0, 1, 1, perm("1023")}), topo::DomainError);
  CHECK_THROWS_AS(t.add_gluing({1, 0, 0, 1, perm("1023")}), topo::DomainError);
}

TEST_CASE("all_faces_glued") {
  Triangulation t(1);
  CHECK_FALSE(t.all_faces_glued());
  t.add_gluing({0, 0, 0, 1, perm("1023")});
  t.add_gluing({0, 2, 0, 3, perm("0132")});
  CHECK(t.all_faces_glued());
}

TEST_CASE("equality ignores insertion order") {
  Triangulation a(2), b(2);
  a.add_gluing({0, 0, 1, 0, perm("0123")});
  a.add_gluing({0, 1, 1, 1, perm("0123")});
  b.add_gluing({1, 1, 0, 1, perm("0123")});
  b.add_gluing({1, 0, 0, 0, perm("0123")});
  CHECK(a == b);
  Triangulation c(2);
  c.add_gluing({0, 0, 1, 0, perm("0123")});
  CHECK_FALSE(a == c);
}

TEST_CASE("parse reads header, comments and gluings") {
  Triangulation t = topo::parse_triangulation(
      "# a ball\n"
      "tets 2\n"
      "\n"
      "0 0 -> 1 0 0123   # shared face\n");
  CHECK(t.n_tetrahedra() == 2);
  CHECK(t.n_gluings() == 1);
  CHECK(t.glued_to(1, 0)->other_tet == 0);
}

TEST_CASE("serialize emits the canonical sorted form") {
  Triangulation t = topo::parse_triangulation("tets 2\n1 2 -> 0 1 0312\n");
  CHECK(topo::serialize_triangulation(t) == "tets 2\n0 1 -> 1 2 0231\n");
}

TEST_CASE("serialize then parse is the identity") {
  Triangulation t(3);
  t.add_gluing({2, 1, 1, 3, perm("0312")});
  t.add_gluing({0, 0, 2, 0, perm("0123")});
  t.add_gluing({0, 1, 1, 1, perm("0123")});
  const std::string text = topo::serialize_triangulation(t);
  CHECK(topo::parse_triangulation(text) == t);
  CHECK(topo::serialize_triangulation(topo::parse_triangulation(text)) == text);
}

TEST_CASE("parse reports the offending line") {
  auto line_of = [](const std::string& text) {
    try {
      topo::parse_triangulation(text);
    } catch (const topo::ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("bogus 1\n") == 1);
  CHECK(line_of("tets 0\n") == 1);
  CHECK(line_of("tets -3\n") == 1);
  CHECK(line_of("tets 1 junk\n") == 1);
  CHECK(line_of("tets 1\n0 0 -> 0 1\n") == 2);
  CHECK(line_of("tets 1\n0 0 => 0 1 1023\n") == 2);
  CHECK(line_of("tets 1\n0 0 -> 0 1 1023 junk\n") == 2);
  CHECK(line_of("tets 1\n0 0 -> 0 1 1024\n") == 2);
  CHECK(line_of("tets 1\n0 0 -> 0 0 0123\n") == 2);
  CHECK(line_of("tets 1\n# fine\n0 0 -> 1 0 0123\n") == 3);
}

}  // TEST_SUITE
