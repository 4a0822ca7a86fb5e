// All JSON serialization lives in this translation unit so the public
// headers stay free of the vendored library.  Objects use alphabetical key
// order and two-space indentation, which makes every export byte-stable.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "topo/bound_chain.hpp"
#include "topo/decomposition.hpp"
#include "topo/errors.hpp"
#include "topo/exact_width.hpp"
#include "topo/fork_complex.hpp"
#include "topo/generalized_splitting.hpp"
#include "topo/multigraph.hpp"
#include "topo/skeleton.hpp"

namespace topo {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_or_throw(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw ParseError(std::string("invalid JSON in ") + what);
  return j;
}

// Pulls a field of the wanted type or throws a uniform error.
const json& field(const json& j, const char* name, const char* what) {
  auto it = j.find(name);
  if (it == j.end())
    throw ParseError(std::string(what) + " is missing field \"" + name + "\"");
  return *it;
}

int int_field(const json& j, const char* name, const char* what) {
  const json& f = field(j, name, what);
  if (!f.is_number_integer())
    throw ParseError(std::string(what) + " field \"" + name +
                     "\" must be an integer");
  return f.get<int>();
}

std::vector<int> int_list(const json& f, const char* what) {
  if (!f.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const json& v : f) {
    if (!v.is_number_integer())
      throw ParseError(std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

json arcs_to_json(const std::vector<std::pair<int, int>>& arcs) {
  json out = json::array();
  for (const auto& [u, v] : arcs) out.push_back(json::array({u, v}));
  return out;
}

json fork_to_json(const Fork& f) {
  return json{{"grip_genus", f.grip_genus},
              {"id", f.id},
              {"tine_genera", f.tine_genera}};
}

Fork fork_from_json(const json& j) {
  Fork f;
  f.id = int_field(j, "id", "fork");
  f.grip_genus = int_field(j, "grip_genus", "fork");
  f.tine_genera = int_list(field(j, "tine_genera", "fork"), "tine_genera");
  f.n_tines = static_cast<int>(f.tine_genera.size());
  return f;
}

json tree_decomposition_to_json(const TreeDecomposition& d) {
  return json{{"bags", d.bags}, {"tree_arcs", arcs_to_json(d.tree.arcs())}};
}

}  // namespace

// ===== Multigraph =====

std::string to_json_string(const Multigraph& g) {
  return dump(json{{"arcs", arcs_to_json(g.arcs())}, {"n_nodes", g.n_nodes()}});
}

Multigraph multigraph_from_json(const std::string& text) {
  json j = parse_or_throw(text, "multigraph");
  Multigraph g(int_field(j, "n_nodes", "multigraph"));
  const json& arcs = field(j, "arcs", "multigraph");
  if (!arcs.is_array()) throw ParseError("multigraph arcs must be an array");
  for (const json& a : arcs) {
    std::vector<int> pair = int_list(a, "arc");
    if (pair.size() != 2) throw ParseError("each arc must be a pair");
    if (pair[0] < 0 || pair[0] >= g.n_nodes() || pair[1] < 0 ||
        pair[1] >= g.n_nodes())
      throw ParseError("arc endpoint out of range");
    g.add_arc(pair[0], pair[1]);
  }
  return g;
}

// ===== Skeleton report =====

std::string to_json_string(const SkeletonReport& r) {
  json comps = json::array();
  for (const BoundaryComponent& c : r.boundary_components)
    comps.push_back(json{{"component", c.component},
                         {"genus", c.genus},
                         {"triangles", c.triangles}});
  json links = json::array();
  for (LinkType t : r.vertex_link_types) links.push_back(link_type_name(t));
  return dump(json{{"boundary_components", comps},
                   {"edge_classes", r.edge_classes},
                   {"euler_characteristic", r.euler_characteristic},
                   {"has_reversed_edge", r.has_reversed_edge},
                   {"orientable", r.orientable},
                   {"triangle_classes", r.triangle_classes},
                   {"vertex_classes", r.vertex_classes},
                   {"vertex_link_types", links}});
}

// ===== Width certificates and decompositions =====

std::string to_json_string(const WidthCertificate& c) {
  return dump(json{{"decomposition", tree_decomposition_to_json(c.decomposition)},
                   {"exact", c.exact},
                   {"parameter", c.parameter},
                   {"value", c.value}});
}

std::string to_json_string(const NiceTreeDecomposition& n) {
  json kinds = json::array();
  for (BagKind k : n.kinds) kinds.push_back(bag_kind_name(k));
  return dump(json{{"bags", n.bags},
                   {"kinds", kinds},
                   {"parent", n.parent},
                   {"root", n.root}});
}

// ===== Fork complexes =====

std::string to_json_string(const ForkComplex& fc) {
  json forks = json::array();
  for (const Fork& f : fc.forks) forks.push_back(fork_to_json(f));
  json tines = json::array();
  for (const auto& [a, b] : fc.tine_pairings)
    tines.push_back(json::array(
        {json::array({a.fork, a.tine}), json::array({b.fork, b.tine})}));
  json boundary_tines = json::array();
  for (const TineRef& t : fc.unpaired_tines())
    boundary_tines.push_back(json::array({t.fork, t.tine}));
  return dump(json{{"boundary",
                    json{{"grips", fc.unpaired_grips()},
                         {"tines", boundary_tines}}},
                   {"forks", forks},
                   {"grip_pairings", arcs_to_json(fc.grip_pairings)},
                   {"tine_pairings", tines}});
}

ForkComplex fork_complex_from_json(const std::string& text) {
  json j = parse_or_throw(text, "fork complex");
  ForkComplex fc;
  const json& forks = field(j, "forks", "fork complex");
  if (!forks.is_array()) throw ParseError("forks must be an array");
  for (const json& f : forks) fc.forks.push_back(fork_from_json(f));
  for (const json& p : field(j, "grip_pairings", "fork complex")) {
    std::vector<int> pair = int_list(p, "grip pairing");
    if (pair.size() != 2) throw ParseError("each grip pairing must be a pair");
    fc.grip_pairings.emplace_back(pair[0], pair[1]);
  }
  for (const json& p : field(j, "tine_pairings", "fork complex")) {
    if (!p.is_array() || p.size() != 2)
      throw ParseError("each tine pairing must be a pair");
    std::vector<int> a = int_list(p[0], "tine reference");
    std::vector<int> b = int_list(p[1], "tine reference");
    if (a.size() != 2 || b.size() != 2)
      throw ParseError("a tine reference must be [fork, tine]");
    fc.tine_pairings.push_back({TineRef{a[0], a[1]}, TineRef{b[0], b[1]}});
  }
  return fc;
}

// ===== Generalized splittings =====

std::string to_json_string(const GeneralizedSplitting& gs) {
  json pieces = json::array();
  for (const Piece& p : gs.decomposition.pieces)
    pieces.push_back(json{{"id", p.id}, {"slot_genera", p.slot_genera}});
  json gluings = json::array();
  for (const auto& [a, b] : gs.decomposition.gluings)
    gluings.push_back(json::array(
        {json::array({a.piece, a.slot}), json::array({b.piece, b.slot})}));
  json splittings = json::array();
  for (const PieceSplitting& ps : gs.splittings)
    splittings.push_back(json{{"k_fork", fork_to_json(ps.k_fork)},
                              {"n_fork", fork_to_json(ps.n_fork)},
                              {"partition_1", ps.partition_1},
                              {"partition_2", ps.partition_2},
                              {"surface_genus", ps.surface_genus}});
  return dump(
      json{{"decomposition", json{{"gluings", gluings}, {"pieces", pieces}}},
           {"ordering", gs.ordering},
           {"splittings", splittings}});
}

GeneralizedSplitting generalized_splitting_from_json(const std::string& text) {
  json j = parse_or_throw(text, "generalized splitting");
  GeneralizedSplitting gs;
  const json& d = field(j, "decomposition", "generalized splitting");
  for (const json& p : field(d, "pieces", "decomposition")) {
    Piece piece;
    piece.id = int_field(p, "id", "piece");
    piece.slot_genera =
        int_list(field(p, "slot_genera", "piece"), "slot_genera");
    gs.decomposition.pieces.push_back(std::move(piece));
  }
  for (const json& g : field(d, "gluings", "decomposition")) {
    if (!g.is_array() || g.size() != 2)
      throw ParseError("each gluing must be a pair");
    std::vector<int> a = int_list(g[0], "slot reference");
    std::vector<int> b = int_list(g[1], "slot reference");
    if (a.size() != 2 || b.size() != 2)
      throw ParseError("a slot reference must be [piece, slot]");
    gs.decomposition.gluings.push_back(
        {SlotRef{a[0], a[1]}, SlotRef{b[0], b[1]}});
  }
  gs.ordering = int_list(field(j, "ordering", "generalized splitting"),
                         "ordering");
  for (const json& s : field(j, "splittings", "generalized splitting")) {
    PieceSplitting ps;
    ps.n_fork = fork_from_json(field(s, "n_fork", "splitting"));
    ps.k_fork = fork_from_json(field(s, "k_fork", "splitting"));
    ps.surface_genus = int_field(s, "surface_genus", "splitting");
    ps.partition_1 =
        int_list(field(s, "partition_1", "splitting"), "partition_1");
    ps.partition_2 =
        int_list(field(s, "partition_2", "splitting"), "partition_2");
    gs.splittings.push_back(std::move(ps));
  }
  return gs;
}

std::string to_json_string(const GenusLedger& ledger) {
  return dump(json{{"amalgamated_genus", ledger.amalgamated_genus},
                   {"euler_char_dual", ledger.euler_char_dual},
                   {"sum_gluing_genera", ledger.sum_gluing_genera},
                   {"sum_splitting_genera", ledger.sum_splitting_genera}});
}

// ===== Bound chains =====

std::string to_json_string(const BoundChainReport& r) {
  json steps = json::array();
  for (const BoundStep& s : r.steps) {
    json inputs = json::object();
    for (const auto& [name, value] : s.inputs) inputs[name] = value;
    steps.push_back(json{{"inputs", inputs},
                         {"output", s.output},
                         {"rule", s.rule},
                         {"step", s.step}});
  }
  return dump(json{{"amalgamated_genus", r.amalgamated_genus},
                   {"c", r.c},
                   {"c_double_prime", r.c_double_prime},
                   {"c_prime", r.c_prime},
                   {"degenerate", r.degenerate},
                   {"m_thin", r.m_thin},
                   {"pathwidth_bound", r.pathwidth_bound},
                   {"steps", steps},
                   {"tetrahedron_budget", r.tetrahedron_budget},
                   {"thick_genus", r.thick_genus}});
}

}  // namespace topo
