// Acceptance gate. Each criterion re-exercises one contract of the library
// end to end and prints a single PASS or FAIL line with its check count and
// elapsed time; the process exits nonzero when any check fails or a time
// budget is blown.

#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "brute_force.hpp"
#include "builders.hpp"
#include "corpus.hpp"
#include "json.hpp"
#include "topo/bound_chain.hpp"
#include "topo/decomposition.hpp"
#include "topo/errors.hpp"
#include "topo/exact_width.hpp"
#include "topo/fork_complex.hpp"
#include "topo/generalized_splitting.hpp"
#include "topo/heuristic_width.hpp"
#include "topo/multigraph.hpp"
#include "topo/skeleton.hpp"
#include "topo/subdivision.hpp"
#include "topo/triangulation.hpp"
#include "topo/triangulation_splitting.hpp"

namespace {

constexpr std::array<const char*, 8> kCorpus = {
    "ball",     "closed_1", "closed_2", "disconnected",
    "fig1",     "reversed_edge", "sphere_i", "torus_i"};

// Collects failed checks; a criterion passes when none were recorded and it
// finished inside its budget.
class Checker {
 public:
  void require(bool ok, const std::string& what) {
    ++n_checks_;
    if (!ok) failures_.push_back(what);
  }

  int n_checks() const { return n_checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int n_checks_ = 0;
  std::vector<std::string> failures_;
};

template <typename F>
bool throws_domain_error(F&& f) {
  try {
    f();
  } catch (const topo::DomainError&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

// ===== Criterion 1: families with known widths =====

void check_known_families(Checker& c) {
  const topo::ExactOptions roomy{.cutoff = 25};
  for (int k = 2; k <= 5; ++k) {
    const topo::Multigraph g = builders::grid(k, k);
    const std::string name =
        std::to_string(k) + "x" + std::to_string(k) + " grid";
    c.require(topo::exact_treewidth(g, roomy).value == k, name + " treewidth");
    c.require(topo::exact_pathwidth(g, roomy).value == k, name + " pathwidth");
  }
  for (int n = 2; n <= 7; ++n)
    c.require(topo::exact_treewidth(builders::complete(n)).value == n - 1,
              "K" + std::to_string(n) + " treewidth");
  std::mt19937 rng(8128);
  for (int trial = 0; trial < 10; ++trial) {
    topo::Multigraph t = builders::random_tree(rng, 2 + 2 * trial);
    builders::add_noise(rng, t, 4);
    c.require(topo::exact_treewidth(t).value == 1,
              "noisy random tree " + std::to_string(trial) + " treewidth");
  }
  for (int h = 1; h <= 6; ++h)
    c.require(
        topo::exact_pathwidth(builders::complete_binary_tree(h)).value ==
            (h + 1) / 2,
        "complete binary tree of height " + std::to_string(h) + " pathwidth");
}

// ===== Criteria 2-4 share one oracle set =====

struct OracleEntry {
  topo::Multigraph graph;
  int treewidth = 0;
  int pathwidth = 0;
  topo::WidthCertificate tw_cert;
  topo::WidthCertificate pw_cert;
};

// 200 random connected graphs on at most 12 nodes, each with both exhaustive
// oracle values and both exact certificates. Every third graph gets loops and
// duplicate arcs sprinkled in. Built on first use, inside criterion 2's
// clock; criteria 3 and 4 reuse the set.
const std::vector<OracleEntry>& oracle_set() {
  static const std::vector<OracleEntry> entries = [] {
    std::vector<OracleEntry> out;
    std::mt19937 rng(940711);
    for (int trial = 0; trial < 200; ++trial) {
      OracleEntry e;
      e.graph = builders::random_connected(rng, 2 + trial % 11,
                                           0.08 + 0.04 * (trial % 6));
      if (trial % 3 == 0) builders::add_noise(rng, e.graph, 3);
      e.treewidth = oracle::treewidth(e.graph);
      e.pathwidth = oracle::pathwidth(e.graph);
      e.tw_cert = topo::exact_treewidth(e.graph);
      e.pw_cert = topo::exact_pathwidth(e.graph);
      out.push_back(std::move(e));
    }
    return out;
  }();
  return entries;
}

void check_oracle_equivalence(Checker& c) {
  for (std::size_t i = 0; i < oracle_set().size(); ++i) {
    const OracleEntry& e = oracle_set()[i];
    const std::string tag = "graph " + std::to_string(i);
    c.require(e.tw_cert.value == e.treewidth, tag + " treewidth vs oracle");
    c.require(e.pw_cert.value == e.pathwidth, tag + " pathwidth vs oracle");
    c.require(e.tw_cert.exact && e.pw_cert.exact,
              tag + " certificates flagged exact");
  }
}

void check_decomposition_validity(Checker& c) {
  for (std::size_t i = 0; i < oracle_set().size(); ++i) {
    const OracleEntry& e = oracle_set()[i];
    const std::string tag = "graph " + std::to_string(i);
    for (const topo::WidthCertificate* cert : {&e.tw_cert, &e.pw_cert}) {
      c.require(
          topo::validate_decomposition(e.graph, cert->decomposition).valid,
          tag + " exact " + cert->parameter + " decomposition validates");
      c.require(cert->decomposition.width() == cert->value,
                tag + " exact " + cert->parameter + " width matches value");
    }
    for (topo::WidthParameter p : {topo::WidthParameter::Treewidth,
                                   topo::WidthParameter::Pathwidth}) {
      const int exact =
          p == topo::WidthParameter::Treewidth ? e.treewidth : e.pathwidth;
      for (topo::Strategy s :
           {topo::Strategy::MinDegree, topo::Strategy::MinFill}) {
        const topo::WidthCertificate h = topo::heuristic_width(e.graph, p, s);
        const std::string what =
            tag + " " + topo::strategy_name(s) + " " + h.parameter;
        c.require(topo::validate_decomposition(e.graph, h.decomposition).valid,
                  what + " decomposition validates");
        c.require(h.decomposition.width() == h.value,
                  what + " width matches value");
        c.require(h.value >= exact, what + " bounds the exact value");
      }
    }
  }
}

void check_nice_contract(Checker& c) {
  for (std::size_t i = 0; i < oracle_set().size(); ++i) {
    const OracleEntry& e = oracle_set()[i];
    const int n = e.graph.n_nodes();
    const std::string tag = "graph " + std::to_string(i);

    const topo::NiceTreeDecomposition from_tree =
        topo::to_nice(e.tw_cert.decomposition);
    c.require(from_tree.width() == e.tw_cert.value,
              tag + " nice form preserves treewidth");
    c.require(from_tree.n_bags() <= 4 * n,
              tag + " nice form stays under 4n bags");
    c.require(topo::validate_nice(e.graph, from_tree).valid,
              tag + " nice form validates");

    const topo::NiceTreeDecomposition from_path =
        topo::to_nice(e.pw_cert.decomposition);
    c.require(from_path.width() == e.pw_cert.value,
              tag + " nice path form preserves pathwidth");
    c.require(from_path.n_bags() <= 4 * n,
              tag + " nice path form stays under 4n bags");
    c.require(topo::count_join_bags(from_path) == 0,
              tag + " nice path form has no join bags");
    c.require(topo::validate_nice(e.graph, from_path).valid,
              tag + " nice path form validates");
  }
}

// ===== Criterion 5: triangulation kernel and subdivision =====

std::vector<int> sorted_boundary_genera(const topo::SkeletonReport& r) {
  std::vector<int> genera;
  for (const topo::BoundaryComponent& b : r.boundary_components)
    genera.push_back(b.genus);
  std::sort(genera.begin(), genera.end());
  return genera;
}

void check_triangulation_kernel(Checker& c) {
  int n_closed = 0;
  for (const std::string stem : kCorpus) {
    const topo::Triangulation t = corpus::load(stem);
    const topo::ClosedCheck closed = topo::is_closed_3_manifold(t);
    if (closed.closed) {
      ++n_closed;
      const topo::Multigraph dual = topo::dual_graph(t);
      bool regular = true;
      for (int v = 0; v < dual.n_nodes(); ++v)
        regular = regular && dual.degree(v) == 4;
      c.require(regular, stem + " dual graph is 4-regular");
      c.require(closed.report.euler_characteristic == 0,
                stem + " Euler characteristic is 0");
    }

    const topo::SkeletonReport before = topo::analyze_skeleton(t);
    const topo::Triangulation s = topo::barycentric_subdivision(t);
    const topo::SkeletonReport after = topo::analyze_skeleton(s);
    c.require(s.n_tetrahedra() == 24 * t.n_tetrahedra(),
              stem + " subdivision has 24n tetrahedra");
    c.require(topo::is_closed_3_manifold(s).closed == closed.closed,
              stem + " subdivision preserves closedness");
    c.require(after.orientable == before.orientable,
              stem + " subdivision preserves orientability");
    c.require(sorted_boundary_genera(after) == sorted_boundary_genera(before),
              stem + " subdivision preserves boundary genera");
    if (!before.has_reversed_edge) {
      c.require(after.euler_characteristic == before.euler_characteristic,
                stem + " subdivision preserves the Euler characteristic");
    } else {
      // A reversed edge hides its fold point from the cell counts, so the
      // honest comparison is against the fold-free subdivided complex: it
      // computes the Euler characteristic of the space, and a further
      // subdivision must leave that number alone.
      c.require(!after.has_reversed_edge,
                stem + " subdivision removes the reversed edge");
      const topo::SkeletonReport again =
          topo::analyze_skeleton(topo::barycentric_subdivision(s));
      c.require(again.euler_characteristic == after.euler_characteristic,
                stem + " Euler characteristic stable once fold-free");
    }
  }
  c.require(n_closed >= 1, "corpus contains a closed triangulation");
}

// ===== Criterion 6: genus identity on closed members =====

void check_genus_identity(Checker& c) {
  int n_eligible = 0;
  for (const std::string stem : kCorpus) {
    const topo::Triangulation t = corpus::load(stem);
    if (!topo::is_closed_3_manifold(t).closed) continue;
    const topo::Multigraph dual = topo::dual_graph(t);
    if (!dual.is_connected()) continue;
    ++n_eligible;
    const topo::SkeletonReport r = topo::analyze_skeleton(t);
    const int dual_betti = dual.first_betti_number();
    c.require(dual_betti == t.n_tetrahedra() + 1,
              stem + " dual Betti number is n + 1");
    c.require(dual_betti == r.edge_classes - r.vertex_classes + 1,
              stem + " dual Betti number equals the 1-skeleton Betti number");
  }
  c.require(n_eligible >= 1,
            "corpus contains a closed member with connected dual graph");
}

// ===== Criterion 7: amalgamation algebra =====

// Two pieces sharing one boundary surface of genus gs, split at genera g0
// and g1. Piece 0 comes first in the ordering, so the shared slot sits in
// the upper half of its partition; amalgamation must give g0 + g1 - gs.
topo::GeneralizedSplitting two_piece(int g0, int g1, int gs) {
  topo::GeneralizedSplitting out;
  out.decomposition.pieces = {{0, {gs}}, {1, {gs}}};
  out.decomposition.gluings = {{topo::SlotRef{0, 0}, topo::SlotRef{1, 0}}};
  out.ordering = {1, 2};

  topo::PieceSplitting first;
  first.surface_genus = g0;
  first.n_fork = topo::handlebody_fork(0, g0);
  first.k_fork = topo::handlebody_fork(1, g0);
  first.k_fork.n_tines = 1;
  first.k_fork.tine_genera = {gs};
  first.partition_2 = {0};

  topo::PieceSplitting second;
  second.surface_genus = g1;
  second.n_fork = topo::handlebody_fork(2, g1);
  second.n_fork.n_tines = 1;
  second.n_fork.tine_genera = {gs};
  second.k_fork = topo::handlebody_fork(3, g1);
  second.partition_1 = {0};

  out.splittings = {first, second};
  return out;
}

void check_amalgamation(Checker& c) {
  std::mt19937 rng(60611);
  std::uniform_int_distribution<int> shared(0, 6);
  std::uniform_int_distribution<int> above(0, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    const int gs = shared(rng);
    const int g0 = gs + above(rng);
    const int g1 = gs + above(rng);
    const topo::GenusLedger led = topo::amalgamate(two_piece(g0, g1, gs));
    c.require(led.amalgamated_genus == g0 + g1 - gs,
              "two-piece trial " + std::to_string(trial) + " amalgamates to " +
                  std::to_string(g0) + " + " + std::to_string(g1) + " - " +
                  std::to_string(gs));
  }

  for (int g = 1; g <= 20; ++g)
    for (int m = 0; m <= 10; ++m) {
      const std::string tag = "thick-thin g=" + std::to_string(g) +
                              " m=" + std::to_string(m);
      if (m <= g) {
        const topo::GenusLedger led =
            topo::amalgamate(topo::thick_thin_splitting(g, m));
        c.require(led.amalgamated_genus == g, tag + " amalgamates back to g");
      } else {
        c.require(throws_domain_error([&] { topo::thick_thin_splitting(g, m); }),
                  tag + " is rejected");
      }
    }

  topo::GeneralizedSplitting backwards = two_piece(2, 2, 1);
  backwards.ordering = {2, 1};
  c.require(!topo::validate_generalized(backwards).valid,
            "incompatible ordering fails validation");
  c.require(throws_domain_error([&] { topo::amalgamate(backwards); }),
            "incompatible ordering is rejected by amalgamate");
}

// ===== Criterion 8: bound chain audit =====

void check_bound_chain(Checker& c) {
  std::vector<std::pair<std::string, topo::BoundInputs>> probes;
  probes.emplace_back("reference run",
                      topo::BoundInputs{.volume = 10.0, .budget_constant = 1.1});
  probes.emplace_back("zero volume", topo::BoundInputs{.volume = 0.0});
  probes.emplace_back("supplied splitting",
                      topo::BoundInputs{.volume = 10.0,
                                        .budget_constant = 1.1,
                                        .thick_genus = 5,
                                        .m_thin = 2});
  probes.emplace_back("Heegaard shortcut",
                      topo::BoundInputs{.volume = 10.0,
                                        .budget_constant = 1.1,
                                        .heegaard_genus = 3});
  probes.emplace_back("treewidth shortcut",
                      topo::BoundInputs{.volume = 10.0,
                                        .budget_constant = 1.1,
                                        .treewidth_ub = 1});
  probes.emplace_back("pathwidth shortcut",
                      topo::BoundInputs{.volume = 10.0,
                                        .budget_constant = 1.1,
                                        .pathwidth_ub = 7});
  for (const auto& [name, inputs] : probes)
    c.require(topo::reverify(topo::bound_chain(inputs)),
              name + " report re-verifies");

  std::array<std::array<int, 10>, 10> sweep{};
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      topo::BoundInputs inputs;
      inputs.volume = 1.0 + i;
      inputs.budget_constant = 0.5 * (j + 1);
      const topo::BoundChainReport report = topo::bound_chain(inputs);
      c.require(topo::reverify(report),
                "sweep report (" + std::to_string(i) + ", " +
                    std::to_string(j) + ") re-verifies");
      sweep[i][j] = report.pathwidth_bound;
    }
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      if (i > 0)
        c.require(sweep[i][j] >= sweep[i - 1][j],
                  "bound is monotone in volume at (" + std::to_string(i) +
                      ", " + std::to_string(j) + ")");
      if (j > 0)
        c.require(sweep[i][j] >= sweep[i][j - 1],
                  "bound is monotone in the budget constant at (" +
                      std::to_string(i) + ", " + std::to_string(j) + ")");
    }

  // The skeleton splitting of a closed n-tetrahedron triangulation has genus
  // n + 1, so its pathwidth bound is 4(n + 1) - 2 = 4n + 2. The corpus
  // provides n = 1; doubling one tetrahedron provides n = 2.
  for (int n = 1; n <= 10; ++n)
    c.require(topo::pathwidth_from_genus(n + 1) == 4 * n + 2,
              "pathwidth bound for the genus of " + std::to_string(n) +
                  " tetrahedra is 4n + 2");
  const topo::TriangulationSplitting one =
      topo::splitting_from_closed_triangulation(corpus::load("closed_1"));
  c.require(topo::pathwidth_from_genus(one.genus) == 6,
            "closed_1 splitting gives pathwidth bound 6");
  topo::Triangulation dbl(2);
  for (int f = 0; f < 4; ++f)
    dbl.add_gluing({0, f, 1, f, topo::Perm4::identity()});
  const topo::TriangulationSplitting two =
      topo::splitting_from_closed_triangulation(dbl);
  c.require(topo::pathwidth_from_genus(two.genus) == 10,
            "doubled tetrahedron splitting gives pathwidth bound 10");
}

// ===== Criterion 9: serialization round-trips =====

void check_round_trips(Checker& c) {
  // Serialize-only reports still round-trip through the JSON layer: parsing
  // the text and dumping it back must reproduce the bytes.
  auto canonical = [&c](const std::string& text, const std::string& what) {
    c.require(!text.empty() && text.back() == '\n',
              what + " ends with a newline");
    std::string redumped;
    try {
      redumped = nlohmann::json::parse(text).dump(2) + "\n";
    } catch (const nlohmann::json::parse_error&) {
    }
    c.require(redumped == text, what + " JSON re-dumps byte-identically");
  };

  for (const std::string stem : kCorpus) {
    const std::string bytes = corpus::read_file(stem + ".tri");
    const topo::Triangulation t = topo::parse_triangulation(bytes);
    c.require(topo::serialize_triangulation(t) == bytes,
              stem + ".tri round-trips byte-identically");

    const topo::Multigraph dual = topo::dual_graph(t);
    const std::string dual_json = topo::to_json_string(dual);
    const topo::Multigraph parsed = topo::multigraph_from_json(dual_json);
    c.require(parsed == dual, stem + " dual graph survives JSON");
    c.require(topo::to_json_string(parsed) == dual_json,
              stem + " dual graph JSON round-trips byte-identically");

    canonical(topo::to_json_string(topo::analyze_skeleton(t)),
              stem + " skeleton report");
  }

  for (const std::string stem : {"closed_1", "closed_2"}) {
    const topo::ForkComplex fc =
        topo::splitting_from_closed_triangulation(corpus::load(stem)).complex;
    const std::string text = topo::to_json_string(fc);
    const topo::ForkComplex back = topo::fork_complex_from_json(text);
    c.require(topo::to_json_string(back) == text,
              stem + " fork complex JSON round-trips byte-identically");
  }

  for (const auto& [g, m] : std::vector<std::pair<int, int>>{
           {1, 1}, {2, 0}, {4, 3}, {7, 5}}) {
    const topo::GeneralizedSplitting gs = topo::thick_thin_splitting(g, m);
    const std::string text = topo::to_json_string(gs);
    const topo::GeneralizedSplitting back =
        topo::generalized_splitting_from_json(text);
    const std::string tag =
        "thick-thin (" + std::to_string(g) + ", " + std::to_string(m) + ")";
    c.require(topo::to_json_string(back) == text,
              tag + " splitting JSON round-trips byte-identically");
    canonical(topo::to_json_string(topo::amalgamate(gs)), tag + " ledger");
  }

  const topo::Multigraph g33 = builders::grid(3, 3);
  const topo::WidthCertificate cert = topo::exact_treewidth(g33);
  canonical(topo::to_json_string(cert), "width certificate");
  canonical(topo::to_json_string(topo::to_nice(cert.decomposition)),
            "nice decomposition");
  canonical(topo::to_json_string(topo::bound_chain(
                {.volume = 10.0, .budget_constant = 1.1})),
            "bound chain report");
}

// ===== Harness =====

struct Criterion {
  int number;
  const char* label;
  double budget_seconds;
  void (*run)(Checker&);
};

constexpr std::array<Criterion, 9> kCriteria = {{
    {1, "families with known widths", 10.0, check_known_families},
    {2, "exact engines match the exhaustive oracles", 300.0,
     check_oracle_equivalence},
    {3, "emitted decompositions validate; heuristics bound exact values",
     60.0, check_decomposition_validity},
    {4, "nice decomposition contract", 60.0, check_nice_contract},
    {5, "triangulation kernel and barycentric subdivision", 60.0,
     check_triangulation_kernel},
    {6, "dual and 1-skeleton genus identity", 10.0, check_genus_identity},
    {7, "amalgamation algebra", 10.0, check_amalgamation},
    {8, "bound chain audit", 10.0, check_bound_chain},
    {9, "serialization round-trips", 10.0, check_round_trips},
}};

}  // namespace

int main() {
  int n_failed = 0;
  for (const Criterion& criterion : kCriteria) {
    Checker checker;
    std::string aborted;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(checker);
    } catch (const std::exception& e) {
      aborted = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();

    const bool in_budget = elapsed < criterion.budget_seconds;
    const bool ok =
        aborted.empty() && checker.failures().empty() && in_budget;
    std::printf("[%s] criterion %d: %s (%d checks, %.1fs of %.0fs)\n",
                ok ? "PASS" : "FAIL", criterion.number, criterion.label,
                checker.n_checks(), elapsed, criterion.budget_seconds);
    if (!aborted.empty())
      std::printf("       unexpected exception: %s\n", aborted.c_str());
    if (!in_budget) std::printf("       over the time budget\n");
    const auto& failures = checker.failures();
    for (std::size_t i = 0; i < failures.size() && i < 5; ++i)
      std::printf("       failed: %s\n", failures[i].c_str());
    if (failures.size() > 5)
      std::printf("       ... and %zu more\n", failures.size() - 5);
    if (!ok) ++n_failed;
  }

  if (n_failed == 0) {
    std::printf("all %zu criteria passed\n", kCriteria.size());
    return 0;
  }
  std::printf("%d of %zu criteria failed\n", n_failed, kCriteria.size());
  return 1;
}
