#include <string>

#include "corpus.hpp"
#include "doctest.h"
#include "topo/bound_chain.hpp"
#include "topo/decomposition.hpp"
#include "topo/errors.hpp"
#include "topo/skeleton.hpp"

using topo::BoundChainReport;
using topo::BoundInputs;
using topo::bound_chain;

namespace {

std::vector<std::string> step_names(const BoundChainReport& r) {
  std::vector<std::string> out;
  for (const auto& s : r.steps) out.push_back(s.step);
  return out;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("pathwidth_from_genus") {
  CHECK(topo::pathwidth_from_genus(0) == 0);
  CHECK(topo::pathwidth_from_genus(1) == 2);
  CHECK(topo::pathwidth_from_genus(2) == 6);
  CHECK(topo::pathwidth_from_genus(12) == 46);
  CHECK_THROWS_AS(topo::pathwidth_from_genus(-1), topo::DomainError);
}

TEST_CASE("genus_lower_bound_from_treewidth") {
  CHECK(topo::genus_lower_bound_from_treewidth(0) == 18);
  CHECK(topo::genus_lower_bound_from_treewidth(2) == 54);
  CHECK_THROWS_AS(topo::genus_lower_bound_from_treewidth(-3),
                  topo::DomainError);
}

TEST_CASE("the Margulis bracket is sane") {
  CHECK(topo::kMargulisLower == doctest::Approx(0.104));
  CHECK(topo::kMargulisUpper == doctest::Approx(0.616));
  CHECK(topo::kMargulisLower < topo::kMargulisUpper);
}

TEST_CASE("reference run at volume 10, K = 1.1") {
  BoundInputs in;
  in.volume = 10.0;
  in.budget_constant = 1.1;
  BoundChainReport r = bound_chain(in);

  CHECK(r.tetrahedron_budget == 11);
  CHECK(r.thick_genus == 12);
  CHECK(r.m_thin == 11);
  CHECK(r.amalgamated_genus == 12);
  CHECK(r.pathwidth_bound == 46);
  CHECK(r.c == doctest::Approx(4.6));
  CHECK(r.c_prime == doctest::Approx(4.6));
  CHECK(r.c_double_prime == doctest::Approx(1.2));
  CHECK_FALSE(r.degenerate);

  CHECK(step_names(r) ==
        std::vector<std::string>{"tetrahedron_budget", "thick_genus", "m_thin",
                                 "amalgamated_genus", "pathwidth_from_genus",
                                 "final_pathwidth_bound"});
  CHECK(reverify(r));

  std::string json = topo::to_json_string(r);
  CHECK(json.find("\"rule\"") != std::string::npos);
  CHECK(json.find("n = ceil(K * vol)") != std::string::npos);
}

TEST_CASE("zero volume degenerates cleanly") {
  BoundInputs in;
  in.volume = 0.0;
  BoundChainReport r = bound_chain(in);
  CHECK(r.degenerate);
  CHECK(r.tetrahedron_budget == 0);
  CHECK(r.thick_genus == 0);
  CHECK(r.m_thin == 0);
  CHECK(r.amalgamated_genus == 0);
  CHECK(r.pathwidth_bound == 0);
  CHECK(r.c == 0.0);
  CHECK(r.c_double_prime == 0.0);
  CHECK(reverify(r));
}

TEST_CASE("input checks") {
  BoundInputs in;
  in.volume = -1.0;
  CHECK_THROWS_AS(bound_chain(in), topo::DomainError);
  in.volume = 1.0;
  in.budget_constant = 0.0;
  CHECK_THROWS_AS(bound_chain(in), topo::DomainError);
  in.budget_constant = 1.0;
  in.epsilon = 0.0;
  CHECK_THROWS_AS(bound_chain(in), topo::DomainError);
  in.epsilon = 0.7;
  CHECK_THROWS_AS(bound_chain(in), topo::DomainError);
  in.epsilon = topo::kMargulisUpper;
  in.m_thin = -1;
  CHECK_THROWS_AS(bound_chain(in), topo::DomainError);
}

TEST_CASE("supplied splitting parameters replace the budget route") {
  BoundInputs in;
  in.volume = 4.0;
  in.thick_genus = 5;
  in.m_thin = 2;
  BoundChainReport r = bound_chain(in);
  CHECK(r.thick_genus == 5);
  CHECK(r.m_thin == 2);
  CHECK(r.amalgamated_genus == 5);
  CHECK(r.pathwidth_bound == 18);
  CHECK(reverify(r));

  in.m_thin = 7;  // more thin parts than the genus allows
  CHECK_THROWS_AS(bound_chain(in), topo::DomainError);
}

TEST_CASE("shortcut routes tighten the final bound") {
  BoundInputs in;
  in.volume = 4.0;
  in.thick_genus = 5;
  in.m_thin = 2;

  SUBCASE("heegaard genus") {
    in.heegaard_genus = 3;
    BoundChainReport r = bound_chain(in);
    CHECK(r.pathwidth_bound == 10);
    CHECK(step_names(r).at(5) == "pathwidth_from_heegaard_genus");
    CHECK(reverify(r));
  }
  SUBCASE("treewidth only loosens here") {
    in.treewidth_ub = 1;
    BoundChainReport r = bound_chain(in);
    CHECK(r.pathwidth_bound == 18);  // 4 * 36 - 2 loses to the chain
    std::vector<std::string> names = step_names(r);
    CHECK(names.at(5) == "genus_from_treewidth");
    CHECK(names.at(6) == "pathwidth_from_treewidth_genus");
    CHECK(reverify(r));
  }
  SUBCASE("direct pathwidth wins") {
    in.pathwidth_ub = 7;
    BoundChainReport r = bound_chain(in);
    CHECK(r.pathwidth_bound == 7);
    CHECK(step_names(r).at(5) == "pathwidth_supplied");
    CHECK(reverify(r));
  }
  SUBCASE("genus zero shortcut clamps and flags") {
    in.heegaard_genus = 0;
    BoundChainReport r = bound_chain(in);
    CHECK(r.pathwidth_bound == 0);
    CHECK(r.degenerate);
    CHECK(reverify(r));
  }
}

TEST_CASE("reverify spots tampering") {
  BoundInputs in;
  in.volume = 10.0;
  in.budget_constant = 1.1;
  BoundChainReport r = bound_chain(in);
  REQUIRE(reverify(r));

  SUBCASE("final bound") {
    r.pathwidth_bound -= 1;
    CHECK_FALSE(reverify(r));
  }
  SUBCASE("step output") {
    r.steps[3].output += 1;
    CHECK_FALSE(reverify(r));
  }
  SUBCASE("constant") {
    r.c_prime *= 2;
    CHECK_FALSE(reverify(r));
  }
  SUBCASE("renamed step") {
    r.steps[0].step = "mystery";
    CHECK_FALSE(reverify(r));
  }
  SUBCASE("dropped budget step") {
    r.steps.erase(r.steps.begin());
    CHECK_FALSE(reverify(r));
  }
  SUBCASE("reordered final step") {
    std::swap(r.steps[4], r.steps[5]);
    CHECK_FALSE(reverify(r));
  }
}

TEST_CASE("bounds grow with volume and budget constant") {
  int prev = -1;
  for (double vol : {0.5, 1.5, 3.0, 6.0, 12.0}) {
    BoundInputs in;
    in.volume = vol;
    in.budget_constant = 1.0;
    int pw = bound_chain(in).pathwidth_bound;
    CHECK(pw >= prev);
    prev = pw;
  }
  prev = -1;
  for (double k : {0.25, 1.0, 2.0, 4.0}) {
    BoundInputs in;
    in.volume = 3.0;
    in.budget_constant = k;
    int pw = bound_chain(in).pathwidth_bound;
    CHECK(pw >= prev);
    prev = pw;
  }
}

TEST_CASE("manifold width witnesses come from the dual graph") {
  topo::WidthCertificate ball = topo::manifold_width_upper_bound(
      corpus::load("ball"), topo::WidthParameter::Treewidth);
  CHECK(ball.exact);
  CHECK(ball.value == 0);

  topo::WidthCertificate closed = topo::manifold_width_upper_bound(
      corpus::load("closed_1"), topo::WidthParameter::Pathwidth);
  CHECK(closed.exact);
  CHECK(closed.value == 0);  // loops and parallel arcs carry no width

  topo::Triangulation torus_i = corpus::load("torus_i");
  topo::WidthCertificate big = topo::manifold_width_upper_bound(
      torus_i, topo::WidthParameter::Treewidth);
  CHECK_FALSE(big.exact);  // 54 dual nodes exceed the exact cutoff
  CHECK(big.value >= 1);
  topo::Multigraph dual = topo::dual_graph(torus_i);
  CHECK(topo::validate_decomposition(dual, big.decomposition).valid);
}

}  // TEST_SUITE
