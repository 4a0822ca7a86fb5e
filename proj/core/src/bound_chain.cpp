#include "topo/bound_chain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "topo/errors.hpp"
#include "topo/generalized_splitting.hpp"
#include "topo/skeleton.hpp"

namespace topo {

namespace {

constexpr const char* kRuleBudget = "n = ceil(K * vol)";
constexpr const char* kRuleThickGenus = "g(S_1) <= n + 1";
constexpr const char* kRuleThinCount = "m <= n";
constexpr const char* kRuleAmalgamate =
    "g(S) = sum g(S_i) - sum g(R_e) + 1 - chi(Gamma)";
constexpr const char* kRulePathwidth = "pw <= 4g - 2, clamped to 0 for g = 0";
constexpr const char* kRuleGenusFromTw = "g <= 18 * (tw + 1)";
constexpr const char* kRuleSupplied = "user-supplied upper bound";
constexpr const char* kRuleFinal = "minimum over the available routes";

void check_inputs(const BoundInputs& b) {
  if (b.volume < 0.0) throw DomainError("volume must be nonnegative");
  if (b.budget_constant <= 0.0)
    throw DomainError("budget constant K must be positive");
  if (b.epsilon <= 0.0 || b.epsilon > kMargulisUpper)
    throw DomainError("epsilon must lie in (0, " +
                      std::to_string(kMargulisUpper) + "]");
  for (const auto& opt : {b.thick_genus, b.m_thin, b.heegaard_genus,
                          b.treewidth_ub, b.pathwidth_ub})
    if (opt && *opt < 0) throw DomainError("optional bounds must be >= 0");
}

int tetrahedron_budget(double k, double volume) {
  return static_cast<int>(std::ceil(k * volume));
}

int chain_amalgamated_genus(int thick_genus, int m_thin) {
  return amalgamate(thick_thin_splitting(thick_genus, m_thin))
      .amalgamated_genus;
}

double step_input(const BoundStep& s, const std::string& name) {
  for (const auto& [key, value] : s.inputs)
    if (key == name) return value;
  throw DomainError("step " + s.step + " records no input named " + name);
}

}  // namespace

WidthCertificate manifold_width_upper_bound(const Triangulation& t,
                                            WidthParameter parameter) {
  Multigraph g = dual_graph(t);
  try {
    return parameter == WidthParameter::Treewidth ? exact_treewidth(g)
                                                  : exact_pathwidth(g);
  } catch (const CutoffExceeded&) {
    return heuristic_width(g, parameter, Strategy::MinFill);
  }
}

int pathwidth_from_genus(int genus) {
  if (genus < 0) throw DomainError("genus must be nonnegative");
  return genus == 0 ? 0 : 4 * genus - 2;
}

int genus_lower_bound_from_treewidth(int treewidth) {
  if (treewidth < 0) throw DomainError("treewidth must be nonnegative");
  return 18 * (treewidth + 1);
}

BoundChainReport bound_chain(const BoundInputs& b) {
  check_inputs(b);
  BoundChainReport r;
  r.degenerate = b.volume == 0.0;
  auto add = [&](const char* step, const char* rule,
                 std::vector<std::pair<std::string, double>> inputs,
                 double output) {
    r.steps.push_back(
        BoundStep{step, rule, std::move(inputs), output});
  };

  r.tetrahedron_budget = tetrahedron_budget(b.budget_constant, b.volume);
  add("tetrahedron_budget", kRuleBudget,
      {{"budget_constant", b.budget_constant}, {"volume", b.volume}},
      r.tetrahedron_budget);

  if (b.thick_genus) {
    r.thick_genus = *b.thick_genus;
    add("thick_genus", kRuleSupplied,
        {{"thick_genus_supplied", double(*b.thick_genus)}}, r.thick_genus);
  } else {
    r.thick_genus = r.degenerate ? 0 : r.tetrahedron_budget + 1;
    add("thick_genus", kRuleThickGenus,
        {{"tetrahedron_budget", double(r.tetrahedron_budget)}}, r.thick_genus);
  }

  if (b.m_thin) {
    r.m_thin = *b.m_thin;
    add("m_thin", kRuleSupplied,
        {{"m_thin_supplied", double(*b.m_thin)}}, r.m_thin);
  } else {
    r.m_thin = r.degenerate ? 0 : r.tetrahedron_budget;
    add("m_thin", kRuleThinCount,
        {{"tetrahedron_budget", double(r.tetrahedron_budget)}}, r.m_thin);
  }

  r.amalgamated_genus = chain_amalgamated_genus(r.thick_genus, r.m_thin);
  add("amalgamated_genus", kRuleAmalgamate,
      {{"thick_genus", double(r.thick_genus)}, {"m_thin", double(r.m_thin)}},
      r.amalgamated_genus);

  int chain_pw = pathwidth_from_genus(r.amalgamated_genus);
  if (r.amalgamated_genus == 0) r.degenerate = true;
  add("pathwidth_from_genus", kRulePathwidth,
      {{"genus", double(r.amalgamated_genus)}}, chain_pw);

  std::vector<std::pair<std::string, double>> routes = {
      {"chain", double(chain_pw)}};

  if (b.heegaard_genus) {
    int pw = pathwidth_from_genus(*b.heegaard_genus);
    if (*b.heegaard_genus == 0) r.degenerate = true;
    add("pathwidth_from_heegaard_genus", kRulePathwidth,
        {{"heegaard_genus", double(*b.heegaard_genus)}}, pw);
    routes.emplace_back("heegaard_genus", double(pw));
  }
  if (b.treewidth_ub) {
    int genus = genus_lower_bound_from_treewidth(*b.treewidth_ub);
    add("genus_from_treewidth", kRuleGenusFromTw,
        {{"treewidth_ub", double(*b.treewidth_ub)}}, genus);
    int pw = pathwidth_from_genus(genus);
    add("pathwidth_from_treewidth_genus", kRulePathwidth,
        {{"genus", double(genus)}}, pw);
    routes.emplace_back("treewidth_ub", double(pw));
  }
  if (b.pathwidth_ub) {
    add("pathwidth_supplied", kRuleSupplied,
        {{"pathwidth_ub", double(*b.pathwidth_ub)}}, *b.pathwidth_ub);
    routes.emplace_back("pathwidth_ub", double(*b.pathwidth_ub));
  }

  double best = routes.front().second;
  for (const auto& [name, value] : routes) best = std::min(best, value);
  r.pathwidth_bound = static_cast<int>(best);
  add("final_pathwidth_bound", kRuleFinal, routes, r.pathwidth_bound);

  if (b.volume > 0.0) {
    r.c_prime = r.pathwidth_bound / b.volume;
    r.c = r.c_prime;
    r.c_double_prime = r.amalgamated_genus / b.volume;
  }
  return r;
}

bool reverify(const BoundChainReport& r) {
  double volume = 0.0;
  bool saw_budget = false;
  for (const BoundStep& s : r.steps) {
    double expect;
    if (s.step == "tetrahedron_budget") {
      volume = step_input(s, "volume");
      saw_budget = true;
      expect = tetrahedron_budget(step_input(s, "budget_constant"), volume);
    } else if (s.step == "thick_genus") {
      if (!s.inputs.empty() && s.inputs.front().first == "thick_genus_supplied")
        expect = step_input(s, "thick_genus_supplied");
      else
        expect = r.degenerate && r.thick_genus == 0
                     ? 0
                     : step_input(s, "tetrahedron_budget") + 1;
    } else if (s.step == "m_thin") {
      if (!s.inputs.empty() && s.inputs.front().first == "m_thin_supplied")
        expect = step_input(s, "m_thin_supplied");
      else
        expect = r.degenerate && r.m_thin == 0
                     ? 0
                     : step_input(s, "tetrahedron_budget");
    } else if (s.step == "amalgamated_genus") {
      expect = chain_amalgamated_genus(
          static_cast<int>(step_input(s, "thick_genus")),
          static_cast<int>(step_input(s, "m_thin")));
    } else if (s.step == "pathwidth_from_genus" ||
               s.step == "pathwidth_from_treewidth_genus") {
      expect = pathwidth_from_genus(static_cast<int>(step_input(s, "genus")));
    } else if (s.step == "pathwidth_from_heegaard_genus") {
      expect = pathwidth_from_genus(
          static_cast<int>(step_input(s, "heegaard_genus")));
    } else if (s.step == "genus_from_treewidth") {
      expect = genus_lower_bound_from_treewidth(
          static_cast<int>(step_input(s, "treewidth_ub")));
    } else if (s.step == "pathwidth_supplied") {
      expect = step_input(s, "pathwidth_ub");
    } else if (s.step == "final_pathwidth_bound") {
      expect = s.inputs.empty() ? 0.0 : s.inputs.front().second;
      for (const auto& [name, value] : s.inputs)
        expect = std::min(expect, value);
    } else {
      return false;
    }
    if (s.output != expect) return false;
  }
  if (!saw_budget) return false;

  if (r.steps.back().step != "final_pathwidth_bound" ||
      r.pathwidth_bound != static_cast<int>(r.steps.back().output))
    return false;
  if (volume > 0.0) {
    if (r.c_prime != r.pathwidth_bound / volume || r.c != r.c_prime ||
        r.c_double_prime != r.amalgamated_genus / volume)
      return false;
  } else if (r.c != 0.0 || r.c_prime != 0.0 || r.c_double_prime != 0.0) {
    return false;
  }
  return true;
}

}  // namespace topo
