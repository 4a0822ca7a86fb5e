#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topo/exact_width.hpp"
#include "topo/heuristic_width.hpp"
#include "topo/triangulation.hpp"

namespace topo {

// Bracket for the 3-dimensional Margulis constant.
inline constexpr double kMargulisLower = 0.104;
inline constexpr double kMargulisUpper = 0.616;

// Inputs to the inequality chain.  volume and the tetrahedron budget
// constant are supplied by the caller.  thick_genus and m_thin replace the
// budget-derived splitting parameters when the manifold's actual values are
// known; the remaining optionals open shortcut routes to a pathwidth bound.
struct BoundInputs {
  double volume = 0.0;
  double budget_constant = 1.0;
  double epsilon = kMargulisUpper;
  std::optional<int> thick_genus;
  std::optional<int> m_thin;
  std::optional<int> heegaard_genus;
  std::optional<int> treewidth_ub;
  std::optional<int> pathwidth_ub;
};

// One derivation step: a named inequality, the numbers fed into it, and the
// bound it produced.  inputs keeps insertion order for readable reports.
struct BoundStep {
  std::string step;
  std::string rule;
  std::vector<std::pair<std::string, double>> inputs;
  double output = 0.0;
};

struct BoundChainReport {
  std::vector<BoundStep> steps;
  int tetrahedron_budget = 0;
  int thick_genus = 0;
  int m_thin = 0;
  int amalgamated_genus = 0;
  int pathwidth_bound = 0;

  // Effective constants for this run: treewidth and pathwidth per unit
  // volume, and genus per unit volume.  Zero when the volume is zero.
  double c = 0.0;
  double c_prime = 0.0;
  double c_double_prime = 0.0;

  // Set when a clamp fired (zero volume, or a genus-0 shortcut input).
  bool degenerate = false;
};

// Width of the dual graph as an upper-bound witness for the manifold width.
// Falls back to the min-fill heuristic when the exact search cutoff is
// exceeded; the certificate's exact flag records which happened.
WidthCertificate manifold_width_upper_bound(const Triangulation& t,
                                            WidthParameter parameter);

// 4g - 2 for g >= 1, clamped to 0 for g = 0.
int pathwidth_from_genus(int genus);

// 18(tw + 1), the genus bound for closed irreducible non-Haken manifolds.
// The hypothesis is the caller's responsibility.
int genus_lower_bound_from_treewidth(int treewidth);

BoundChainReport bound_chain(const BoundInputs& inputs);

// Recomputes every step of the report from its recorded inputs and checks
// the derived fields; true when everything matches.
bool reverify(const BoundChainReport& report);

std::string to_json_string(const BoundChainReport& report);

}  // namespace topo
