#pragma once

#include "topo/exact_width.hpp"
#include "topo/multigraph.hpp"

namespace topo {

enum class WidthParameter { Treewidth, Pathwidth };
enum class Strategy { MinDegree, MinFill };

std::string width_parameter_name(WidthParameter p);
std::string strategy_name(Strategy s);

// Greedy elimination upper bounds. Vertices leave in order of current degree
// or fill-in count, ties broken toward the lowest index; the order doubles
// as a vertex layout for pathwidth. Always returns a valid decomposition,
// so the reported value can only overshoot the true width.
WidthCertificate heuristic_width(const Multigraph& g, WidthParameter parameter,
                                 Strategy strategy);

}  // namespace topo
