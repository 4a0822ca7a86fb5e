// Command line front end. Every subcommand prints JSON on stdout by
// default; --table switches to an aligned human-readable rendering.
// Exit codes: 0 success, 1 domain or input errors, 2 usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
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

using nlohmann::json;

struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw topo::DomainError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// ===== table rendering =====

bool use_color() { return std::getenv("NO_COLOR") == nullptr; }

std::string bold(const std::string& s) {
  return use_color() ? "\033[1m" + s + "\033[0m" : s;
}

void print_rows(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows)
    std::cout << "  " << k << std::string(width - k.size() + 2, ' ') << v
              << "\n";
}

std::string num(double v) {
  if (v == static_cast<long long>(v))
    return std::to_string(static_cast<long long>(v));
  std::ostringstream out;
  out << v;
  return out.str();
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

// ===== validate =====

void run_validate(const std::string& path, bool table) {
  topo::SkeletonReport r =
      topo::analyze_skeleton(topo::parse_triangulation(read_file(path)));
  if (!table) {
    std::cout << topo::to_json_string(r);
    return;
  }
  std::cout << bold("skeleton report") << "\n";
  int spheres = 0, disks = 0, other = 0;
  for (topo::LinkType t : r.vertex_link_types) {
    if (t == topo::LinkType::Sphere) ++spheres;
    else if (t == topo::LinkType::Disk) ++disks;
    else ++other;
  }
  std::vector<std::pair<std::string, std::string>> rows = {
      {"vertex classes", std::to_string(r.vertex_classes)},
      {"edge classes", std::to_string(r.edge_classes)},
      {"triangle classes", std::to_string(r.triangle_classes)},
      {"euler characteristic", std::to_string(r.euler_characteristic)},
      {"vertex links", std::to_string(spheres) + " sphere, " +
                           std::to_string(disks) + " disk, " +
                           std::to_string(other) + " other"},
      {"reversed edge", r.has_reversed_edge ? "yes" : "no"},
      {"orientable", r.orientable ? "yes" : "no"},
  };
  for (const topo::BoundaryComponent& c : r.boundary_components)
    rows.emplace_back("boundary component " + std::to_string(c.component),
                      "genus " + std::to_string(c.genus) + ", " +
                          std::to_string(c.triangles) + " triangles");
  print_rows(rows);
}

// ===== dual =====

void run_dual(const std::string& path, bool dot, bool table) {
  topo::Multigraph g =
      topo::dual_graph(topo::parse_triangulation(read_file(path)));
  if (dot) {
    std::cout << topo::to_dot(g);
  } else if (table) {
    std::cout << bold("dual graph") << "\n";
    print_rows({{"nodes", std::to_string(g.n_nodes())},
                {"arcs", std::to_string(g.n_arcs())},
                {"loops", g.has_loops() ? "yes" : "no"},
                {"parallel arcs", g.has_parallel_arcs() ? "yes" : "no"},
                {"connected", g.is_connected() ? "yes" : "no"}});
  } else {
    std::cout << topo::to_json_string(g);
  }
}

// ===== subdivide =====

void run_subdivide(const std::string& path, bool isolate) {
  topo::Triangulation t = topo::parse_triangulation(read_file(path));
  topo::Triangulation out = isolate ? topo::boundary_isolation_subdivision(t)
                                    : topo::barycentric_subdivision(t);
  std::cout << topo::serialize_triangulation(out);
}

// ===== widths =====

topo::Multigraph load_graph(const std::string& path) {
  std::string text = read_file(path);
  if (ends_with(path, ".tri"))
    return topo::dual_graph(topo::parse_triangulation(text));
  if (ends_with(path, ".gr")) return topo::parse_gr(text);
  // No recognized extension: sniff the header.
  std::istringstream in(text);
  std::string tok;
  in >> tok;
  if (tok == "tets")
    return topo::dual_graph(topo::parse_triangulation(text));
  return topo::parse_gr(text);
}

void run_widths(const std::string& path, const std::string& param,
                int cutoff, const std::string& strategy, bool nice,
                std::optional<int> seed, bool table) {
  topo::Multigraph g = load_graph(path);
  topo::WidthParameter parameter = param == "treewidth"
                                       ? topo::WidthParameter::Treewidth
                                       : topo::WidthParameter::Pathwidth;
  topo::WidthCertificate cert;
  if (!strategy.empty()) {
    topo::Strategy s = strategy == "min_degree" ? topo::Strategy::MinDegree
                                                : topo::Strategy::MinFill;
    cert = topo::heuristic_width(g, parameter, s);
  } else {
    topo::ExactOptions options;
    options.cutoff = cutoff;
    cert = parameter == topo::WidthParameter::Treewidth
               ? topo::exact_treewidth(g, options)
               : topo::exact_pathwidth(g, options);
  }

  json out;
  out["certificate"] = json::parse(topo::to_json_string(cert));
  std::optional<topo::NiceTreeDecomposition> nd;
  if (nice) {
    nd = topo::to_nice(cert.decomposition);
    out["join_bags"] = topo::count_join_bags(*nd);
    out["nice"] = json::parse(topo::to_json_string(*nd));
  }
  if (seed) out["seed"] = *seed;

  if (!table) {
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << bold("width certificate") << "\n";
  std::vector<std::pair<std::string, std::string>> rows = {
      {"parameter", cert.parameter},
      {"value", std::to_string(cert.value)},
      {"exact", cert.exact ? "yes" : "no"},
      {"bags", std::to_string(cert.decomposition.bags.size())},
  };
  if (nd) {
    rows.emplace_back("nice bags", std::to_string(nd->n_bags()));
    rows.emplace_back("join bags", std::to_string(topo::count_join_bags(*nd)));
  }
  if (seed) rows.emplace_back("seed", std::to_string(*seed));
  print_rows(rows);
}

// ===== splitting =====

topo::BoundaryPartition parse_partition(const std::string& text,
                                        int n_components) {
  auto colon = text.find(':');
  if (colon == std::string::npos || text.find(':', colon + 1) != std::string::npos)
    throw UsageError{"--partition expects <ids>:<ids>"};
  auto parse_ids = [](const std::string& half) {
    std::vector<int> ids;
    std::istringstream in(half);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) continue;
      try {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        ids.push_back(v);
      } catch (const std::exception&) {
        throw UsageError{"--partition: '" + item + "' is not a component id"};
      }
    }
    return ids;
  };
  topo::BoundaryPartition p;
  p.lower = parse_ids(text.substr(0, colon));
  p.upper = parse_ids(text.substr(colon + 1));
  (void)n_components;
  return p;
}

void run_splitting(const std::string& path, const std::string& partition_text,
                   bool table) {
  topo::Triangulation t = topo::parse_triangulation(read_file(path));
  topo::SkeletonReport report = topo::analyze_skeleton(t);
  int n_components = static_cast<int>(report.boundary_components.size());

  topo::TriangulationSplitting s;
  topo::BoundaryPartition partition;
  if (!partition_text.empty()) {
    partition = parse_partition(partition_text, n_components);
    s = topo::splitting_from_boundary_triangulation(t, partition);
  } else if (n_components == 0) {
    s = topo::splitting_from_closed_triangulation(t);
  } else {
    for (int c = 0; c < n_components; ++c) partition.upper.push_back(c);
    s = topo::splitting_from_boundary_triangulation(t, partition);
  }

  if (!table) {
    json out;
    out["complex"] = json::parse(topo::to_json_string(s.complex));
    out["genus"] = s.genus;
    out["partition"] =
        json{{"lower", partition.lower}, {"upper", partition.upper}};
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << bold("heegaard splitting") << "\n";
  std::vector<std::pair<std::string, std::string>> rows = {
      {"genus", std::to_string(s.genus)},
      {"lower components", join_ints(partition.lower).empty()
                               ? "none"
                               : join_ints(partition.lower)},
      {"upper components", join_ints(partition.upper).empty()
                               ? "none"
                               : join_ints(partition.upper)},
  };
  for (const topo::Fork& f : s.complex.forks)
    rows.emplace_back(
        "fork " + std::to_string(f.id),
        "grip genus " + std::to_string(f.grip_genus) + ", tines [" +
            join_ints(f.tine_genera) + "]");
  print_rows(rows);
}

// ===== amalgamate =====

void run_amalgamate(const std::string& path, bool table) {
  topo::GeneralizedSplitting gs =
      topo::generalized_splitting_from_json(read_file(path));
  topo::GenusLedger ledger = topo::amalgamate(gs);
  if (!table) {
    std::cout << topo::to_json_string(ledger);
    return;
  }
  std::cout << bold("amalgamation ledger") << "\n";
  print_rows({
      {"sum of splitting genera", std::to_string(ledger.sum_splitting_genera)},
      {"sum of gluing genera", std::to_string(ledger.sum_gluing_genera)},
      {"euler characteristic of dual", std::to_string(ledger.euler_char_dual)},
      {"amalgamated genus", std::to_string(ledger.amalgamated_genus)},
  });
}

// ===== bounds =====

void run_bounds(const topo::BoundInputs& inputs, bool table) {
  topo::BoundChainReport r = topo::bound_chain(inputs);
  if (!table) {
    std::cout << topo::to_json_string(r);
    return;
  }
  std::cout << bold("bound chain") << "\n";
  std::size_t step_w = 4, out_w = 6;
  std::vector<std::array<std::string, 3>> lines;
  for (const topo::BoundStep& s : r.steps) {
    std::string in;
    for (const auto& [k, v] : s.inputs) {
      if (!in.empty()) in += ", ";
      in += k + "=" + num(v);
    }
    lines.push_back({s.step, num(s.output), s.rule + "  [" + in + "]"});
    step_w = std::max(step_w, s.step.size());
    out_w = std::max(out_w, lines.back()[1].size());
  }
  std::cout << "  " << bold("step") << std::string(step_w - 4 + 2, ' ')
            << bold("output") << std::string(out_w > 6 ? out_w - 6 + 2 : 2, ' ')
            << bold("rule") << "\n";
  for (const auto& l : lines)
    std::cout << "  " << l[0] << std::string(step_w - l[0].size() + 2, ' ')
              << l[1] << std::string(out_w - l[1].size() + 2, ' ') << l[2]
              << "\n";
  print_rows({
      {"pathwidth bound", std::to_string(r.pathwidth_bound)},
      {"effective C", num(r.c)},
      {"effective C'", num(r.c_prime)},
      {"effective C''", num(r.c_double_prime)},
      {"degenerate", r.degenerate ? "yes" : "no"},
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-manifold triangulation, width, and splitting toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool table = false;
  app.add_flag("--table", table, "aligned human-readable output");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "analyze a triangulation");
  validate->add_option("file", validate_path, "triangulation (.tri)")
      ->required();

  std::string dual_path;
  bool dual_dot = false;
  auto* dual = app.add_subcommand("dual", "dual graph of a triangulation");
  dual->add_option("file", dual_path, "triangulation (.tri)")->required();
  dual->add_flag("--dot", dual_dot, "Graphviz output");

  std::string subdivide_path;
  bool isolate = false;
  auto* subdivide =
      app.add_subcommand("subdivide", "barycentric subdivision");
  subdivide->add_option("file", subdivide_path, "triangulation (.tri)")
      ->required();
  subdivide->add_flag("--isolate-boundary", isolate,
                      "subdivide until boundary components are isolated");

  std::string widths_path, widths_param, widths_strategy;
  int widths_cutoff = 20;
  bool widths_nice = false;
  std::optional<int> widths_seed;
  auto* widths = app.add_subcommand("widths", "treewidth / pathwidth");
  widths->add_option("file", widths_path, "graph (.gr) or triangulation (.tri)")
      ->required();
  widths->add_option("--param", widths_param, "width parameter")
      ->required()
      ->check(CLI::IsMember({"treewidth", "pathwidth"}));
  widths->add_option("--exact-cutoff", widths_cutoff,
                     "node limit for the exact solver");
  widths->add_option("--strategy", widths_strategy,
                     "greedy heuristic instead of the exact solver")
      ->check(CLI::IsMember({"min_degree", "min_fill"}));
  widths->add_flag("--nice", widths_nice, "also emit a nice decomposition");
  widths->add_option("--seed", widths_seed,
                     "recorded for randomized strategies");

  std::string splitting_path, partition_text;
  auto* splitting =
      app.add_subcommand("splitting", "Heegaard splitting from a triangulation");
  splitting->add_option("file", splitting_path, "triangulation (.tri)")
      ->required();
  splitting->add_option("--partition", partition_text,
                        "boundary components as <lower ids>:<upper ids>");

  std::string amalgamate_path;
  auto* amalgamate =
      app.add_subcommand("amalgamate", "amalgamate a generalized splitting");
  amalgamate->add_option("file", amalgamate_path, "splitting (.json)")
      ->required();

  topo::BoundInputs bound_inputs;
  std::optional<int> bounds_thick, bounds_m;
  auto* bounds = app.add_subcommand("bounds", "volume-to-pathwidth chain");
  bounds->add_option("--volume", bound_inputs.volume, "hyperbolic volume")
      ->required();
  bounds->add_option("--K", bound_inputs.budget_constant,
                     "tetrahedron budget constant")
      ->required();
  bounds->add_option("--thick-genus", bounds_thick,
                     "known thick-part splitting genus");
  bounds->add_option("--m-thin", bounds_m, "known number of thin pieces");

  try {
    app.parse(argc, argv);
    if (*validate) run_validate(validate_path, table);
    else if (*dual) run_dual(dual_path, dual_dot, table);
    else if (*subdivide) run_subdivide(subdivide_path, isolate);
    else if (*widths)
      run_widths(widths_path, widths_param, widths_cutoff, widths_strategy,
                 widths_nice, widths_seed, table);
    else if (*splitting) run_splitting(splitting_path, partition_text, table);
    else if (*amalgamate) run_amalgamate(amalgamate_path, table);
    else if (*bounds) {
      bound_inputs.thick_genus = bounds_thick;
      bound_inputs.m_thin = bounds_m;
      run_bounds(bound_inputs, table);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << "\n";
    return 2;
  } catch (const topo::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const topo::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
