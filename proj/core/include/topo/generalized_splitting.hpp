#pragma once

#include <string>
#include <utility>
#include <vector>

#include "topo/fork_complex.hpp"
#include "topo/multigraph.hpp"
#include "topo/validation.hpp"

namespace topo {

// One 3-manifold piece of a decomposition.  Each boundary surface occupies a
// slot; only its genus is tracked.
struct Piece {
  int id = 0;
  std::vector<int> slot_genera;

  bool operator==(const Piece&) const = default;
};

// Addresses one boundary slot of one piece, both by index.
struct SlotRef {
  int piece = 0;
  int slot = 0;

  bool operator==(const SlotRef&) const = default;
};

// A decomposition of a manifold into pieces glued along boundary surfaces.
// Every slot may be glued to at most one other slot, and a slot is never
// glued to itself.
struct Decomposition {
  std::vector<Piece> pieces;
  std::vector<std::pair<SlotRef, SlotRef>> gluings;

  // One node per piece, one arc per gluing.  Parallel arcs appear when two
  // pieces share several boundary surfaces.
  Multigraph dual_graph() const;
};

// Heegaard-style splitting data for a single piece: the two compression-body
// forks, the splitting surface genus, and the partition of the piece's slots
// into the lower (partition_1) and upper (partition_2) boundary.
struct PieceSplitting {
  Fork n_fork;
  Fork k_fork;
  int surface_genus = 0;
  std::vector<int> partition_1;
  std::vector<int> partition_2;
};

// A generalized Heegaard splitting: per-piece splittings plus a total order
// on the pieces.  ordering[i] is the 1-based label of piece i.
struct GeneralizedSplitting {
  Decomposition decomposition;
  std::vector<PieceSplitting> splittings;
  std::vector<int> ordering;
};

// The bookkeeping of one amalgamation.
struct GenusLedger {
  int sum_splitting_genera = 0;
  int sum_gluing_genera = 0;
  int euler_char_dual = 0;
  int amalgamated_genus = 0;
};

ValidationResult validate_generalized(const GeneralizedSplitting& gs);

// Computes the genus of the amalgamated classical splitting.  Throws
// DomainError when validate_generalized fails or the dual graph is not
// connected.
GenusLedger amalgamate(const GeneralizedSplitting& gs);

// The star-shaped decomposition with one thick piece of splitting genus
// thick_genus and m_thin solid-torus pieces glued along tori.  Requires
// thick_genus >= m_thin; amalgamates back to thick_genus.
GeneralizedSplitting thick_thin_splitting(int thick_genus, int m_thin);

std::string to_json_string(const GeneralizedSplitting& gs);
GeneralizedSplitting generalized_splitting_from_json(const std::string& text);
std::string to_json_string(const GenusLedger& ledger);

}  // namespace topo
