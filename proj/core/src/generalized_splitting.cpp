#include "topo/generalized_splitting.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "topo/errors.hpp"

namespace topo {

namespace {

std::string slot_name(const Decomposition& d, const SlotRef& r) {
  return "slot " + std::to_string(r.slot) + " of piece " +
         std::to_string(d.pieces[r.piece].id);
}

bool slot_in_range(const Decomposition& d, const SlotRef& r) {
  return r.piece >= 0 && r.piece < static_cast<int>(d.pieces.size()) &&
         r.slot >= 0 &&
         r.slot < static_cast<int>(d.pieces[r.piece].slot_genera.size());
}

// Checks that the two index lists split 0..n_slots-1 into disjoint halves.
bool exact_partition(const std::vector<int>& part_1,
                     const std::vector<int>& part_2, int n_slots) {
  std::vector<int> seen(n_slots, 0);
  for (const auto* part : {&part_1, &part_2})
    for (int s : *part) {
      if (s < 0 || s >= n_slots) return false;
      ++seen[s];
    }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

std::vector<int> sorted_genera(const Decomposition& d, int piece,
                               const std::vector<int>& slots) {
  std::vector<int> out;
  out.reserve(slots.size());
  for (int s : slots) out.push_back(d.pieces[piece].slot_genera[s]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> sorted_tines(const Fork& f) {
  std::vector<int> out = f.tine_genera;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Multigraph Decomposition::dual_graph() const {
  Multigraph g(static_cast<int>(pieces.size()));
  for (const auto& [a, b] : gluings) g.add_arc(a.piece, b.piece);
  return g;
}

ValidationResult validate_generalized(const GeneralizedSplitting& gs) {
  ValidationResult res;
  const Decomposition& d = gs.decomposition;
  const int n = static_cast<int>(d.pieces.size());

  if (static_cast<int>(gs.splittings.size()) != n)
    res.fail("expected one splitting per piece, got " +
             std::to_string(gs.splittings.size()) + " for " +
             std::to_string(n) + " pieces");
  if (static_cast<int>(gs.ordering.size()) != n)
    res.fail("ordering must assign a label to every piece");
  if (!res.valid) return res;

  std::vector<int> labels = gs.ordering;
  std::sort(labels.begin(), labels.end());
  for (int i = 0; i < n; ++i)
    if (labels[i] != i + 1) {
      res.fail("ordering is not a bijection onto 1.." + std::to_string(n));
      break;
    }

  std::vector<std::vector<int>> slot_uses(n);
  for (int i = 0; i < n; ++i)
    slot_uses[i].assign(d.pieces[i].slot_genera.size(), 0);
  for (const auto& [a, b] : d.gluings) {
    if (!slot_in_range(d, a) || !slot_in_range(d, b)) {
      res.fail("gluing references a slot outside the decomposition");
      continue;
    }
    if (a == b) {
      res.fail(slot_name(d, a) + " glued to itself");
      continue;
    }
    ++slot_uses[a.piece][a.slot];
    ++slot_uses[b.piece][b.slot];
    if (d.pieces[a.piece].slot_genera[a.slot] !=
        d.pieces[b.piece].slot_genera[b.slot])
      res.fail(slot_name(d, a) + " and " + slot_name(d, b) +
               " glued with unequal genera");
  }
  for (int i = 0; i < n; ++i)
    for (std::size_t s = 0; s < slot_uses[i].size(); ++s)
      if (slot_uses[i][s] > 1)
        res.fail("slot " + std::to_string(s) + " of piece " +
                 std::to_string(d.pieces[i].id) + " appears in " +
                 std::to_string(slot_uses[i][s]) + " gluings");
  if (!res.valid) return res;

  for (int i = 0; i < n; ++i) {
    const PieceSplitting& ps = gs.splittings[i];
    const int n_slots = static_cast<int>(d.pieces[i].slot_genera.size());
    std::string at = "piece " + std::to_string(d.pieces[i].id);

    if (!exact_partition(ps.partition_1, ps.partition_2, n_slots)) {
      res.fail(at + ": boundary partition does not cover each slot once");
      continue;
    }

    for (const Fork* f : {&ps.n_fork, &ps.k_fork}) {
      ValidationResult fr = validate_fork(*f);
      for (const auto& v : fr.violations) res.fail(at + ": " + v);
    }

    if (ps.n_fork.grip_genus != ps.surface_genus ||
        ps.k_fork.grip_genus != ps.surface_genus)
      res.fail(at + ": fork grips " + std::to_string(ps.n_fork.grip_genus) +
               ", " + std::to_string(ps.k_fork.grip_genus) +
               " disagree with surface genus " +
               std::to_string(ps.surface_genus));

    // The tine multisets of the two forks must realize the two halves of the
    // boundary partition, in one assignment or the other.
    std::vector<int> tines_n = sorted_tines(ps.n_fork);
    std::vector<int> tines_k = sorted_tines(ps.k_fork);
    std::vector<int> side_1 = sorted_genera(d, i, ps.partition_1);
    std::vector<int> side_2 = sorted_genera(d, i, ps.partition_2);
    bool direct = tines_n == side_1 && tines_k == side_2;
    bool swapped = tines_n == side_2 && tines_k == side_1;
    if (!direct && !swapped)
      res.fail(at + ": fork tine genera do not match the boundary partition");
  }
  if (!res.valid) return res;

  // Compatibility with the ordering: a slot glued toward an earlier piece
  // belongs to the lower boundary, toward a later piece to the upper one.
  auto check_side = [&](const SlotRef& here, const SlotRef& there) {
    int li = gs.ordering[here.piece];
    int lj = gs.ordering[there.piece];
    const PieceSplitting& ps = gs.splittings[here.piece];
    const std::vector<int>& want =
        lj < li ? ps.partition_1 : ps.partition_2;
    if (std::find(want.begin(), want.end(), here.slot) == want.end())
      res.fail("gluing between " + slot_name(d, here) + " and " +
               slot_name(d, there) + " violates the ordering: the slot must " +
               "lie in " + (lj < li ? "partition_1" : "partition_2") +
               " of its piece");
  };
  for (const auto& [a, b] : d.gluings) {
    check_side(a, b);
    check_side(b, a);
  }

  return res;
}

GenusLedger amalgamate(const GeneralizedSplitting& gs) {
  ValidationResult res = validate_generalized(gs);
  if (!res.valid) {
    std::string msg = "cannot amalgamate an invalid splitting:";
    for (const auto& v : res.violations) msg += "\n  " + v;
    throw DomainError(msg);
  }
  Multigraph dual = gs.decomposition.dual_graph();
  if (!dual.is_connected())
    throw DomainError(
        "cannot amalgamate: the dual graph of the decomposition is not "
        "connected");

  GenusLedger ledger;
  for (const PieceSplitting& ps : gs.splittings)
    ledger.sum_splitting_genera += ps.surface_genus;
  for (const auto& [a, b] : gs.decomposition.gluings)
    ledger.sum_gluing_genera +=
        gs.decomposition.pieces[a.piece].slot_genera[a.slot];
  ledger.euler_char_dual = static_cast<int>(gs.decomposition.pieces.size()) -
                           static_cast<int>(gs.decomposition.gluings.size());
  ledger.amalgamated_genus = ledger.sum_splitting_genera -
                             ledger.sum_gluing_genera + 1 -
                             ledger.euler_char_dual;
  return ledger;
}

GeneralizedSplitting thick_thin_splitting(int thick_genus, int m_thin) {
  if (thick_genus < 0) throw DomainError("thick_genus must be nonnegative");
  if (m_thin < 0) throw DomainError("m_thin must be nonnegative");
  if (thick_genus < m_thin)
    throw DomainError("thick piece of genus " + std::to_string(thick_genus) +
                      " cannot carry " + std::to_string(m_thin) +
                      " torus boundary components");

  GeneralizedSplitting gs;

  Piece thick;
  thick.id = 0;
  thick.slot_genera.assign(m_thin, 1);
  gs.decomposition.pieces.push_back(thick);

  PieceSplitting thick_split;
  thick_split.surface_genus = thick_genus;
  thick_split.n_fork = handlebody_fork(0, thick_genus);
  thick_split.k_fork = handlebody_fork(1, thick_genus);
  thick_split.k_fork.n_tines = m_thin;
  thick_split.k_fork.tine_genera.assign(m_thin, 1);
  for (int s = 0; s < m_thin; ++s) thick_split.partition_2.push_back(s);
  gs.splittings.push_back(thick_split);
  gs.ordering.push_back(1);

  for (int i = 1; i <= m_thin; ++i) {
    Piece thin;
    thin.id = i;
    thin.slot_genera = {1};
    gs.decomposition.pieces.push_back(thin);

    PieceSplitting thin_split;
    thin_split.surface_genus = 1;
    thin_split.n_fork = handlebody_fork(2 * i, 1);
    thin_split.k_fork = handlebody_fork(2 * i + 1, 1);
    thin_split.k_fork.n_tines = 1;
    thin_split.k_fork.tine_genera = {1};
    thin_split.partition_1 = {0};
    gs.splittings.push_back(thin_split);
    gs.ordering.push_back(i + 1);

    gs.decomposition.gluings.push_back(
        {SlotRef{0, i - 1}, SlotRef{i, 0}});
  }

  ValidationResult res = validate_generalized(gs);
  if (!res.valid)
    throw DomainError("thick_thin_splitting built an invalid splitting: " +
                      res.violations.front());
  return gs;
}

}  // namespace topo
