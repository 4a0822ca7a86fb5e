#include "topo/fork_complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace topo {

Fork handlebody_fork(int id, int genus) {
  Fork f;
  f.id = id;
  f.grip_genus = genus;
  return f;
}

std::vector<int> ForkComplex::unpaired_grips() const {
  std::vector<char> paired(forks.size(), 0);
  for (const auto& [a, b] : grip_pairings) {
    if (a >= 0 && a < static_cast<int>(forks.size())) paired[a] = 1;
    if (b >= 0 && b < static_cast<int>(forks.size())) paired[b] = 1;
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < forks.size(); ++i)
    if (!paired[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<TineRef> ForkComplex::unpaired_tines() const {
  std::vector<TineRef> out;
  for (std::size_t i = 0; i < forks.size(); ++i)
    for (std::size_t t = 0; t < forks[i].tine_genera.size(); ++t) {
      TineRef ref{static_cast<int>(i), static_cast<int>(t)};
      bool paired = false;
      for (const auto& [a, b] : tine_pairings)
        if (a == ref || b == ref) {
          paired = true;
          break;
        }
      if (!paired) out.push_back(ref);
    }
  return out;
}

ValidationResult validate_fork(const Fork& f) {
  ValidationResult res;
  std::string at = "fork " + std::to_string(f.id);
  if (f.n_tines != static_cast<int>(f.tine_genera.size()))
    res.fail(at + ": claims " + std::to_string(f.n_tines) + " tines but lists " +
             std::to_string(f.tine_genera.size()) + " genera");
  if (f.grip_genus < 0) res.fail(at + ": negative grip genus");
  for (int g : f.tine_genera)
    if (g < 0) res.fail(at + ": negative tine genus");
  if (!f.tine_genera.empty()) {
    int bound = std::accumulate(f.tine_genera.begin(), f.tine_genera.end(), 0) -
                static_cast<int>(f.tine_genera.size()) + 1;
    if (f.grip_genus < bound)
      res.fail(at + ": grip genus " + std::to_string(f.grip_genus) +
               " below the compression-body bound " + std::to_string(bound));
  }
  return res;
}

ValidationResult validate_fork_complex(const ForkComplex& fc) {
  ValidationResult res;
  const int n = static_cast<int>(fc.forks.size());

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (fc.forks[i].id == fc.forks[j].id)
        res.fail("duplicate fork id " + std::to_string(fc.forks[i].id));

  for (const Fork& f : fc.forks) {
    ValidationResult one = validate_fork(f);
    for (const auto& v : one.violations) res.fail(v);
  }

  std::vector<int> grip_uses(n, 0);
  for (const auto& [a, b] : fc.grip_pairings) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      res.fail("grip pairing references a fork outside the complex");
      continue;
    }
    if (a == b) {
      res.fail("grip of fork " + std::to_string(fc.forks[a].id) +
               " paired with itself");
      continue;
    }
    ++grip_uses[a];
    ++grip_uses[b];
    if (fc.forks[a].grip_genus != fc.forks[b].grip_genus)
      res.fail("grips of forks " + std::to_string(fc.forks[a].id) + " and " +
               std::to_string(fc.forks[b].id) + " paired with unequal genera " +
               std::to_string(fc.forks[a].grip_genus) + " vs " +
               std::to_string(fc.forks[b].grip_genus));
  }
  for (int i = 0; i < n; ++i)
    if (grip_uses[i] > 1)
      res.fail("grip of fork " + std::to_string(fc.forks[i].id) +
               " appears in " + std::to_string(grip_uses[i]) + " pairings");

  auto tine_ok = [&](const TineRef& r) {
    return r.fork >= 0 && r.fork < n && r.tine >= 0 &&
           r.tine < static_cast<int>(fc.forks[r.fork].tine_genera.size());
  };
  auto tine_name = [&](const TineRef& r) {
    return "tine " + std::to_string(r.tine) + " of fork " +
           std::to_string(fc.forks[r.fork].id);
  };
  std::vector<std::vector<int>> tine_uses(n);
  for (int i = 0; i < n; ++i)
    tine_uses[i].assign(fc.forks[i].tine_genera.size(), 0);
  for (const auto& [a, b] : fc.tine_pairings) {
    if (!tine_ok(a) || !tine_ok(b)) {
      res.fail("tine pairing references a tine outside the complex");
      continue;
    }
    if (a == b) {
      res.fail(tine_name(a) + " paired with itself");
      continue;
    }
    ++tine_uses[a.fork][a.tine];
    ++tine_uses[b.fork][b.tine];
    if (fc.forks[a.fork].tine_genera[a.tine] !=
        fc.forks[b.fork].tine_genera[b.tine])
      res.fail(tine_name(a) + " and " + tine_name(b) +
               " paired with unequal genera");
  }
  for (int i = 0; i < n; ++i)
    for (std::size_t t = 0; t < tine_uses[i].size(); ++t)
      if (tine_uses[i][t] > 1)
        res.fail("tine " + std::to_string(t) + " of fork " +
                 std::to_string(fc.forks[i].id) + " appears in " +
                 std::to_string(tine_uses[i][t]) + " pairings");

  return res;
}

std::string to_dot(const ForkComplex& fc) {
  std::ostringstream out;
  out << "graph fork_complex {\n";
  for (std::size_t i = 0; i < fc.forks.size(); ++i) {
    const Fork& f = fc.forks[i];
    out << "  root" << i << " [shape=circle, label=\"" << f.id << "\"];\n";
    out << "  grip" << i << " [shape=square, label=\"g=" << f.grip_genus
        << "\"];\n";
    out << "  root" << i << " -- grip" << i << ";\n";
    for (std::size_t t = 0; t < f.tine_genera.size(); ++t) {
      out << "  tine" << i << "_" << t << " [shape=triangle, label=\"g="
          << f.tine_genera[t] << "\"];\n";
      out << "  root" << i << " -- tine" << i << "_" << t << ";\n";
    }
  }
  for (const auto& [a, b] : fc.grip_pairings)
    out << "  grip" << a << " -- grip" << b << " [style=dashed];\n";
  for (const auto& [a, b] : fc.tine_pairings)
    out << "  tine" << a.fork << "_" << a.tine << " -- tine" << b.fork << "_"
        << b.tine << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace topo
