#pragma once

#include <string>
#include <utility>
#include <vector>

#include "topo/validation.hpp"

namespace topo {

// An n-fork models a connected compression body: the grip is its upper
// boundary surface, the tines are the lower boundary components. n_tines is
// stored separately so malformed encodings (wrong tine count for the claimed
// tree shape) are representable and rejected by the validator.
struct Fork {
  int id = 0;
  int n_tines = 0;
  int grip_genus = 0;
  std::vector<int> tine_genera;

  bool operator==(const Fork&) const = default;
};

Fork handlebody_fork(int id, int genus);

// Locates one tine: fork index into ForkComplex::forks, tine index into that
// fork's tine_genera.
struct TineRef {
  int fork = 0;
  int tine = 0;

  bool operator==(const TineRef&) const = default;
};

// Forks glued along grips and tines. Each grip or tine sits in at most one
// pairing and paired surfaces must have equal genus; whatever stays unpaired
// is the boundary of the complex.
struct ForkComplex {
  std::vector<Fork> forks;
  std::vector<std::pair<int, int>> grip_pairings;  // fork indices
  std::vector<std::pair<TineRef, TineRef>> tine_pairings;

  std::vector<int> unpaired_grips() const;
  std::vector<TineRef> unpaired_tines() const;
};

// Per-fork shape and genus invariants plus the matching rules. The fork
// inequality grip >= sum(tines) - n_tines + 1 reflects that joining n
// surfaces into one upper boundary needs n - 1 genus-adding connections.
ValidationResult validate_fork(const Fork& f);
ValidationResult validate_fork_complex(const ForkComplex& fc);

std::string to_dot(const ForkComplex& fc);
std::string to_json_string(const ForkComplex& fc);
ForkComplex fork_complex_from_json(const std::string& text);

}  // namespace topo
