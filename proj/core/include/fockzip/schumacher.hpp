#pragma once

#include <cstdint>
#include <vector>

#include "fockzip/source.hpp"

namespace fockzip {

// Epsilon-typical set of n-letter eigenbasis sequences: members satisfy
// |-(1/n) log2 P(seq) - S| <= epsilon with S the letter entropy.
struct TypicalSet {
  int letter_count = 0;
  double epsilon = 0.0;
  double letter_entropy = 0.0;
  std::vector<IndexSequence> members;  // lexicographic order
  double total_probability = 0.0;

  std::uint64_t dimension() const noexcept { return members.size(); }
};

// Exact enumeration of all d^n sequences.
TypicalSet typical_set(const EigenDecomposition& eig, int letter_count, double epsilon,
                       std::uint64_t enumeration_cap = kDefaultEnumerationCap);

// Success probability of projecting onto the typical subspace — the fidelity
// proxy of the lossy block scheme.
double projection_fidelity(const TypicalSet& ts);

// log2(dimension)/n, qubits per letter. DomainError on an empty set.
double schumacher_rate(const TypicalSet& ts);

}  // namespace fockzip
