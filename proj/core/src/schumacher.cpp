#include "fockzip/schumacher.hpp"

#include <cmath>

namespace fockzip {

TypicalSet typical_set(const EigenDecomposition& eig, int letter_count, double epsilon,
                       std::uint64_t enumeration_cap) {
  if (letter_count < 1) {
    throw DomainError("letter count must be >= 1");
  }
  if (!(epsilon > 0.0)) {
    throw DomainError("epsilon must be positive");
  }
  const int dim = eig.dimension();
  const std::uint64_t total = sequence_space_size(dim, letter_count, enumeration_cap);
  const std::vector<double> values = eig.eigenvalues();

  TypicalSet ts;
  ts.letter_count = letter_count;
  ts.epsilon = epsilon;
  ts.letter_entropy = shannon_entropy(values);

  IndexSequence indices(static_cast<std::size_t>(letter_count), 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    const double p = sequence_probability(values, indices);
    // Zero-probability sequences have infinite log-rate and are never typical.
    if (p > 0.0) {
      const double rate = -std::log2(p) / letter_count;
      if (std::abs(rate - ts.letter_entropy) <= epsilon) {
        ts.members.push_back(indices);
        ts.total_probability += p;
      }
    }
    for (int pos = letter_count - 1; pos >= 0; --pos) {
      auto& digit = indices[static_cast<std::size_t>(pos)];
      if (++digit < dim) {
        break;
      }
      digit = 0;
    }
  }
  return ts;
}

double projection_fidelity(const TypicalSet& ts) {
  return ts.total_probability;
}

double schumacher_rate(const TypicalSet& ts) {
  if (ts.members.empty()) {
    throw DomainError("typical set is empty; the rate is undefined");
  }
  return std::log2(static_cast<double>(ts.members.size())) / ts.letter_count;
}

}  // namespace fockzip
