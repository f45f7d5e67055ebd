#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "fockzip/errors.hpp"
#include "fockzip/fock.hpp"
#include "fockzip/source.hpp"

namespace fockzip {

// Normalized state of n letters of dimension d, stored as d^n amplitudes in
// the letter (computational) product basis. The first letter is the most
// significant base-d digit of the amplitude index.
class MessageState {
public:
  MessageState(int dimension, int letter_count, Eigen::VectorXcd amplitudes);

  static MessageState basis(int dimension, const IndexSequence& letters);
  static MessageState random(int dimension, int letter_count, std::mt19937_64& rng);

  int dimension() const noexcept { return dimension_; }
  int letter_count() const noexcept { return letter_count_; }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  Complex amplitude(const IndexSequence& letters) const;

  static std::uint64_t pack_index(int dimension, const IndexSequence& letters);
  static IndexSequence unpack_index(int dimension, int letter_count, std::uint64_t index);

private:
  int dimension_ = 0;
  int letter_count_ = 0;
  Eigen::VectorXcd amplitudes_;
};

Complex inner_product(const MessageState& a, const MessageState& b);
double fidelity(const MessageState& a, const MessageState& b);

// Applies the per-letter matrix U to every letter slot: U tensor ... tensor U.
Eigen::VectorXcd apply_per_letter(const Eigen::MatrixXcd& u,
                                  const Eigen::VectorXcd& amplitudes,
                                  int dimension, int letter_count);

// |r_{s_1}> ... |r_{s_n}| as a letter-basis message.
MessageState eigenbasis_sequence_state(const EigenDecomposition& eig,
                                       const IndexSequence& indices);

// Message whose eigenbasis-sequence amplitudes are given (indexed like
// MessageState::pack_index over eigenvector labels).
MessageState eigenbasis_superposition(const EigenDecomposition& eig, int letter_count,
                                      const Eigen::VectorXcd& eigen_amplitudes);

}  // namespace fockzip
