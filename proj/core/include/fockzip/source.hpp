#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "fockzip/errors.hpp"

namespace fockzip {

// Eigenvector labels of one n-letter sequence, 0-based (0 = largest eigenvalue).
using IndexSequence = std::vector<std::uint8_t>;

// Default cap on the number of enumerated sequences (d^n).
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 22;

std::uint64_t sequence_space_size(int dimension, int letter_count,
                                  std::uint64_t enumeration_cap);

struct Letter {
  Eigen::VectorXcd amplitudes;
  double probability = 0.0;
};

// Memoryless quantum source: letter states |psi_i> emitted with
// probabilities p_i. All letters share one dimension d (default use: qubits).
class LetterEnsemble {
public:
  explicit LetterEnsemble(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  int dimension() const noexcept { return dimension_; }

private:
  std::vector<Letter> letters_;
  int dimension_ = 0;
};

// Two equiprobable qubit letters with overlap sin(theta):
// cos(theta/2)|0> + sin(theta/2)|1> and sin(theta/2)|0> + cos(theta/2)|1>.
// Orthogonal at theta = pi; identical at theta = pi/2.
LetterEnsemble two_state_ensemble(double theta_radians);

struct EigenPair {
  double value = 0.0;
  Eigen::VectorXcd vector;
};

// Spectral decomposition of a density matrix: eigenvalues descending,
// eigenvectors orthonormal, eigenvalues summing to one.
class EigenDecomposition {
public:
  static EigenDecomposition from_pairs(std::vector<EigenPair> pairs);

  const std::vector<EigenPair>& pairs() const noexcept { return pairs_; }
  int dimension() const noexcept { return static_cast<int>(pairs_.size()); }
  double eigenvalue(int i) const { return pairs_.at(static_cast<std::size_t>(i)).value; }
  std::vector<double> eigenvalues() const;
  // Columns are the eigenvectors, in eigenvalue order.
  Eigen::MatrixXcd basis_matrix() const;

private:
  std::vector<EigenPair> pairs_;
};

Eigen::MatrixXcd density_matrix(const LetterEnsemble& ensemble);

// Diagonalizes a density matrix. Eigenvector phases are fixed so the
// largest-magnitude component of each vector is real positive.
EigenDecomposition diagonalize(const Eigen::MatrixXcd& rho);

struct RankedSequence {
  std::uint64_t rank = 0;  // 1-based
  IndexSequence indices;
  double probability = 0.0;
};

// All d^n sequences sorted by probability descending; ties broken
// lexicographically on the index sequence.
std::vector<RankedSequence> ranked_sequences(
    const EigenDecomposition& eig, int letter_count,
    std::uint64_t enumeration_cap = kDefaultEnumerationCap);

// Product of eigenvalues along a sequence, computed canonically per type
// class (equal-probability sequences get bit-identical values).
double sequence_probability(const std::vector<double>& eigenvalues,
                            const IndexSequence& indices);

// -sum p log2 p, with 0 log 0 = 0.
double shannon_entropy(const std::vector<double>& probabilities);

// -tr rho log2 rho = Shannon entropy of the eigenvalue distribution.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

// {"letters": [{"amplitudes": [[re,im],...], "p": real}, ...]}
std::string to_json(const LetterEnsemble& ensemble);
LetterEnsemble ensemble_from_json(const std::string& text);

}  // namespace fockzip
