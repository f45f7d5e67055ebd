#include "fockzip/source.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <nlohmann/json.hpp>

namespace fockzip {

namespace {

constexpr double kDistributionTolerance = 1e-12;
constexpr double kDecompositionTolerance = 1e-10;

}  // namespace

std::uint64_t sequence_space_size(int dimension, int letter_count,
                                  std::uint64_t enumeration_cap) {
  if (dimension < 1 || letter_count < 1) {
    throw DomainError("need dimension >= 1 and letter count >= 1");
  }
  std::uint64_t size = 1;
  for (int i = 0; i < letter_count; ++i) {
    if (size > enumeration_cap / static_cast<std::uint64_t>(dimension)) {
      throw ResourceError("sequence space exceeds the enumeration cap");
    }
    size *= static_cast<std::uint64_t>(dimension);
  }
  if (size > enumeration_cap) {
    throw ResourceError("sequence space exceeds the enumeration cap");
  }
  return size;
}

LetterEnsemble::LetterEnsemble(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw ValidationError("ensemble needs at least one letter");
  }
  dimension_ = static_cast<int>(letters_.front().amplitudes.size());
  if (dimension_ < 1) {
    throw ValidationError("letter states need dimension >= 1");
  }
  double total = 0.0;
  for (const Letter& letter : letters_) {
    if (letter.amplitudes.size() != dimension_) {
      throw ValidationError("all letters must share one dimension");
    }
    if (letter.probability < -kDistributionTolerance) {
      throw ValidationError("letter probabilities must be nonnegative");
    }
    if (std::abs(letter.amplitudes.norm() - 1.0) > kDistributionTolerance) {
      throw ValidationError("letter states must be normalized");
    }
    total += letter.probability;
  }
  if (std::abs(total - 1.0) > kDistributionTolerance) {
    throw ValidationError("letter probabilities must sum to one");
  }
}

LetterEnsemble two_state_ensemble(double theta_radians) {
  const double c = std::cos(theta_radians / 2.0);
  const double s = std::sin(theta_radians / 2.0);
  Eigen::VectorXcd psi0(2), psi1(2);
  psi0 << Complex(c, 0.0), Complex(s, 0.0);
  psi1 << Complex(s, 0.0), Complex(c, 0.0);
  return LetterEnsemble({{psi0, 0.5}, {psi1, 0.5}});
}

EigenDecomposition EigenDecomposition::from_pairs(std::vector<EigenPair> pairs) {
  if (pairs.empty()) {
    throw ValidationError("decomposition needs at least one pair");
  }
  const auto dim = static_cast<Eigen::Index>(pairs.size());
  double sum = 0.0;
  for (auto& pair : pairs) {
    if (pair.vector.size() != dim) {
      throw ValidationError("eigenvector dimension must match the pair count");
    }
    if (pair.value < -kDecompositionTolerance || pair.value > 1.0 + kDecompositionTolerance) {
      throw ValidationError("eigenvalues must lie in [0, 1]");
    }
    sum += pair.value;
    pair.value = std::clamp(pair.value, 0.0, 1.0);
  }
  if (std::abs(sum - 1.0) > kDecompositionTolerance) {
    throw ValidationError("eigenvalues must sum to one");
  }
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
    if (pairs[i].value < pairs[i + 1].value) {
      throw ValidationError("eigenvalues must be sorted descending");
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i; j < pairs.size(); ++j) {
      const Complex overlap = pairs[i].vector.dot(pairs[j].vector);
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(overlap - expected) > kDecompositionTolerance) {
        throw ValidationError("eigenvectors must be orthonormal");
      }
    }
  }
  EigenDecomposition eig;
  eig.pairs_ = std::move(pairs);
  return eig;
}

std::vector<double> EigenDecomposition::eigenvalues() const {
  std::vector<double> values;
  values.reserve(pairs_.size());
  for (const EigenPair& pair : pairs_) {
    values.push_back(pair.value);
  }
  return values;
}

Eigen::MatrixXcd EigenDecomposition::basis_matrix() const {
  const auto dim = static_cast<Eigen::Index>(pairs_.size());
  Eigen::MatrixXcd u(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    u.col(i) = pairs_[static_cast<std::size_t>(i)].vector;
  }
  return u;
}

Eigen::MatrixXcd density_matrix(const LetterEnsemble& ensemble) {
  const auto dim = static_cast<Eigen::Index>(ensemble.dimension());
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (const Letter& letter : ensemble.letters()) {
    rho += letter.probability * (letter.amplitudes * letter.amplitudes.adjoint());
  }
  return rho;
}

EigenDecomposition diagonalize(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != rho.cols() || rho.rows() < 1) {
    throw ValidationError("density matrix must be square");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw ValidationError("density matrix must be Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("eigendecomposition failed to converge");
  }
  std::vector<EigenPair> pairs;
  pairs.reserve(static_cast<std::size_t>(rho.rows()));
  // Eigen sorts ascending; emit descending and fix each vector's phase so its
  // largest-magnitude component is real positive.
  for (Eigen::Index i = rho.rows() - 1; i >= 0; --i) {
    Eigen::VectorXcd v = solver.eigenvectors().col(i);
    Eigen::Index pivot = 0;
    v.cwiseAbs().maxCoeff(&pivot);
    const Complex lead = v(pivot);
    if (std::abs(lead) > 0.0) {
      v *= std::conj(lead) / std::abs(lead);
    }
    pairs.push_back({solver.eigenvalues()(i), std::move(v)});
  }
  return EigenDecomposition::from_pairs(std::move(pairs));
}

double sequence_probability(const std::vector<double>& eigenvalues,
                            const IndexSequence& indices) {
  std::vector<int> counts(eigenvalues.size(), 0);
  for (std::uint8_t index : indices) {
    if (index >= eigenvalues.size()) {
      throw DomainError("sequence index out of range");
    }
    ++counts[index];
  }
  double product = 1.0;
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    if (counts[i] > 0) {
      product *= std::pow(eigenvalues[i], counts[i]);
    }
  }
  return product;
}

std::vector<RankedSequence> ranked_sequences(const EigenDecomposition& eig,
                                             int letter_count,
                                             std::uint64_t enumeration_cap) {
  if (letter_count < 1) {
    throw DomainError("letter count must be >= 1");
  }
  const int dim = eig.dimension();
  const std::uint64_t total = sequence_space_size(dim, letter_count, enumeration_cap);
  const std::vector<double> values = eig.eigenvalues();

  std::vector<RankedSequence> out;
  out.reserve(total);
  IndexSequence indices(static_cast<std::size_t>(letter_count), 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    out.push_back({0, indices, sequence_probability(values, indices)});
    // lexicographic odometer
    for (int pos = letter_count - 1; pos >= 0; --pos) {
      auto& digit = indices[static_cast<std::size_t>(pos)];
      if (++digit < dim) {
        break;
      }
      digit = 0;
    }
  }
  // Equal probabilities are bit-identical per type class, so a stable sort
  // keeps the lexicographic enumeration order within ties.
  std::stable_sort(out.begin(), out.end(), [](const RankedSequence& a, const RankedSequence& b) {
    return a.probability > b.probability;
  });
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].rank = i + 1;
  }
  return out;
}

double shannon_entropy(const std::vector<double>& probabilities) {
  double entropy = 0.0;
  for (double p : probabilities) {
    if (p < -kDistributionTolerance) {
      throw ValidationError("probabilities must be nonnegative");
    }
    if (p > 0.0) {
      entropy -= p * std::log2(p);
    }
  }
  return entropy;
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  return shannon_entropy(diagonalize(rho).eigenvalues());
}

std::string to_json(const LetterEnsemble& ensemble) {
  nlohmann::json letters = nlohmann::json::array();
  for (const Letter& letter : ensemble.letters()) {
    nlohmann::json amplitudes = nlohmann::json::array();
    for (Eigen::Index i = 0; i < letter.amplitudes.size(); ++i) {
      amplitudes.push_back({letter.amplitudes(i).real(), letter.amplitudes(i).imag()});
    }
    letters.push_back({{"amplitudes", amplitudes}, {"p", letter.probability}});
  }
  return nlohmann::json{{"letters", letters}}.dump();
}

LetterEnsemble ensemble_from_json(const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid ensemble JSON: ") + e.what());
  }
  if (!parsed.contains("letters") || !parsed.at("letters").is_array()) {
    throw ValidationError("ensemble JSON needs a \"letters\" list");
  }
  std::vector<Letter> letters;
  for (const auto& entry : parsed.at("letters")) {
    if (!entry.contains("amplitudes") || !entry.contains("p")) {
      throw ValidationError("ensemble letter needs amplitudes and p");
    }
    const auto& amps = entry.at("amplitudes");
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const auto& pair = amps.at(static_cast<std::size_t>(i));
      if (!pair.is_array() || pair.size() != 2) {
        throw ValidationError("amplitudes must be [re, im] pairs");
      }
      v(i) = Complex{pair.at(0).get<double>(), pair.at(1).get<double>()};
    }
    letters.push_back({std::move(v), entry.at("p").get<double>()});
  }
  return LetterEnsemble(std::move(letters));
}

}  // namespace fockzip
