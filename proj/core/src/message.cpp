#include "fockzip/message.hpp"

#include <cmath>
#include <utility>

namespace fockzip {

namespace {

std::uint64_t checked_power(int dimension, int letter_count) {
  std::uint64_t size = 1;
  for (int i = 0; i < letter_count; ++i) {
    size *= static_cast<std::uint64_t>(dimension);
  }
  return size;
}

}  // namespace

MessageState::MessageState(int dimension, int letter_count, Eigen::VectorXcd amplitudes)
    : dimension_(dimension), letter_count_(letter_count), amplitudes_(std::move(amplitudes)) {
  if (dimension_ < 1 || letter_count_ < 1) {
    throw ValidationError("message needs dimension >= 1 and letter count >= 1");
  }
  const auto expected = static_cast<Eigen::Index>(checked_power(dimension_, letter_count_));
  if (amplitudes_.size() != expected) {
    throw DimensionError("message amplitude vector must have d^n entries");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTolerance) {
    throw ValidationError("message states must be normalized");
  }
}

MessageState MessageState::basis(int dimension, const IndexSequence& letters) {
  if (letters.empty()) {
    throw ValidationError("message needs at least one letter");
  }
  const auto n = static_cast<int>(letters.size());
  Eigen::VectorXcd amplitudes =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(checked_power(dimension, n)));
  amplitudes(static_cast<Eigen::Index>(pack_index(dimension, letters))) = Complex{1.0, 0.0};
  return MessageState(dimension, n, std::move(amplitudes));
}

MessageState MessageState::random(int dimension, int letter_count, std::mt19937_64& rng) {
  const auto size = static_cast<Eigen::Index>(checked_power(dimension, letter_count));
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd amplitudes(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    amplitudes(i) = Complex{gauss(rng), gauss(rng)};
  }
  amplitudes /= amplitudes.norm();
  return MessageState(dimension, letter_count, std::move(amplitudes));
}

Complex MessageState::amplitude(const IndexSequence& letters) const {
  if (static_cast<int>(letters.size()) != letter_count_) {
    throw DimensionError("letter sequence length must match the message");
  }
  return amplitudes_(static_cast<Eigen::Index>(pack_index(dimension_, letters)));
}

std::uint64_t MessageState::pack_index(int dimension, const IndexSequence& letters) {
  std::uint64_t index = 0;
  for (std::uint8_t digit : letters) {
    if (digit >= dimension) {
      throw DomainError("letter index out of range");
    }
    index = index * static_cast<std::uint64_t>(dimension) + digit;
  }
  return index;
}

IndexSequence MessageState::unpack_index(int dimension, int letter_count, std::uint64_t index) {
  IndexSequence letters(static_cast<std::size_t>(letter_count), 0);
  for (int pos = letter_count - 1; pos >= 0; --pos) {
    letters[static_cast<std::size_t>(pos)] =
        static_cast<std::uint8_t>(index % static_cast<std::uint64_t>(dimension));
    index /= static_cast<std::uint64_t>(dimension);
  }
  return letters;
}

Complex inner_product(const MessageState& a, const MessageState& b) {
  if (a.dimension() != b.dimension() || a.letter_count() != b.letter_count()) {
    throw DimensionError("inner product requires matching message shapes");
  }
  return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const MessageState& a, const MessageState& b) {
  return std::norm(inner_product(a, b));
}

Eigen::VectorXcd apply_per_letter(const Eigen::MatrixXcd& u, const Eigen::VectorXcd& amplitudes,
                                  int dimension, int letter_count) {
  if (u.rows() != dimension || u.cols() != dimension) {
    throw DimensionError("per-letter matrix must be d x d");
  }
  const auto d = static_cast<std::uint64_t>(dimension);
  std::uint64_t size = checked_power(dimension, letter_count);
  if (amplitudes.size() != static_cast<Eigen::Index>(size)) {
    throw DimensionError("amplitude vector must have d^n entries");
  }
  Eigen::VectorXcd current = amplitudes;
  Eigen::VectorXcd next(current.size());
  // Letter k occupies the base-d digit with stride d^(n-1-k).
  std::uint64_t stride = size / d;
  for (int letter = 0; letter < letter_count; ++letter) {
    next.setZero();
    for (std::uint64_t base = 0; base < size; ++base) {
      const std::uint64_t digit = (base / stride) % d;
      const std::uint64_t rest = base - digit * stride;
      Complex sum{0.0, 0.0};
      for (std::uint64_t from = 0; from < d; ++from) {
        sum += u(static_cast<Eigen::Index>(digit), static_cast<Eigen::Index>(from)) *
               current(static_cast<Eigen::Index>(rest + from * stride));
      }
      next(static_cast<Eigen::Index>(base)) = sum;
    }
    current.swap(next);
    stride /= d;
  }
  return current;
}

MessageState eigenbasis_sequence_state(const EigenDecomposition& eig,
                                       const IndexSequence& indices) {
  const auto n = static_cast<int>(indices.size());
  Eigen::VectorXcd eigen_amplitudes =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(checked_power(eig.dimension(), n)));
  eigen_amplitudes(static_cast<Eigen::Index>(MessageState::pack_index(eig.dimension(), indices))) =
      Complex{1.0, 0.0};
  return eigenbasis_superposition(eig, n, eigen_amplitudes);
}

MessageState eigenbasis_superposition(const EigenDecomposition& eig, int letter_count,
                                      const Eigen::VectorXcd& eigen_amplitudes) {
  Eigen::VectorXcd letter_basis =
      apply_per_letter(eig.basis_matrix(), eigen_amplitudes, eig.dimension(), letter_count);
  return MessageState(eig.dimension(), letter_count, std::move(letter_basis));
}

}  // namespace fockzip
