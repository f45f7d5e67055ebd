#include "fockzip/coder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <utility>

#include <nlohmann/json.hpp>

namespace fockzip {

namespace {

constexpr double kProbabilityOrderSlack = 1e-12;

char symbol_for_bit(SymbolOrder order, bool bit) {
  if (order == SymbolOrder::VFirst) {
    return bit ? 'H' : 'V';
  }
  return bit ? 'V' : 'H';
}

// Ranks with codeword length l occupy (2^l - 2, 2^(l+1) - 2].
std::uint64_t class_start_rank(int length) {
  return (std::uint64_t{1} << length) - 1;
}

}  // namespace

std::string to_string(SymbolOrder order) {
  return order == SymbolOrder::VFirst ? "v-first" : "h-first";
}

SymbolOrder symbol_order_from_string(const std::string& name) {
  if (name == "v-first") {
    return SymbolOrder::VFirst;
  }
  if (name == "h-first") {
    return SymbolOrder::HFirst;
  }
  throw ValidationError("symbol order must be v-first or h-first: " + name);
}

FockBasisKet Codeword::as_ket(std::size_t mode_count) const {
  if (symbols.size() > mode_count) {
    throw CapacityError("codeword does not fit in the given mode count");
  }
  std::string pattern = symbols;
  pattern.resize(mode_count, '.');
  return FockBasisKet(std::move(pattern));
}

int codeword_length(std::uint64_t rank) {
  if (rank < 1) {
    throw DomainError("codeword ranks start at 1");
  }
  if (rank > (std::uint64_t{1} << 62)) {
    throw DomainError("rank too large");
  }
  // ceil(log2(rank/2 + 1)) = ceil(log2(rank + 2)) - 1, computed exactly.
  return std::bit_width(rank + 1) - 1;
}

Codebook Codebook::from_rows(const EigenDecomposition& eig, int letter_count,
                             SymbolOrder order,
                             std::vector<std::pair<IndexSequence, std::string>> rows) {
  if (letter_count < 1) {
    throw ValidationError("codebook needs letter count >= 1");
  }
  const int dim = eig.dimension();
  std::uint64_t expected = 1;
  for (int i = 0; i < letter_count; ++i) {
    expected *= static_cast<std::uint64_t>(dim);
  }
  if (rows.size() != expected) {
    throw ValidationError("codebook must cover every eigenbasis sequence");
  }

  Codebook book;
  book.eig_ = eig;
  book.letter_count_ = letter_count;
  book.order_ = order;
  const std::vector<double> values = eig.eigenvalues();

  std::uint64_t rank = 0;
  double previous_probability = std::numeric_limits<double>::infinity();
  for (auto& [sequence, symbols] : rows) {
    ++rank;
    if (static_cast<int>(sequence.size()) != letter_count) {
      throw ValidationError("codebook sequences must have n letters");
    }
    if (symbols.empty()) {
      throw ValidationError("codewords must be non-empty");
    }
    for (char c : symbols) {
      if (c != 'H' && c != 'V') {
        throw ValidationError("codewords must use only 'H' and 'V'");
      }
    }
    if (static_cast<int>(symbols.size()) != codeword_length(rank)) {
      throw ValidationError("codeword length must follow the rank-length law");
    }
    const double probability = sequence_probability(values, sequence);
    if (probability > previous_probability + kProbabilityOrderSlack) {
      throw ValidationError("codebook probabilities must be non-increasing in rank");
    }
    previous_probability = probability;

    const std::uint64_t packed = MessageState::pack_index(dim, sequence);
    if (!book.by_sequence_.emplace(packed, book.entries_.size()).second) {
      throw ValidationError("codebook sequences must be distinct");
    }
    if (!book.by_codeword_.emplace(symbols, book.entries_.size()).second) {
      throw ValidationError("codewords must be distinct (1-1 map)");
    }
    book.max_length_ = std::max(book.max_length_, symbols.size());
    book.entries_.push_back({rank, std::move(sequence), Codeword{std::move(symbols)}, probability});
  }
  return book;
}

const CodebookEntry& Codebook::entry(std::uint64_t rank) const {
  if (rank < 1 || rank > entries_.size()) {
    throw DomainError("rank out of range");
  }
  return entries_[rank - 1];
}

const CodebookEntry& Codebook::entry_for_sequence(const IndexSequence& indices) const {
  if (static_cast<int>(indices.size()) != letter_count_) {
    throw DimensionError("sequence length must match the book");
  }
  const auto it = by_sequence_.find(MessageState::pack_index(dimension(), indices));
  if (it == by_sequence_.end()) {
    throw DomainError("sequence not present in the book");
  }
  return entries_[it->second];
}

const CodebookEntry& Codebook::entry_for_ket(const FockBasisKet& ket) const {
  const std::string& pattern = ket.pattern();
  const std::size_t first_vacuum = pattern.find('.');
  const std::size_t occupied = first_vacuum == std::string::npos ? pattern.size() : first_vacuum;
  if (pattern.find_first_not_of('.', occupied) != std::string::npos) {
    throw CorruptionError("ket is not prefix-occupied: " + pattern);
  }
  const auto it = by_codeword_.find(pattern.substr(0, occupied));
  if (it == by_codeword_.end()) {
    throw CorruptionError("ket is not a codeword of the book: " + pattern);
  }
  return entries_[it->second];
}

Codebook build_codebook(const EigenDecomposition& eig, int letter_count, SymbolOrder order,
                        std::uint64_t enumeration_cap) {
  std::vector<RankedSequence> ranked = ranked_sequences(eig, letter_count, enumeration_cap);
  std::vector<std::pair<IndexSequence, std::string>> rows;
  rows.reserve(ranked.size());
  for (RankedSequence& rs : ranked) {
    const int length = codeword_length(rs.rank);
    const std::uint64_t offset = rs.rank - class_start_rank(length);
    std::string symbols(static_cast<std::size_t>(length), '?');
    for (int pos = 0; pos < length; ++pos) {
      const bool bit = (offset >> (length - 1 - pos)) & 1u;
      symbols[static_cast<std::size_t>(pos)] = symbol_for_bit(order, bit);
    }
    rows.emplace_back(std::move(rs.indices), std::move(symbols));
  }
  return Codebook::from_rows(eig, letter_count, order, std::move(rows));
}

Codebook circuit_codebook(const EigenDecomposition& eig) {
  if (eig.dimension() != 2) {
    throw DimensionError("the two-letter network encodes qubit sources");
  }
  std::vector<std::pair<IndexSequence, std::string>> rows = {
      {{0, 0}, "H"},
      {{1, 0}, "V"},
      {{0, 1}, "HV"},
      {{1, 1}, "VV"},
  };
  return Codebook::from_rows(eig, 2, SymbolOrder::HFirst, std::move(rows));
}

FockState encode(const MessageState& message, const Codebook& book,
                 std::optional<std::size_t> mode_count) {
  if (message.dimension() != book.dimension() ||
      message.letter_count() != book.letter_count()) {
    throw DimensionError("message shape must match the book");
  }
  const std::size_t needed =
      std::max(book.mode_count(), static_cast<std::size_t>(book.letter_count()));
  const std::size_t modes = mode_count.value_or(needed);
  if (modes < needed) {
    throw CapacityError("not enough modes to hold every codeword");
  }

  // Per-letter change of basis into the eigenbasis.
  const Eigen::MatrixXcd u_dagger = book.eigenbasis().basis_matrix().adjoint();
  const Eigen::VectorXcd eigen_amplitudes = apply_per_letter(
      u_dagger, message.amplitudes(), message.dimension(), message.letter_count());

  FockState::TermMap terms;
  for (const CodebookEntry& entry : book.entries()) {
    const Complex amplitude = eigen_amplitudes(
        static_cast<Eigen::Index>(MessageState::pack_index(book.dimension(), entry.sequence)));
    if (std::abs(amplitude) >= kAmplitudePruneThreshold) {
      terms.emplace(entry.codeword.as_ket(modes), amplitude);
    }
  }
  return FockState::from_terms(modes, std::move(terms));
}

MessageState decode(const FockState& encoded, const Codebook& book, int total_length) {
  if (total_length != book.letter_count()) {
    throw SideInfoError("side information does not match the book's letter count");
  }
  Eigen::VectorXcd eigen_amplitudes =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(book.size()));
  for (const auto& [ket, amplitude] : encoded.terms()) {
    const CodebookEntry& entry = book.entry_for_ket(ket);
    eigen_amplitudes(static_cast<Eigen::Index>(
        MessageState::pack_index(book.dimension(), entry.sequence))) = amplitude;
  }
  return eigenbasis_superposition(book.eigenbasis(), book.letter_count(), eigen_amplitudes);
}

double average_length(const Codebook& book) {
  double total = 0.0;
  for (const CodebookEntry& entry : book.entries()) {
    total += entry.probability * entry.codeword.length();
  }
  return total;
}

BoundsReport compression_bounds(double letter_entropy_bits, int letter_count,
                                double average_length_bits) {
  if (letter_entropy_bits < 0.0 || letter_count < 1) {
    throw DomainError("need letter entropy >= 0 and letter count >= 1");
  }
  BoundsReport report;
  report.letter_entropy = letter_entropy_bits;
  report.letter_count = letter_count;
  report.total_entropy = letter_count * letter_entropy_bits;
  report.average_length = average_length_bits;
  report.side_info_bits = std::log2(static_cast<double>(letter_count));

  const double s = report.total_entropy;
  const double inf = std::numeric_limits<double>::infinity();
  report.bound_landauer_n = s - report.side_info_bits;
  report.bound_cover = s - report.side_info_bits - 3.0;
  if (s > 0.0) {
    report.bound_landauer_s = s - std::log2(s);
    report.bound_prisco = s - std::log2(s + 1.0) - s * std::log2(1.0 + 1.0 / s);
    report.bound_prisco_alt = s - std::log2(s) - s * std::log2(1.0 + 1.0 / s);
  } else {
    report.bound_landauer_s = -inf;
    report.bound_prisco = -inf;
    report.bound_prisco_alt = -inf;
  }

  report.satisfies_landauer_n = average_length_bits >= report.bound_landauer_n;
  report.satisfies_landauer_s = average_length_bits >= report.bound_landauer_s;
  report.satisfies_cover = average_length_bits >= report.bound_cover;
  report.satisfies_prisco = average_length_bits >= report.bound_prisco;
  return report;
}

std::string sequence_label(const IndexSequence& indices, int dimension) {
  std::string label;
  label.reserve(indices.size());
  for (std::uint8_t index : indices) {
    if (dimension == 2) {
      label += index == 0 ? '+' : '-';
    } else {
      label += static_cast<char>('0' + index);
    }
  }
  return label;
}

std::string to_json(const Codebook& book) {
  nlohmann::json entries = nlohmann::json::array();
  for (const CodebookEntry& entry : book.entries()) {
    entries.push_back({{"rank", entry.rank},
                       {"sequence", sequence_label(entry.sequence, book.dimension())},
                       {"codeword", entry.codeword.symbols},
                       {"probability", entry.probability}});
  }
  return nlohmann::json{{"n", book.letter_count()},
                        {"symbol_order", to_string(book.symbol_order())},
                        {"entries", entries}}
      .dump();
}

}  // namespace fockzip
