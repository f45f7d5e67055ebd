#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fockzip/fock.hpp"
#include "fockzip/message.hpp"
#include "fockzip/source.hpp"

namespace fockzip {

// Which polarization plays binary digit 0 when codewords are counted out.
enum class SymbolOrder {
  VFirst,  // 0 -> V, 1 -> H
  HFirst,  // 0 -> H, 1 -> V
};

std::string to_string(SymbolOrder order);
SymbolOrder symbol_order_from_string(const std::string& name);

// Non-empty polarization string over {'H','V'}; realized as a Fock basis ket
// with the first length() modes occupied accordingly and vacuum beyond.
struct Codeword {
  std::string symbols;

  int length() const noexcept { return static_cast<int>(symbols.size()); }
  FockBasisKet as_ket(std::size_t mode_count) const;
};

// Length of the rank-i codeword, ceil(log2(i/2 + 1)): ranks 1-2 get one
// photon, 3-6 two, 7-14 three, ...
int codeword_length(std::uint64_t rank);

struct CodebookEntry {
  std::uint64_t rank = 0;  // 1-based
  IndexSequence sequence;
  Codeword codeword;
  double probability = 0.0;
};

// Rank-ordered bijection between n-letter eigenbasis sequences and
// variable-length codewords. Keeps the eigenbasis it was built from, so
// encode/decode are self-contained.
class Codebook {
public:
  // Validates: ranks contiguous from 1, sequences a permutation of all d^n,
  // codewords distinct with the rank-length law, probabilities non-increasing.
  // Probabilities are derived from the eigenvalues, not taken from the rows.
  static Codebook from_rows(const EigenDecomposition& eig, int letter_count,
                            SymbolOrder order,
                            std::vector<std::pair<IndexSequence, std::string>> rows);

  int letter_count() const noexcept { return letter_count_; }
  int dimension() const noexcept { return eig_.dimension(); }
  SymbolOrder symbol_order() const noexcept { return order_; }
  const EigenDecomposition& eigenbasis() const noexcept { return eig_; }
  std::size_t size() const noexcept { return entries_.size(); }
  // Modes needed to hold every codeword (the longest codeword's length).
  std::size_t mode_count() const noexcept { return max_length_; }
  const std::vector<CodebookEntry>& entries() const noexcept { return entries_; }
  const CodebookEntry& entry(std::uint64_t rank) const;
  const CodebookEntry& entry_for_sequence(const IndexSequence& indices) const;
  // Matches a ket whose occupied prefix spells a codeword and whose remaining
  // modes are vacuum; throws CorruptionError otherwise.
  const CodebookEntry& entry_for_ket(const FockBasisKet& ket) const;

private:
  Codebook() = default;

  EigenDecomposition eig_;
  int letter_count_ = 0;
  SymbolOrder order_ = SymbolOrder::VFirst;
  std::size_t max_length_ = 0;
  std::vector<CodebookEntry> entries_;
  std::map<std::uint64_t, std::size_t> by_sequence_;  // packed sequence -> entry
  std::map<std::string, std::size_t> by_codeword_;
};

// Canonical book: ranks from ranked_sequences, codewords counted out in
// binary order within each length class under the symbol order.
Codebook build_codebook(const EigenDecomposition& eig, int letter_count,
                        SymbolOrder order = SymbolOrder::VFirst,
                        std::uint64_t enumeration_cap = kDefaultEnumerationCap);

// The book the two-letter compression network realizes: (++)->H, (-+)->V,
// (+-)->HV, (--)->VV. Requires a qubit eigenbasis.
Codebook circuit_codebook(const EigenDecomposition& eig);

// Letter-basis message -> per-letter change into the eigenbasis -> linear
// extension of the sequence->codeword rule. Output is a normalized
// superposition of prefix-occupied kets over `mode_count` modes (defaults to
// the book's requirement; fewer raises CapacityError).
FockState encode(const MessageState& message, const Codebook& book,
                 std::optional<std::size_t> mode_count = std::nullopt);

// Exact inverse of encode. total_length is the out-of-band side information;
// it must equal the book's letter count (SideInfoError otherwise). Kets that
// are not codewords of the book raise CorruptionError.
MessageState decode(const FockState& encoded, const Codebook& book, int total_length);

// L_11 = sum_i p_i l_i, in bits = expected photon count.
double average_length(const Codebook& book);

struct BoundsReport {
  double letter_entropy = 0.0;  // S per letter, bits
  int letter_count = 0;         // n
  double total_entropy = 0.0;   // n * S
  double average_length = 0.0;  // L_11
  double side_info_bits = 0.0;  // log2(n)

  double bound_landauer_n = 0.0;   // nS - log2(n)
  double bound_landauer_s = 0.0;   // nS - log2(nS); -inf when nS = 0
  double bound_cover = 0.0;        // nS - log2(n) - 3
  double bound_prisco = 0.0;       // nS - log2(nS+1) - nS log2(1 + 1/nS); -inf when nS = 0
  double bound_prisco_alt = 0.0;   // log2(nS) variant, reported only

  bool satisfies_landauer_n = false;
  bool satisfies_landauer_s = false;
  bool satisfies_cover = false;
  bool satisfies_prisco = false;
};

BoundsReport compression_bounds(double letter_entropy_bits, int letter_count,
                                double average_length_bits);

// {"n":..,"symbol_order":..,"entries":[{"rank","sequence","codeword","probability"}]}
// Sequences printed with +/- labels for qubit sources, digit labels otherwise.
std::string to_json(const Codebook& book);

std::string sequence_label(const IndexSequence& indices, int dimension);

}  // namespace fockzip
