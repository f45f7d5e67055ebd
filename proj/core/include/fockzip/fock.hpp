#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fockzip/errors.hpp"

namespace fockzip {

using Complex = std::complex<double>;

// Stored amplitudes below this magnitude are dropped.
inline constexpr double kAmplitudePruneThreshold = 1e-14;
// Allowed deviation from unit norm for states that promise normalization.
inline constexpr double kNormTolerance = 1e-10;

// Per-mode content: vacuum, one horizontally or one vertically polarized
// photon. Never more than one excitation per mode.
enum class ModeOccupation : char {
  Vacuum = '.',
  H = 'H',
  V = 'V',
};

ModeOccupation occupation_from_char(char c);

// Occupation pattern of M ordered frequency modes, lowest frequency first
// (0-based mode index). Stored packed as a string over {'.','H','V'}.
// Distinct kets are orthonormal.
class FockBasisKet {
public:
  FockBasisKet() = default;
  explicit FockBasisKet(std::string pattern);
  static FockBasisKet vacuum(std::size_t mode_count);

  std::size_t mode_count() const noexcept { return pattern_.size(); }
  ModeOccupation occupation(std::size_t mode) const;
  FockBasisKet with_occupation(std::size_t mode, ModeOccupation occ) const;
  std::size_t photon_count() const noexcept;
  const std::string& pattern() const noexcept { return pattern_; }

  friend bool operator==(const FockBasisKet&, const FockBasisKet&) = default;
  friend auto operator<=>(const FockBasisKet&, const FockBasisKet&) = default;

private:
  std::string pattern_;
};

// Sparse superposition of FockBasisKets sharing one mode count. The map keeps
// terms in a fixed ket order, so iteration is deterministic. Factories that
// promise normalization verify it to kNormTolerance; terms below the prune
// threshold are never stored.
class FockState {
public:
  using TermMap = std::map<FockBasisKet, Complex>;

  FockState() = default;

  // Single basis ket with amplitude 1.
  static FockState basis(FockBasisKet ket);
  static FockState vacuum(std::size_t mode_count);
  // Linear combination as given (prunes, keeps overall scale).
  static FockState from_terms(std::size_t mode_count, TermMap terms);
  // Rescales the given combination to unit norm.
  static FockState normalized(std::size_t mode_count, TermMap terms);

  std::size_t mode_count() const noexcept { return mode_count_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Complex amplitude(const FockBasisKet& ket) const;
  double norm() const;
  bool is_normalized(double tol = kNormTolerance) const;
  FockState renormalized() const;

  friend bool operator==(const FockState&, const FockState&) = default;

private:
  std::size_t mode_count_ = 0;
  TermMap terms_;
};

FockState operator*(Complex factor, const FockState& s);
FockState operator+(const FockState& lhs, const FockState& rhs);
FockState operator-(const FockState& lhs, const FockState& rhs);

// <s1|s2>, conjugate-linear in the first argument.
Complex inner_product(const FockState& s1, const FockState& s2);

// |<a|b>|^2 for normalized states (global phase quotiented out).
double fidelity(const FockState& a, const FockState& b);

FockState tensor(const FockState& s1, const FockState& s2);

// Linear extension of a rule defined on basis kets. All rule images must
// share one mode count. The rule may throw DomainError for kets outside its
// domain.
FockState apply_basis_map(const std::function<FockState(const FockBasisKet&)>& rule,
                          const FockState& s);

double expected_photon_number(const FockState& s);

// Mode frequencies in units of energy per photon (hbar = 1); all positive.
class ModeFrequencies {
public:
  explicit ModeFrequencies(std::vector<double> omegas);
  static ModeFrequencies uniform(std::size_t mode_count, double omega = 1.0);

  std::size_t mode_count() const noexcept { return omegas_.size(); }
  double omega(std::size_t mode) const;
  const std::vector<double>& omegas() const noexcept { return omegas_; }

private:
  std::vector<double> omegas_;
};

// JSON list of {"occupations": "<pattern>", "re": x, "im": y}, ordered by ket.
std::string to_json(const FockState& s);
FockState fock_state_from_json(const std::string& text);

}  // namespace fockzip
