#include "fockzip/fock.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <nlohmann/json.hpp>

namespace fockzip {

namespace {

bool valid_occupation_char(char c) {
  return c == '.' || c == 'H' || c == 'V';
}

}  // namespace

ModeOccupation occupation_from_char(char c) {
  if (!valid_occupation_char(c)) {
    throw ValidationError(std::string("invalid mode occupation character: '") + c + "'");
  }
  return static_cast<ModeOccupation>(c);
}

FockBasisKet::FockBasisKet(std::string pattern) : pattern_(std::move(pattern)) {
  for (char c : pattern_) {
    if (!valid_occupation_char(c)) {
      throw ValidationError("ket pattern must use only '.', 'H', 'V': " + pattern_);
    }
  }
}

FockBasisKet FockBasisKet::vacuum(std::size_t mode_count) {
  return FockBasisKet(std::string(mode_count, '.'));
}

ModeOccupation FockBasisKet::occupation(std::size_t mode) const {
  if (mode >= pattern_.size()) {
    throw DimensionError("mode index out of range");
  }
  return static_cast<ModeOccupation>(pattern_[mode]);
}

FockBasisKet FockBasisKet::with_occupation(std::size_t mode, ModeOccupation occ) const {
  if (mode >= pattern_.size()) {
    throw DimensionError("mode index out of range");
  }
  std::string p = pattern_;
  p[mode] = static_cast<char>(occ);
  return FockBasisKet(std::move(p));
}

std::size_t FockBasisKet::photon_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(pattern_.begin(), pattern_.end(), [](char c) { return c != '.'; }));
}

FockState FockState::basis(FockBasisKet ket) {
  FockState s;
  s.mode_count_ = ket.mode_count();
  s.terms_.emplace(std::move(ket), Complex{1.0, 0.0});
  return s;
}

FockState FockState::vacuum(std::size_t mode_count) {
  return basis(FockBasisKet::vacuum(mode_count));
}

FockState FockState::from_terms(std::size_t mode_count, TermMap terms) {
  FockState s;
  s.mode_count_ = mode_count;
  for (auto& [ket, amp] : terms) {
    if (ket.mode_count() != mode_count) {
      throw DimensionError("all kets of a state must share one mode count");
    }
    if (std::abs(amp) >= kAmplitudePruneThreshold) {
      s.terms_.emplace(ket, amp);
    }
  }
  return s;
}

FockState FockState::normalized(std::size_t mode_count, TermMap terms) {
  FockState s = from_terms(mode_count, std::move(terms));
  double n = s.norm();
  if (n < kAmplitudePruneThreshold) {
    throw DomainError("cannot normalize a (numerically) zero state");
  }
  return s.renormalized();
}

Complex FockState::amplitude(const FockBasisKet& ket) const {
  auto it = terms_.find(ket);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

double FockState::norm() const {
  double sum = 0.0;
  for (const auto& [ket, amp] : terms_) {
    sum += std::norm(amp);
  }
  return std::sqrt(sum);
}

bool FockState::is_normalized(double tol) const {
  return std::abs(norm() - 1.0) <= tol;
}

FockState FockState::renormalized() const {
  double n = norm();
  if (n < kAmplitudePruneThreshold) {
    throw DomainError("cannot renormalize a (numerically) zero state");
  }
  FockState s;
  s.mode_count_ = mode_count_;
  for (const auto& [ket, amp] : terms_) {
    Complex scaled = amp / n;
    if (std::abs(scaled) >= kAmplitudePruneThreshold) {
      s.terms_.emplace(ket, scaled);
    }
  }
  return s;
}

FockState operator*(Complex factor, const FockState& s) {
  FockState::TermMap terms;
  for (const auto& [ket, amp] : s.terms()) {
    terms.emplace(ket, factor * amp);
  }
  return FockState::from_terms(s.mode_count(), std::move(terms));
}

FockState operator+(const FockState& lhs, const FockState& rhs) {
  if (lhs.mode_count() != rhs.mode_count()) {
    throw DimensionError("cannot add states with different mode counts");
  }
  FockState::TermMap terms = lhs.terms();
  for (const auto& [ket, amp] : rhs.terms()) {
    terms[ket] += amp;
  }
  return FockState::from_terms(lhs.mode_count(), std::move(terms));
}

FockState operator-(const FockState& lhs, const FockState& rhs) {
  return lhs + (Complex{-1.0, 0.0} * rhs);
}

Complex inner_product(const FockState& s1, const FockState& s2) {
  if (s1.mode_count() != s2.mode_count()) {
    throw DimensionError("inner product requires equal mode counts");
  }
  const auto& small = s1.term_count() <= s2.term_count() ? s1 : s2;
  const auto& large = s1.term_count() <= s2.term_count() ? s2 : s1;
  const bool swapped = &small != &s1;
  Complex sum{0.0, 0.0};
  for (const auto& [ket, amp] : small.terms()) {
    Complex other = large.amplitude(ket);
    if (other == Complex{0.0, 0.0}) {
      continue;
    }
    sum += swapped ? std::conj(other) * amp : std::conj(amp) * other;
  }
  return sum;
}

double fidelity(const FockState& a, const FockState& b) {
  return std::norm(inner_product(a, b));
}

FockState tensor(const FockState& s1, const FockState& s2) {
  FockState::TermMap terms;
  for (const auto& [k1, a1] : s1.terms()) {
    for (const auto& [k2, a2] : s2.terms()) {
      terms.emplace(FockBasisKet(k1.pattern() + k2.pattern()), a1 * a2);
    }
  }
  return FockState::from_terms(s1.mode_count() + s2.mode_count(), std::move(terms));
}

FockState apply_basis_map(const std::function<FockState(const FockBasisKet&)>& rule,
                          const FockState& s) {
  FockState::TermMap terms;
  bool first = true;
  std::size_t out_modes = 0;
  for (const auto& [ket, amp] : s.terms()) {
    FockState image = rule(ket);
    if (first) {
      out_modes = image.mode_count();
      first = false;
    } else if (image.mode_count() != out_modes) {
      throw DimensionError("basis map images must share one mode count");
    }
    for (const auto& [iket, iamp] : image.terms()) {
      terms[iket] += amp * iamp;
    }
  }
  if (first) {
    out_modes = s.mode_count();
  }
  return FockState::from_terms(out_modes, std::move(terms));
}

double expected_photon_number(const FockState& s) {
  double sum = 0.0;
  for (const auto& [ket, amp] : s.terms()) {
    sum += std::norm(amp) * static_cast<double>(ket.photon_count());
  }
  return sum;
}

ModeFrequencies::ModeFrequencies(std::vector<double> omegas) : omegas_(std::move(omegas)) {
  for (double w : omegas_) {
    if (!(w > 0.0)) {
      throw ValidationError("mode frequencies must be positive");
    }
  }
}

ModeFrequencies ModeFrequencies::uniform(std::size_t mode_count, double omega) {
  return ModeFrequencies(std::vector<double>(mode_count, omega));
}

double ModeFrequencies::omega(std::size_t mode) const {
  if (mode >= omegas_.size()) {
    throw DimensionError("mode index out of range");
  }
  return omegas_[mode];
}

std::string to_json(const FockState& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [ket, amp] : s.terms()) {
    terms.push_back({{"occupations", ket.pattern()}, {"re", amp.real()}, {"im", amp.imag()}});
  }
  return terms.dump();
}

FockState fock_state_from_json(const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid state JSON: ") + e.what());
  }
  if (!parsed.is_array()) {
    throw ValidationError("state JSON must be a list of terms");
  }
  FockState::TermMap terms;
  std::size_t modes = 0;
  bool first = true;
  for (const auto& term : parsed) {
    if (!term.contains("occupations") || !term.contains("re") || !term.contains("im")) {
      throw ValidationError("state term needs occupations/re/im fields");
    }
    FockBasisKet ket(term.at("occupations").get<std::string>());
    if (first) {
      modes = ket.mode_count();
      first = false;
    } else if (ket.mode_count() != modes) {
      throw ValidationError("state terms must share one mode count");
    }
    terms[ket] += Complex{term.at("re").get<double>(), term.at("im").get<double>()};
  }
  return FockState::from_terms(modes, std::move(terms));
}

}  // namespace fockzip
