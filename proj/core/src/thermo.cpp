#include "fockzip/thermo.hpp"

#include <cmath>

namespace fockzip {

double average_energy(const FockState& s, const ModeFrequencies& freqs) {
  if (s.mode_count() != freqs.mode_count()) {
    throw DimensionError("state and frequency list must have equal mode counts");
  }
  double energy = 0.0;
  for (const auto& [ket, amp] : s.terms()) {
    double ket_energy = 0.0;
    for (std::size_t mode = 0; mode < ket.mode_count(); ++mode) {
      if (ket.occupation(mode) != ModeOccupation::Vacuum) {
        ket_energy += freqs.omega(mode);
      }
    }
    energy += std::norm(amp) * ket_energy;
  }
  return energy;
}

EnergyReport energy_ratio_one_to_one(const Codebook& book) {
  EnergyReport report;
  report.letter_count = book.letter_count();
  report.average_length = average_length(book);
  report.initial_energy = static_cast<double>(book.letter_count());
  report.final_energy = report.average_length;
  report.ratio = report.final_energy / report.initial_energy;
  report.scheme = "one-to-one";
  return report;
}

LandauerAudit landauer_audit(double total_entropy, double average_length,
                             double side_info_bits) {
  if (total_entropy < 0.0 || average_length < 0.0 || side_info_bits < 0.0) {
    throw DomainError("landauer audit inputs must be nonnegative");
  }
  LandauerAudit audit;
  audit.total_entropy = total_entropy;
  audit.average_length = average_length;
  audit.side_info_bits = side_info_bits;
  audit.deficit = total_entropy - (average_length + side_info_bits);
  audit.lossless_consistent = audit.deficit <= kLandauerTolerance;
  return audit;
}

}  // namespace fockzip
