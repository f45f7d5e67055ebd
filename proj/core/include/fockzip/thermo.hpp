#pragma once

#include <string>

#include "fockzip/coder.hpp"
#include "fockzip/fock.hpp"

namespace fockzip {

// Tolerance on the lossless deficit test.
inline constexpr double kLandauerTolerance = 1e-9;

// sum_kets |amp|^2 * sum of omega over occupied modes, in units of hbar*omega.
// Equals expected_photon_number at uniform unit frequencies.
double average_energy(const FockState& s, const ModeFrequencies& freqs);

struct EnergyReport {
  double initial_energy = 0.0;  // hbar*omega units
  double final_energy = 0.0;
  double ratio = 0.0;           // final / initial
  int letter_count = 0;
  double average_length = 0.0;
  std::string scheme;
};

// Uniform unit frequencies: one photon per letter before encoding, so the
// initial energy is n and the final energy is L_11.
EnergyReport energy_ratio_one_to_one(const Codebook& book);

struct LandauerAudit {
  double total_entropy = 0.0;   // bits
  double side_info_bits = 0.0;
  double average_length = 0.0;
  double deficit = 0.0;         // S_total - (L + side_info)
  bool lossless_consistent = false;
};

// A lossless scheme must carry L + side_info >= S_total; positive deficit
// signals information loss.
LandauerAudit landauer_audit(double total_entropy, double average_length,
                             double side_info_bits);

}  // namespace fockzip
