#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "fockzip/fock.hpp"

namespace fockzip {

// Two-letter compression network. The combined register holds modes
// (w1, w2, environment); the environment starts in vacuum.
struct CircuitState {
  FockState combined;  // 3 modes
  std::string stage;
};

enum class EnvOutcome {
  Vacuum,
  OnePhoton,
};

struct MeasurementOutcome {
  EnvOutcome result = EnvOutcome::Vacuum;
  double probability = 0.0;
  FockState post_state;  // 2 system modes, renormalized
};

enum class CircuitMode {
  Measured,
  Coherent,
};

// Input amplitudes over the {+,-} two-letter basis, indexed
// 2*first + second with + = 0: (++, +-, -+, --).
CircuitState prepare_input(const Eigen::Vector4cd& plus_minus_amplitudes);

// Swaps the H occupation of mode 2 with the environment slot (the PDBS
// H-branch exchange). Identity on V or vacuum in mode 2; self-inverse.
// PreconditionError on kets the rail swap cannot act on (environment V, or
// environment H alongside mode-2 V).
CircuitState conditional_swap_env(const CircuitState& s);

// Environment map |H> -> (|vac> + |H>)/sqrt(2), |vac> -> (|vac> - |H>)/sqrt(2).
// DomainError on a V-occupied environment.
CircuitState env_hadamard(const CircuitState& s);

// Born-rule branches on the environment slot (vacuum vs one photon), with
// renormalized two-mode post-states. Deterministic order: vacuum first.
std::vector<MeasurementOutcome> measure_env(const CircuitState& s);

// After the one-photon outcome, flips the sign of kets whose second mode is V.
FockState conditional_phase_correction(const FockState& s, EnvOutcome outcome);

struct CircuitTrace {
  std::vector<CircuitState> stages;
  std::vector<MeasurementOutcome> outcomes;  // measured mode only
  FockState output;                          // 2 system modes
};

// Full network: dual-rail preparation (+ -> H photon, - -> V photon),
// conditional swap, environment Hadamard, then measurement with phase
// correction (Measured) or a controlled phase on environment-H x mode-2-V
// followed by factoring out the environment (Coherent).
CircuitTrace run_circuit_trace(const Eigen::Vector4cd& plus_minus_amplitudes,
                               CircuitMode mode);
FockState run_circuit(const Eigen::Vector4cd& plus_minus_amplitudes, CircuitMode mode);

}  // namespace fockzip
