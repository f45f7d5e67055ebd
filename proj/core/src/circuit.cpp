#include "fockzip/circuit.hpp"

#include <cmath>
#include <utility>

namespace fockzip {

namespace {

constexpr std::size_t kSystemModes = 2;
constexpr std::size_t kEnvMode = 2;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_three_modes(const CircuitState& s) {
  if (s.combined.mode_count() != kSystemModes + 1) {
    throw DimensionError("circuit states carry two system modes plus the environment");
  }
}

FockState strip_environment(const FockState::TermMap& terms) {
  FockState::TermMap stripped;
  for (const auto& [ket, amp] : terms) {
    stripped[FockBasisKet(ket.pattern().substr(0, kSystemModes))] += amp;
  }
  return FockState::from_terms(kSystemModes, std::move(stripped));
}

}  // namespace

CircuitState prepare_input(const Eigen::Vector4cd& plus_minus_amplitudes) {
  if (std::abs(plus_minus_amplitudes.norm() - 1.0) > kNormTolerance) {
    throw ValidationError("circuit input must be normalized");
  }
  FockState::TermMap terms;
  for (int index = 0; index < 4; ++index) {
    const Complex amp = plus_minus_amplitudes(index);
    if (std::abs(amp) < kAmplitudePruneThreshold) {
      continue;
    }
    // + (bit 0) enters as an H photon, - as a V photon; environment vacuum.
    std::string pattern = {(index & 2) ? 'V' : 'H', (index & 1) ? 'V' : 'H', '.'};
    terms.emplace(FockBasisKet(std::move(pattern)), amp);
  }
  return {FockState::from_terms(kSystemModes + 1, std::move(terms)), "input"};
}

CircuitState conditional_swap_env(const CircuitState& s) {
  require_three_modes(s);
  for (const auto& [ket, amp] : s.combined.terms()) {
    const ModeOccupation env = ket.occupation(kEnvMode);
    if (env == ModeOccupation::V ||
        (env == ModeOccupation::H && ket.occupation(1) == ModeOccupation::V)) {
      throw PreconditionError("environment content the rail swap cannot act on: " +
                              ket.pattern());
    }
  }
  const auto rule = [](const FockBasisKet& ket) {
    const ModeOccupation mode2 = ket.occupation(1);
    const ModeOccupation env = ket.occupation(kEnvMode);
    if (mode2 == ModeOccupation::H && env == ModeOccupation::Vacuum) {
      return FockState::basis(ket.with_occupation(1, ModeOccupation::Vacuum)
                                  .with_occupation(kEnvMode, ModeOccupation::H));
    }
    if (mode2 == ModeOccupation::Vacuum && env == ModeOccupation::H) {
      return FockState::basis(ket.with_occupation(1, ModeOccupation::H)
                                  .with_occupation(kEnvMode, ModeOccupation::Vacuum));
    }
    return FockState::basis(ket);
  };
  return {apply_basis_map(rule, s.combined), "swap"};
}

CircuitState env_hadamard(const CircuitState& s) {
  require_three_modes(s);
  const auto rule = [](const FockBasisKet& ket) {
    const FockBasisKet vac = ket.with_occupation(kEnvMode, ModeOccupation::Vacuum);
    const FockBasisKet one = ket.with_occupation(kEnvMode, ModeOccupation::H);
    switch (ket.occupation(kEnvMode)) {
      case ModeOccupation::H:
        return FockState::from_terms(
            ket.mode_count(), {{vac, Complex{kInvSqrt2, 0.0}}, {one, Complex{kInvSqrt2, 0.0}}});
      case ModeOccupation::Vacuum:
        return FockState::from_terms(
            ket.mode_count(), {{vac, Complex{kInvSqrt2, 0.0}}, {one, Complex{-kInvSqrt2, 0.0}}});
      case ModeOccupation::V:
        break;
    }
    throw DomainError("environment Hadamard is undefined for a V photon");
  };
  return {apply_basis_map(rule, s.combined), "hadamard"};
}

std::vector<MeasurementOutcome> measure_env(const CircuitState& s) {
  require_three_modes(s);
  FockState::TermMap vacuum_terms;
  FockState::TermMap photon_terms;
  double p_vacuum = 0.0;
  double p_photon = 0.0;
  for (const auto& [ket, amp] : s.combined.terms()) {
    if (ket.occupation(kEnvMode) == ModeOccupation::Vacuum) {
      vacuum_terms.emplace(ket, amp);
      p_vacuum += std::norm(amp);
    } else {
      photon_terms.emplace(ket, amp);
      p_photon += std::norm(amp);
    }
  }
  const auto branch = [](EnvOutcome result, double probability,
                         FockState::TermMap terms) -> MeasurementOutcome {
    FockState post = strip_environment(terms);
    if (probability > kAmplitudePruneThreshold) {
      post = post.renormalized();
    }
    return {result, probability, std::move(post)};
  };
  return {branch(EnvOutcome::Vacuum, p_vacuum, std::move(vacuum_terms)),
          branch(EnvOutcome::OnePhoton, p_photon, std::move(photon_terms))};
}

FockState conditional_phase_correction(const FockState& s, EnvOutcome outcome) {
  if (outcome == EnvOutcome::Vacuum) {
    return s;
  }
  const auto rule = [](const FockBasisKet& ket) {
    if (ket.occupation(1) == ModeOccupation::V) {
      return Complex{-1.0, 0.0} * FockState::basis(ket);
    }
    return FockState::basis(ket);
  };
  return apply_basis_map(rule, s);
}

CircuitTrace run_circuit_trace(const Eigen::Vector4cd& plus_minus_amplitudes,
                               CircuitMode mode) {
  CircuitTrace trace;
  trace.stages.push_back(prepare_input(plus_minus_amplitudes));
  trace.stages.push_back(conditional_swap_env(trace.stages.back()));
  trace.stages.push_back(env_hadamard(trace.stages.back()));

  if (mode == CircuitMode::Measured) {
    trace.outcomes = measure_env(trace.stages.back());
    // Both corrected branches coincide; report the vacuum branch.
    trace.output = conditional_phase_correction(trace.outcomes.front().post_state,
                                                trace.outcomes.front().result);
    return trace;
  }

  // Coherent variant: controlled phase on environment-H x mode-2-V, after
  // which the register factors as (encoded system) x (|vac> + |H>)/sqrt(2).
  const auto controlled_phase = [](const FockBasisKet& ket) {
    if (ket.occupation(kEnvMode) == ModeOccupation::H &&
        ket.occupation(1) == ModeOccupation::V) {
      return Complex{-1.0, 0.0} * FockState::basis(ket);
    }
    return FockState::basis(ket);
  };
  trace.stages.push_back(
      {apply_basis_map(controlled_phase, trace.stages.back().combined), "phase"});

  FockState::TermMap vacuum_branch;
  for (const auto& [ket, amp] : trace.stages.back().combined.terms()) {
    if (ket.occupation(kEnvMode) == ModeOccupation::Vacuum) {
      vacuum_branch.emplace(ket, amp);
    }
  }
  trace.output = strip_environment(vacuum_branch).renormalized();
  return trace;
}

FockState run_circuit(const Eigen::Vector4cd& plus_minus_amplitudes, CircuitMode mode) {
  return run_circuit_trace(plus_minus_amplitudes, mode).output;
}

}  // namespace fockzip
