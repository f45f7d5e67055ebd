#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fockzip/fock.hpp"

using namespace fockzip;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

FockState random_state(std::size_t modes, std::size_t max_terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> occ(0, 2);
  std::normal_distribution<double> gauss(0.0, 1.0);
  FockState::TermMap terms;
  for (std::size_t t = 0; t < max_terms; ++t) {
    std::string pattern;
    for (std::size_t m = 0; m < modes; ++m) {
      pattern += ".HV"[occ(rng)];
    }
    terms[FockBasisKet(pattern)] += Complex{gauss(rng), gauss(rng)};
  }
  return FockState::normalized(modes, std::move(terms));
}

}  // namespace

TEST_CASE("basis kets validate and compare positionwise") {
  FockBasisKet ket("HV.");
  CHECK(ket.mode_count() == 3);
  CHECK(ket.occupation(0) == ModeOccupation::H);
  CHECK(ket.occupation(2) == ModeOccupation::Vacuum);
  CHECK(ket.photon_count() == 2);
  CHECK(ket == FockBasisKet("HV."));
  CHECK(ket != FockBasisKet("VH."));
  CHECK_THROWS_AS(FockBasisKet("HX."), ValidationError);
  CHECK_THROWS_AS(ket.occupation(3), DimensionError);
}

TEST_CASE("inner product on kets and superpositions") {
  const FockState v = FockState::basis(FockBasisKet("V."));
  const FockState h = FockState::basis(FockBasisKet("H."));
  CHECK(inner_product(v, v).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(inner_product(h, v)) == doctest::Approx(0.0).epsilon(1e-12));

  const FockState s = FockState::normalized(
      2, {{FockBasisKet("H."), Complex{1.0, 0.0}}, {FockBasisKet("V."), Complex{1.0, 0.0}}});
  CHECK(inner_product(s, h).real() == doctest::Approx(kInvSqrt2).epsilon(1e-12));

  CHECK_THROWS_AS(inner_product(v, FockState::basis(FockBasisKet("V"))), DimensionError);
}

TEST_CASE("inner product is conjugate symmetric and sesquilinear") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const FockState a = random_state(3, 6, rng);
    const FockState b = random_state(3, 6, rng);
    const Complex ab = inner_product(a, b);
    const Complex ba = inner_product(b, a);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-12);
    // Cauchy-Schwarz for normalized states
    CHECK(std::abs(ab) <= 1.0 + 1e-12);
    CHECK(inner_product(a, a).real() >= 0.0);
    CHECK(std::abs(inner_product(a, a).imag()) < 1e-14);
  }
}

TEST_CASE("tensor products concatenate modes and multiply amplitudes") {
  const FockState h = FockState::basis(FockBasisKet("H"));
  const FockState v = FockState::basis(FockBasisKet("V"));
  const FockState hv = tensor(h, v);
  CHECK(hv.mode_count() == 2);
  CHECK(hv.amplitude(FockBasisKet("HV")).real() == doctest::Approx(1.0));

  const FockState plus = FockState::normalized(
      1, {{FockBasisKet("H"), Complex{1.0, 0.0}}, {FockBasisKet("V"), Complex{1.0, 0.0}}});
  const FockState ph = tensor(plus, h);
  CHECK(ph.amplitude(FockBasisKet("HH")).real() == doctest::Approx(kInvSqrt2));
  CHECK(ph.amplitude(FockBasisKet("VH")).real() == doctest::Approx(kInvSqrt2));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const FockState a = random_state(2, 4, rng);
    const FockState b = random_state(3, 5, rng);
    CHECK(tensor(a, b).norm() == doctest::Approx(a.norm() * b.norm()).epsilon(1e-12));
    CHECK(expected_photon_number(tensor(a, b)) ==
          doctest::Approx(expected_photon_number(a) + expected_photon_number(b))
              .epsilon(1e-12));
  }
}

TEST_CASE("apply_basis_map extends rules linearly") {
  std::mt19937_64 rng(13);
  const FockState s = random_state(3, 8, rng);

  const auto identity = [](const FockBasisKet& ket) { return FockState::basis(ket); };
  CHECK(apply_basis_map(identity, s) == s);

  const auto swap_mode1 = [](const FockBasisKet& ket) {
    switch (ket.occupation(0)) {
      case ModeOccupation::H:
        return FockState::basis(ket.with_occupation(0, ModeOccupation::V));
      case ModeOccupation::V:
        return FockState::basis(ket.with_occupation(0, ModeOccupation::H));
      case ModeOccupation::Vacuum:
        break;
    }
    return FockState::basis(ket);
  };
  const FockState swapped = apply_basis_map(swap_mode1, FockState::basis(FockBasisKet("H.")));
  CHECK(swapped.amplitude(FockBasisKet("V.")).real() == doctest::Approx(1.0));

  // A unitary-on-basis rule preserves the Gram matrix.
  const double angle = 0.37;
  const auto rotate = [angle](const FockBasisKet& ket) {
    const FockBasisKet h = ket.with_occupation(0, ModeOccupation::H);
    const FockBasisKet v = ket.with_occupation(0, ModeOccupation::V);
    switch (ket.occupation(0)) {
      case ModeOccupation::H:
        return FockState::from_terms(ket.mode_count(),
                                     {{h, Complex{std::cos(angle), 0.0}},
                                      {v, Complex{std::sin(angle), 0.0}}});
      case ModeOccupation::V:
        return FockState::from_terms(ket.mode_count(),
                                     {{h, Complex{-std::sin(angle), 0.0}},
                                      {v, Complex{std::cos(angle), 0.0}}});
      case ModeOccupation::Vacuum:
        break;
    }
    return FockState::basis(ket);
  };
  std::vector<FockState> states;
  for (int i = 0; i < 6; ++i) {
    states.push_back(random_state(3, 6, rng));
  }
  for (const FockState& a : states) {
    for (const FockState& b : states) {
      const Complex before = inner_product(a, b);
      const Complex after = inner_product(apply_basis_map(rotate, a), apply_basis_map(rotate, b));
      CHECK(std::abs(before - after) < 1e-10);
    }
  }

  const auto undefined = [](const FockBasisKet& ket) -> FockState {
    if (ket.occupation(0) == ModeOccupation::H) {
      throw DomainError("rule undefined for H in mode 1");
    }
    return FockState::basis(ket);
  };
  CHECK_THROWS_AS(apply_basis_map(undefined, FockState::basis(FockBasisKet("H.."))),
                  DomainError);
}

TEST_CASE("expected photon number") {
  CHECK(expected_photon_number(FockState::basis(FockBasisKet("HV."))) == doctest::Approx(2.0));
  const FockState mixed_lengths = FockState::normalized(
      2, {{FockBasisKet("H."), Complex{1.0, 0.0}}, {FockBasisKet("HV"), Complex{1.0, 0.0}}});
  CHECK(expected_photon_number(mixed_lengths) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(expected_photon_number(FockState::vacuum(4)) == doctest::Approx(0.0));
}

TEST_CASE("normalization contract and pruning") {
  const FockState s = FockState::normalized(
      1, {{FockBasisKet("H"), Complex{3.0, 0.0}}, {FockBasisKet("V"), Complex{4.0, 0.0}}});
  CHECK(s.is_normalized());
  CHECK(s.amplitude(FockBasisKet("H")).real() == doctest::Approx(0.6));

  // Terms below the prune threshold are never stored.
  const FockState pruned = FockState::from_terms(
      1, {{FockBasisKet("H"), Complex{1.0, 0.0}}, {FockBasisKet("V"), Complex{1e-15, 0.0}}});
  CHECK(pruned.term_count() == 1);

  CHECK_THROWS_AS(FockState::normalized(1, {{FockBasisKet("H"), Complex{0.0, 0.0}}}),
                  DomainError);
  CHECK_THROWS_AS(FockState::from_terms(2, {{FockBasisKet("H"), Complex{1.0, 0.0}}}),
                  DimensionError);
}

TEST_CASE("pruning shifts inner products by far less than 1e-12") {
  // A heavy head term plus 2^12 distinct tail terms just below the prune
  // threshold. Dropping the tail must not move inner products materially,
  // even against a probe that overlaps every tail ket.
  const std::size_t modes = 12;
  const int tail_count = 1 << 12;
  const auto pattern_for = [&](int value) {
    std::string pattern(modes, '.');
    for (std::size_t m = 0; m < modes && value > 0; ++m) {
      pattern[m] = ".HV"[value % 3];
      value /= 3;
    }
    return pattern;
  };

  FockState::TermMap merged;
  const FockBasisKet head(std::string(modes, 'H'));
  merged[head] = Complex{1.0, 0.0};
  FockState::TermMap probe_terms;
  for (int t = 1; t <= tail_count; ++t) {
    const FockBasisKet ket(pattern_for(t));
    if (ket == head) {
      continue;
    }
    merged[ket] = Complex{0.9e-14, 0.0};
    probe_terms[ket] = Complex{1.0, 0.0};
  }
  probe_terms[head] = Complex{1.0, 0.0};

  const FockState pruned = FockState::from_terms(modes, merged);
  CHECK(pruned.term_count() == 1);  // the tail is gone
  const FockState probe = FockState::normalized(modes, std::move(probe_terms));

  // Reference value computed without the library's pruning.
  Complex exact{0.0, 0.0};
  for (const auto& [ket, amp] : merged) {
    exact += std::conj(probe.amplitude(ket)) * amp;
  }
  CHECK(std::abs(inner_product(probe, pruned) - exact) < 1e-12);
}

TEST_CASE("state JSON round trip") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const FockState s = random_state(3, 6, rng);
    CHECK(fock_state_from_json(to_json(s)) == s);
  }
  const FockState fixed = FockState::normalized(
      2, {{FockBasisKet("H."), Complex{1.0, 0.0}}, {FockBasisKet("VV"), Complex{0.0, 1.0}}});
  const std::string text = to_json(fixed);
  CHECK(text.find("\"occupations\":\"H.\"") != std::string::npos);
  CHECK(fock_state_from_json(text) == fixed);
  CHECK_THROWS_AS(fock_state_from_json("{"), ValidationError);
  CHECK_THROWS_AS(fock_state_from_json("[{\"occupations\":\"HQ\",\"re\":1,\"im\":0}]"),
                  ValidationError);
}

TEST_CASE("mode frequencies validate") {
  const ModeFrequencies freqs = ModeFrequencies::uniform(3);
  CHECK(freqs.omega(2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(ModeFrequencies({1.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(ModeFrequencies({1.0, -2.0}), ValidationError);
}
