#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fockzip/coder.hpp"
#include "fockzip/schumacher.hpp"
#include "oracles.hpp"

using namespace fockzip;

TEST_CASE("uniform eigenvalues: every sequence is typical for any epsilon") {
  const EigenDecomposition eig = diagonalize(0.5 * Eigen::MatrixXcd::Identity(2, 2));
  for (int n : {1, 3, 6}) {
    const TypicalSet ts = typical_set(eig, n, 1e-9);
    CHECK(ts.dimension() == (std::uint64_t{1} << n));
    CHECK(projection_fidelity(ts) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(schumacher_rate(ts) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("theta=45, n=3: small windows are empty, eps=0.5 captures two classes") {
  const EigenDecomposition eig = oracles::eigenbasis_for_theta_degrees(45.0);
  // Enumerated directly: the nearest per-letter rate to S=0.6009 is 0.2284
  // (all-plus), 0.372 away, so eps=0.2 keeps nothing.
  const TypicalSet empty = typical_set(eig, 3, 0.2);
  CHECK(empty.dimension() == 0);
  CHECK(projection_fidelity(empty) == doctest::Approx(0.0));
  CHECK_THROWS_AS(schumacher_rate(empty), DomainError);

  const TypicalSet loose = typical_set(eig, 3, 0.5);
  CHECK(loose.dimension() == 4);  // k=0 and the three k=1 sequences
  CHECK(projection_fidelity(loose) == doctest::Approx(0.941941738241592).epsilon(1e-12));
}

TEST_CASE("huge epsilon admits every positive-probability sequence") {
  const EigenDecomposition eig = oracles::eigenbasis_for_theta_degrees(45.0);
  for (int n : {2, 5}) {
    const TypicalSet ts = typical_set(eig, n, 1e9);
    CHECK(ts.dimension() == (std::uint64_t{1} << n));
    CHECK(projection_fidelity(ts) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("pure source: the single surviving sequence is typical") {
  const EigenDecomposition eig = oracles::eigenbasis_for_theta_degrees(90.0);
  CHECK(eig.eigenvalue(0) == doctest::Approx(1.0).epsilon(1e-12));
  for (int n : {1, 4, 8}) {
    const TypicalSet ts = typical_set(eig, n, 0.05);
    CHECK(ts.dimension() == 1);
    CHECK(projection_fidelity(ts) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(schumacher_rate(ts) == doctest::Approx(0.0));
  }
}

TEST_CASE("frozen fidelities at theta=45") {
  const EigenDecomposition eig = oracles::eigenbasis_for_theta_degrees(45.0);
  // eps=0.15 (the acceptance window)
  CHECK(projection_fidelity(typical_set(eig, 4, 0.15)) == doctest::Approx(0.0));
  CHECK(projection_fidelity(typical_set(eig, 8, 0.15)) ==
        doctest::Approx(0.386708885480697).epsilon(1e-12));
  CHECK(projection_fidelity(typical_set(eig, 12, 0.15)) ==
        doctest::Approx(0.290542384367305).epsilon(1e-12));
  CHECK(projection_fidelity(typical_set(eig, 16, 0.15)) ==
        doctest::Approx(0.504899019818302).epsilon(1e-12));
  // eps=0.1: enumeration gives a non-monotone n-grid (0, 0.3867, 0.2905,
  // 0.2804) — integer effects in the typical k-window.
  CHECK(projection_fidelity(typical_set(eig, 4, 0.1)) == doctest::Approx(0.0));
  CHECK(projection_fidelity(typical_set(eig, 8, 0.1)) ==
        doctest::Approx(0.386708885480697).epsilon(1e-12));
  CHECK(projection_fidelity(typical_set(eig, 12, 0.1)) ==
        doctest::Approx(0.290542384367305).epsilon(1e-12));
  CHECK(projection_fidelity(typical_set(eig, 16, 0.1)) ==
        doctest::Approx(0.280394553955730).epsilon(1e-12));
}

TEST_CASE("fidelity grows from n=4 to n=16 at eps=0.15") {
  const EigenDecomposition eig = oracles::eigenbasis_for_theta_degrees(45.0);
  CHECK(projection_fidelity(typical_set(eig, 16, 0.15)) >
        projection_fidelity(typical_set(eig, 4, 0.15)));
}

TEST_CASE("membership matches the direct-inequality oracle up to n=10") {
  for (double degrees : {30.0, 45.0, 90.0}) {
    const EigenDecomposition eig = oracles::eigenbasis_for_theta_degrees(degrees);
    for (int n = 1; n <= 10; ++n) {
      for (double epsilon : {0.05, 0.15, 0.4}) {
        const TypicalSet ts = typical_set(eig, n, epsilon);
        const auto oracle = oracles::typical_members(eig.eigenvalues(), n, epsilon);
        REQUIRE(ts.members.size() == oracle.size());
        for (std::size_t i = 0; i < oracle.size(); ++i) {
          CHECK(ts.members[i] == oracle[i]);  // both lexicographic
        }
      }
    }
  }
}

TEST_CASE("AEP sandwich") {
  const double delta = 0.1;
  // Upper bound always: dimension <= 2^{n(S+eps)}.
  for (double degrees : {30.0, 45.0, 60.0}) {
    const EigenDecomposition eig = oracles::eigenbasis_for_theta_degrees(degrees);
    const double entropy = shannon_entropy(eig.eigenvalues());
    for (int n = 2; n <= 16; n += 2) {
      const TypicalSet ts = typical_set(eig, n, 0.15);
      CHECK(static_cast<double>(ts.dimension()) <=
            std::exp2(n * (entropy + 0.15)) * (1.0 + 1e-12));
      if (projection_fidelity(ts) >= 1.0 - delta) {
        CHECK(static_cast<double>(ts.dimension()) >=
              (1.0 - delta) * std::exp2(n * (entropy - 0.15)) * (1.0 - 1e-12));
      }
      // rate <= S + eps whenever the set is nonempty
      if (ts.dimension() > 0) {
        CHECK(schumacher_rate(ts) <= entropy + 0.15 + 1e-12);
      }
    }
  }
  // The lower branch actually fires for the uniform source.
  const EigenDecomposition uniform = diagonalize(0.5 * Eigen::MatrixXcd::Identity(2, 2));
  const TypicalSet ts = typical_set(uniform, 8, 0.15);
  REQUIRE(projection_fidelity(ts) >= 1.0 - delta);
  CHECK(static_cast<double>(ts.dimension()) >= (1.0 - delta) * std::exp2(8 * (1.0 - 0.15)));
}

TEST_CASE("lossy versus lossless contrast") {
  // Non-uniform, non-degenerate eigenvalues: the projection always loses
  // probability at finite n while the 1-1 round trip stays exact.
  std::mt19937_64 rng(77);
  for (double degrees : {30.0, 45.0, 60.0}) {
    const EigenDecomposition eig = oracles::eigenbasis_for_theta_degrees(degrees);
    for (int n = 2; n <= 8; n += 2) {
      CHECK(projection_fidelity(typical_set(eig, n, 0.15)) < 1.0);
      const Codebook book = build_codebook(eig, n);
      const MessageState message = MessageState::random(2, n, rng);
      CHECK(fidelity(decode(encode(message, book), book, n), message) >= 1.0 - 1e-10);
    }
  }
}

TEST_CASE("typical_set validates inputs") {
  const EigenDecomposition eig = oracles::eigenbasis_for_theta_degrees(45.0);
  CHECK_THROWS_AS(typical_set(eig, 0, 0.1), DomainError);
  CHECK_THROWS_AS(typical_set(eig, 3, 0.0), DomainError);
  CHECK_THROWS_AS(typical_set(eig, 30, 0.1, 1 << 20), ResourceError);
}
