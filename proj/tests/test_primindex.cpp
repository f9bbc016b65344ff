// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include <Eigen/QR>

#include "helpers.hpp"
#include "wielandt/generators.hpp"
#include "wielandt/multdomain.hpp"
#include "wielandt/primindex.hpp"
#include "wielandt/spectral.hpp"

using namespace wielandt;
using wielandt::testing::depolarizing;
using wielandt::testing::matrix_unit;
using wielandt::testing::random_cp;
using wielandt::testing::random_unitary;
using wielandt::testing::transpose_map;

namespace {

std::vector<CMat> cycle_chord_generators() {
  return {matrix_unit(3, 1, 0), matrix_unit(3, 2, 1), matrix_unit(3, 0, 2),
          matrix_unit(3, 1, 2)};
}

Eigen::MatrixXi cycle_chord_adjacency() {
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(3, 3);
  a(1, 0) = a(2, 1) = a(0, 2) = a(1, 2) = 1;
  return a;
}

CMat random_projection(Rng& rng, int dim, int rank) {
  Eigen::HouseholderQR<CMat> qr(rng.ginibre(dim, rank));
  CMat q = qr.householderQ() * CMat::Identity(dim, rank);
  return q * q.adjoint();
}

}  // namespace

TEST_CASE("depolarizing map has index one") {
  IndexCertificate cert = primitivity_index(depolarizing(3));
  CHECK(cert.q == 1);
  CHECK(cert.bound == 8);
  CHECK(cert.within_bound);
  CHECK(cert.per_n.size() == 1);
  CHECK(cert.per_n[0].holds());
  CHECK(cert.confirmations.size() == 2);
  for (const Verdict& v : cert.confirmations) CHECK(v.holds());
}

TEST_CASE("cycle-with-chord map has index five") {
  IndexCertificate cert = primitivity_index(SuperOp::from_kraus(cycle_chord_generators()));
  CHECK(cert.q == 5);
  CHECK(cert.q == (3 - 1) * (3 - 1) + 1);
  CHECK(cert.within_bound);
  REQUIRE(cert.per_n.size() == 5);
  for (int n = 0; n < 4; ++n) {
    CHECK(cert.per_n[static_cast<size_t>(n)].fails());
    CHECK_FALSE(cert.per_n[static_cast<size_t>(n)].witness.empty());
  }
  CHECK(cert.per_n[4].holds());
  for (const Verdict& v : cert.confirmations) CHECK(v.holds());
  CHECK(classical_wielandt_index(cycle_chord_adjacency(), 12) == 5);
}

TEST_CASE("index is invariant under similarity normalization") {
  NormalizedMap nm = similarity_normalize(SuperOp::from_kraus(cycle_chord_generators()));
  CHECK(primitivity_index(nm.map).q == 5);
}

TEST_CASE("trace-preserving unital maps stay within the kappa multiple") {
  QKappaReport dep = check_q_vs_kappa(depolarizing(3));
  CHECK(dep.q == 1);
  CHECK(dep.kappa == 1);
  CHECK(dep.bound == 2);
  CHECK(dep.ok);

  // Mixed-unitary qubit map. Whenever some v has u1 v parallel to u2 v,
  // that v spans a line both Kraus operators send to a common line, which
  // puts the projection onto it inside the multiplicative domain. Rank
  // deficiency of the first power therefore comes with kappa >= 2 here.
  Rng rng(67);
  CMat u1 = random_unitary(rng, 2);
  CMat u2 = random_unitary(rng, 2);
  SuperOp mu = SuperOp::from_kraus(
      {std::sqrt(0.3) * u1, std::sqrt(0.7) * u2});
  QKappaReport mixed = check_q_vs_kappa(mu);
  CHECK(mixed.q == 2);
  CHECK(mixed.kappa == 2);
  CHECK(mixed.ok);
}

// The bound q <= (D-1)*kappa does not hold for the cycle-with-chord map.
// The chain M_{psi^n} has ranks 2, 1, 1, ... so kappa = 2 (the Gram-form
// route and the defining-equality oracle agree to 1e-8), while q = 5 > 4.
// The mechanism: psi^2 sends the matrix unit E_00 to a positive multiple
// of E_22, so a rank-one projection comes out with rank one at the
// stabilized power, which a valid kappa multiple would forbid. The first
// case below records the bound and is marked should_fail so a behavior
// change gets noticed; the second pins the observed values.
TEST_CASE("cycle-with-chord map respects the kappa multiple" *
          doctest::should_fail()) {
  NormalizedMap nm = similarity_normalize(SuperOp::from_kraus(cycle_chord_generators()));
  QKappaReport chord = check_q_vs_kappa(nm.map);
  CHECK(chord.kappa >= 3);
  CHECK(chord.kappa <= 4);
  CHECK(chord.ok);
}

TEST_CASE("cycle-with-chord map violates the kappa multiple") {
  NormalizedMap nm = similarity_normalize(SuperOp::from_kraus(cycle_chord_generators()));
  QKappaReport chord = check_q_vs_kappa(nm.map);
  CHECK(chord.q == 5);
  CHECK(chord.kappa == 2);
  CHECK(chord.bound == 4);
  CHECK_FALSE(chord.ok);
}

TEST_CASE("random ensemble respects the dimension bound") {
  Rng rng(31);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 3; ++trial) {
      NormalizedMap nm = similarity_normalize(random_cp(rng, d, 2));
      IndexCertificate cert = primitivity_index(nm.map);
      CHECK(cert.q >= 1);
      CHECK(cert.within_bound);
    }
  }
}

TEST_CASE("projections gain rank under the stabilizing power") {
  RankMonotonicityReport dep = rank_monotonicity_check(depolarizing(3), 1, 20);
  CHECK(dep.ok);
  CHECK(dep.min_output_rank == std::vector<int>{3, 3});

  Rng rng(47);
  NormalizedMap nm = similarity_normalize(random_cp(rng, 3, 2));
  CMat rho = spectral_data(nm.map).pf_left;
  KappaResult kr = kappa(nm.map, rho);
  CHECK(rank_monotonicity_check(nm.map, kr.kappa, 20).ok);
}

TEST_CASE("rank stagnation is detected") {
  CHECK_THROWS_AS(rank_monotonicity_check(transpose_map(3), 1, 4), RankViolation);
}

TEST_CASE("no equal-rank domination for primitive maps") {
  IrreducibilityProbe probe = full_irreducibility_probe(depolarizing(3), 1, 25);
  CHECK(probe.pairs == 50);
  CHECK(probe.findings == 0);
  CHECK(probe.example.empty());

  Rng rng(53);
  NormalizedMap nm = similarity_normalize(random_cp(rng, 3, 2));
  CHECK(full_irreducibility_probe(nm.map, 2, 25).findings == 0);
}

TEST_CASE("the domination detector sees the unitary conjugation pair") {
  Rng rng(59);
  const int d = 3;
  CMat u = random_unitary(rng, d);
  SuperOp phi = SuperOp::from_kraus({u});
  for (int r = 1; r <= d - 1; ++r) {
    CMat p = random_projection(rng, d, r);
    CMat q = u * p * u.adjoint();
    CHECK(range_dominated(phi.apply(p), q));
    CMat unrelated = random_projection(rng, d, r);
    CHECK_FALSE(range_dominated(phi.apply(p), unrelated));
  }
}

TEST_CASE("wielength of the full matrix unit set is one") {
  std::vector<CMat> units;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) units.push_back(matrix_unit(2, i, j));
  WielengthResult wl = wielength(units, 4);
  REQUIRE(wl.length.has_value());
  CHECK(*wl.length == 1);
  CHECK(wl.profile == std::vector<int>{4});
  CHECK_FALSE(wl.tolerance_warning);
}

TEST_CASE("the identity alone never spans") {
  WielengthResult wl = wielength({CMat::Identity(2, 2)}, 6);
  CHECK_FALSE(wl.length.has_value());
  CHECK(wl.profile == std::vector<int>(6, 1));
}

TEST_CASE("wielength of the cycle-with-chord generators counts digraph walks") {
  WielengthResult wl = wielength(cycle_chord_generators(), 10);
  REQUIRE(wl.length.has_value());
  CHECK(*wl.length == 5);
  CHECK(wl.profile == std::vector<int>{4, 5, 7, 8, 9});
  CHECK_FALSE(wl.tolerance_warning);
  for (size_t i = 1; i < wl.profile.size(); ++i)
    CHECK(wl.profile[i] >= wl.profile[i - 1]);
}

TEST_CASE("wielength dominates the primitivity index") {
  std::vector<CMat> units;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) units.push_back(matrix_unit(2, i, j));
  WielengthQReport flat = check_wielength_ge_q(units, 4);
  CHECK(flat.q == 1);
  CHECK(*flat.wielength == 1);
  CHECK(*flat.gap == 0);
  CHECK(flat.ok);

  WielengthQReport chord = check_wielength_ge_q(cycle_chord_generators(), 10);
  CHECK(chord.q == 5);
  CHECK(*chord.wielength == 5);
  CHECK(*chord.gap == 0);
  CHECK(chord.ok);

  Rng rng(61);
  for (int trial = 0; trial < 2; ++trial) {
    SuperOp phi = random_cp(rng, 3, 2);
    WielengthQReport rep = check_wielength_ge_q(phi.kraus(), 10);
    CHECK(rep.ok);
    REQUIRE(rep.gap.has_value());
    CHECK(*rep.gap >= 0);
  }
}

TEST_CASE("non-primitive maps are rejected") {
  Rng rng(67);
  SuperOp uconj = SuperOp::from_kraus({random_unitary(rng, 2)});
  CHECK_THROWS_AS(primitivity_index(uconj), NotPrimitive);
}

TEST_CASE("classical index oracle handles saturation and failure") {
  CHECK(classical_wielandt_index(Eigen::MatrixXi::Ones(3, 3), 5) == 1);
  Eigen::MatrixXi cycle = Eigen::MatrixXi::Zero(3, 3);
  cycle(1, 0) = cycle(2, 1) = cycle(0, 2) = 1;
  CHECK_THROWS_AS(classical_wielandt_index(cycle, 20), CapExceeded);
}

TEST_CASE("wielength input validation") {
  CHECK_THROWS_AS(wielength({}, 4), EmptySet);
  std::vector<CMat> mixed = {CMat::Identity(2, 2), CMat::Identity(3, 3)};
  CHECK_THROWS_AS(wielength(mixed, 4), DimensionMismatch);
}
