// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "wielandt/multdomain.hpp"
#include "wielandt/spectral.hpp"

using namespace wielandt;
using wielandt::testing::depolarizing;
using wielandt::testing::matrix_unit;
using wielandt::testing::random_cp;
using wielandt::testing::random_unitary;

namespace {

SuperOp cycle_chord_map() {
  std::vector<CMat> kraus = {matrix_unit(3, 1, 0), matrix_unit(3, 2, 1),
                             matrix_unit(3, 0, 2), matrix_unit(3, 1, 2)};
  return SuperOp::from_kraus(std::move(kraus));
}

struct UnitalPair {
  SuperOp phi;
  CMat rho;
};

// Normalize to a unital map and fetch the fixed point of its adjoint.
UnitalPair normalized(const SuperOp& raw) {
  NormalizedMap nm = similarity_normalize(raw);
  SpectralData data = spectral_data(nm.map);
  return {nm.map, data.pf_left};
}

}  // namespace

TEST_CASE("depolarizing multiplicative domains are the scalars at every power") {
  for (int d : {2, 3}) {
    SuperOp dep = depolarizing(d);
    CMat rho = CMat::Identity(d, d) / static_cast<double>(d);
    for (int n = 1; n <= 3; ++n) {
      MultDomain md = mult_domain(dep, n, rho);
      CHECK(md.basis.rank() == 1);
      CHECK(md.contains_identity);
      CHECK(md.kernel_eigen_gap > 0.5);
      CHECK_FALSE(md.tolerance_warning);
    }
  }
}

TEST_CASE("unitary conjugation preserves both forms on all of the matrix algebra") {
  Rng rng(77);
  const int d = 3;
  SuperOp phi = SuperOp::from_kraus({random_unitary(rng, d)});
  CMat rho = CMat::Identity(d, d) / static_cast<double>(d);
  MultDomain md = mult_domain(phi, 1, rho);
  CHECK(md.basis.rank() == d * d);
  CHECK(md.contains_identity);
  CHECK(is_subalgebra(md.basis));
  CHECK_THROWS_AS(kappa(phi, rho), NotPrimitive);
}

TEST_CASE("identity map kernels are everything on both routes") {
  const int d = 3;
  SuperOp id_map = SuperOp::identity(d);
  CMat rho = CMat::Identity(d, d) / static_cast<double>(d);
  CHECK(mult_domain(id_map, 1, rho).basis.rank() == d * d);
  SubspaceBasis oracle = mult_domain_oracle(id_map, 1);
  CHECK(oracle.rank() == d * d);
  CHECK(is_subalgebra(oracle));
}

TEST_CASE("forms route and multiplicativity oracle agree on a random map") {
  Rng rng(9);
  UnitalPair up = normalized(random_cp(rng, 3, 2));
  for (int n = 1; n <= 2; ++n) {
    MultDomain md = mult_domain(up.phi, n, up.rho);
    SubspaceBasis oracle = mult_domain_oracle(up.phi, n);
    CHECK(md.basis.rank() == oracle.rank());
    CHECK(max_principal_angle(md.basis, oracle) <= 1e-6);
  }
}

TEST_CASE("kappa of the depolarizing map is one") {
  SuperOp dep = depolarizing(3);
  CMat rho = CMat::Identity(3, 3) / 3.0;
  KappaResult result = kappa(dep, rho);
  CHECK(result.kappa == 1);
  CHECK(result.chain.size() == 2);
  for (const MultDomain& md : result.chain) CHECK(md.basis.rank() == 1);
}

TEST_CASE("kappa chains of random normalized maps stop at the scalars") {
  Rng rng(13);
  for (int trial = 0; trial < 3; ++trial) {
    UnitalPair up = normalized(random_cp(rng, 3, 2));
    KappaResult result = kappa(up.phi, up.rho);
    CHECK(result.kappa >= 1);
    CHECK(result.kappa <= 4);
    CHECK(result.chain.back().basis.rank() == 1);
    CHECK(result.chain.back().contains_identity);
    SubspaceBasis oracle = mult_domain_oracle(up.phi, result.kappa);
    CHECK(max_principal_angle(result.chain.back().basis, oracle) <= 1e-6);
  }
}

TEST_CASE("cycle-with-chord map respects the kappa ceiling") {
  UnitalPair up = normalized(cycle_chord_map());
  KappaResult result = kappa(up.phi, up.rho);
  CHECK(result.kappa <= 4);
  CHECK(result.chain.back().basis.rank() == 1);
  int prev = up.phi.dim() * up.phi.dim();
  for (const MultDomain& md : result.chain) {
    CHECK(md.basis.rank() <= prev);
    prev = md.basis.rank();
  }
}

TEST_CASE("nesting report certifies the descending chain") {
  Rng rng(21);
  UnitalPair up = normalized(random_cp(rng, 3, 3));
  NestingReport report = verify_nesting(up.phi, up.rho, 4);
  CHECK(report.ok);
  CHECK(report.nested);
  CHECK(report.monotone);
  CHECK(report.ranks.size() == 4);
  CHECK(report.worst_containment <= 1e-7);
  for (size_t i = 1; i < report.ranks.size(); ++i)
    CHECK(report.ranks[i] <= report.ranks[i - 1]);
}

TEST_CASE("subalgebra detection distinguishes closed spans") {
  const int d = 2;
  std::vector<CMat> scalars = {CMat::Identity(d, d) / std::sqrt(2.0)};
  CHECK(is_subalgebra(SubspaceBasis(d, scalars)));

  std::vector<CMat> units = {matrix_unit(2, 0, 0), matrix_unit(2, 0, 1),
                             matrix_unit(2, 1, 0), matrix_unit(2, 1, 1)};
  CHECK(is_subalgebra(SubspaceBasis(d, units)));

  SubspaceBasis slanted = SubspaceBasis::from_span(
      d, {CMat::Identity(d, d), matrix_unit(2, 0, 1)});
  CHECK_FALSE(is_subalgebra(slanted));
}

TEST_CASE("weight must be positive definite") {
  SuperOp dep = depolarizing(2);
  CMat rho = CMat::Zero(2, 2);
  rho(0, 0) = 1.0;
  CHECK_THROWS_AS(mult_domain(dep, 1, rho), WeightNotPositiveDefinite);
}

TEST_CASE("norm expansion trips the form gate") {
  SuperOp dep = depolarizing(2);
  SuperOp doubled = SuperOp::from_natural(2.0 * dep.natural());
  CMat rho = CMat::Identity(2, 2) / 2.0;
  CHECK_THROWS_AS(mult_domain(doubled, 1, rho), FormNotPSD);
}
