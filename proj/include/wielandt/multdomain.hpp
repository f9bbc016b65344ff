// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <optional>
#include <vector>

#include "wielandt/subspace.hpp"
#include "wielandt/superop.hpp"

namespace wielandt {

// Kernel of the norm-preservation forms for one power of the map, with the
// diagnostics needed to trust an integer rank.
struct MultDomain {
  SubspaceBasis basis;
  double kernel_eigen_gap = 0.0;  // smallest non-kernel eigenvalue, relative
  bool tolerance_warning = false;  // eigenvalues inside the guard band
  bool contains_identity = false;
};

// Subspace where phi^n preserves both weighted norms <a,a>_rho and
// <a*,a*>_rho, computed as the joint kernel of two PSD forms. rho must be
// the positive definite fixed point of the adjoint map.
MultDomain mult_domain(const SuperOp& phi, int n, const CMat& rho,
                       const Tolerances& tol = {});

// Independent route to the same subspace: linear multiplicativity
// constraints phi^n(ab) = phi^n(a)phi^n(b) and phi^n(ba) = phi^n(b)phi^n(a)
// polarized over a Hermitian operator basis of b, refined until the defining
// equalities hold on every kernel element, then verified closed under
// products. Intended as a cross-check for small dimensions.
SubspaceBasis mult_domain_oracle(const SuperOp& phi, int n, const Tolerances& tol = {});

struct KappaResult {
  int kappa = 0;
  // Entries for n = 1, 2, ..., including the confirming step at kappa + 1.
  std::vector<MultDomain> chain;
};

// First n at which the subspace chain stabilizes. The stabilized subspace
// must be the scalars and the index must respect the 2D-2 ceiling; anything
// else aborts loudly.
KappaResult kappa(const SuperOp& phi, const CMat& rho, const Tolerances& tol = {});

struct NestingReport {
  std::vector<int> ranks;          // rank at n = 1..n_max
  double worst_containment = 0.0;  // max projection defect across levels
  bool nested = true;
  bool monotone = true;
  bool ok = false;
};

// Checks that each level's basis lies inside the previous level and that
// ranks never increase.
NestingReport verify_nesting(const SuperOp& phi, const CMat& rho, int n_max,
                             const Tolerances& tol = {});

// Closure under adjoints and pairwise products, up to projection residual.
bool is_subalgebra(const SubspaceBasis& basis, double tol = 1e-7);

}  // namespace wielandt
