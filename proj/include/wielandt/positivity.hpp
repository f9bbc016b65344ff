// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include "wielandt/superop.hpp"
#include "wielandt/verdict.hpp"

namespace wielandt {

// Exact decision through the spectrum of the Choi matrix.
Verdict is_completely_positive(const SuperOp& phi, const Tolerances& tol = {});

// Minimizes lambda_min(phi(vv*)) over unit vectors by multistart projected
// descent. Fails is sound; Holds means no violation was found at this effort
// (a proof only when the map is completely positive).
Verdict check_positive(const SuperOp& phi, const SearchBudget& budget = {},
                       const Tolerances& tol = {});

// Complete positivity settles it immediately; otherwise searches for a unit
// w in C^{2D} with (phi (x) Id_2)(ww*) not PSD. Never upgrades a fruitless
// search to Holds.
Verdict check_two_positive(const SuperOp& phi, const SearchBudget& budget = {},
                           const Tolerances& tol = {});

// Sufficient route: unital and 2-positive. Falsification route: searches for
// a unit-norm a with phi(a*a) - phi(a)*phi(a) not PSD.
Verdict check_schwarz(const SuperOp& phi, const SearchBudget& budget = {},
                      const Tolerances& tol = {});

// With a Kraus list, strict positivity is equivalent to the absence of a
// rank-one matrix orthogonal to the span of the Kraus operators; decided by
// alternating eigenvector minimization of |P_span(w v*)|^2 over unit v, w.
// Without one, falls back to the descent on lambda_min(phi(vv*)).
Verdict is_strictly_positive(const SuperOp& phi, const SearchBudget& budget = {},
                             const Tolerances& tol = {});

// The Kraus-span route above, on an explicit orthonormal basis of a subspace
// of M_D. Exposed for callers that track operator spans of their own.
Verdict strict_positivity_from_span(const std::vector<CMat>& basis, int dim,
                                    const SearchBudget& budget = {},
                                    const Tolerances& tol = {});

}  // namespace wielandt
