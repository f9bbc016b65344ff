// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>

namespace wielandt {

// All numerical thresholds in one injectable bundle. Every report records the
// values that were in force, so reruns are reproducible.
struct Tolerances {
  double rep_coherence = 1e-10;   // agreement between map representations
  double psd = 1e-9;              // Choi PSD test, relative to lambda_max
  double pass = 1e-8;             // search pass threshold ("no violation")
  double zero = 1e-12;            // exact-zero threshold for searches
  double unital = 1e-9;           // ||phi(I) - I|| for unitality
  double peripheral_band = 1e-9;  // relative width of the peripheral band
  double pf_posdef = 1e-9;        // lambda_min/lambda_max floor for PF vectors
  double eig_floor = 1e-12;       // relative eigenvalue floor for matrix sqrt
  double kernel_rel = 1e-8;       // relative kernel threshold for PSD forms
  double kernel_guard = 1e-6;     // top of the kernel ambiguity guard band
  double subspace_angle = 1e-7;   // principal-angle agreement for subspaces
  double rank_rel = 1e-8;         // relative numerical-rank threshold
  double span_rank_rel = 1e-9;    // relative rank threshold for word spans
  double mixing_slack = 0.05;     // allowed excess over gap_ratio in mixing
};

// Budget for multistart searches. starts == 0 means "auto": 8 * D * D.
struct SearchBudget {
  int starts = 0;
  int max_iters = 500;
  std::uint64_t seed = 0xC0FFEEULL;

  int starts_for_dim(int dim) const { return starts > 0 ? starts : 8 * dim * dim; }
};

}  // namespace wielandt
