// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <vector>

#include "wielandt/superop.hpp"

namespace wielandt {

// Eigenstructure of the natural representation. Leading eigenvectors are
// devectorized, phase-fixed to real positive trace, Hermitized, and
// trace-normalized; residuals and Hermitization defects are kept so callers
// can judge how trustworthy the extraction was.
struct SpectralData {
  std::vector<Complex> eigenvalues;  // sorted by modulus desc, then argument
  double radius = 0.0;
  double gap_ratio = 0.0;  // second-largest modulus over radius
  int peripheral_count = 0;
  bool degenerate_peripheral = false;
  CMat pf_right;  // z with phi(z) = r z, trace 1
  CMat pf_left;   // rho with phi*(rho) = r rho, trace 1
  double right_residual = 0.0;
  double left_residual = 0.0;
  double right_herm_defect = 0.0;
  double left_herm_defect = 0.0;
};

SpectralData spectral_data(const SuperOp& phi, const Tolerances& tol = {});

struct PrimitivityCertificate {
  bool primitive = false;
  bool unique_peripheral = false;
  bool right_positive_definite = false;
  bool left_positive_definite = false;
  double right_definiteness = 0.0;  // lambda_min(z) / lambda_max(z)
  double left_definiteness = 0.0;
  double gap_ratio = 0.0;
  double radius = 0.0;
};

// Spectral certification of primitivity: a unique peripheral eigenvalue and
// positive definite leading eigenvectors on both sides. Eigenvalue moduli
// resting inside the guard band just below the peripheral cutoff raise
// InconclusiveSpectrum instead of silently tipping either way.
PrimitivityCertificate is_primitive(const SpectralData& data, const Tolerances& tol = {});
PrimitivityCertificate is_primitive(const SuperOp& phi, const Tolerances& tol = {});

struct MixingTrial {
  std::vector<double> errors;  // errors[k] = || phi^{k+1}(a) - <rho,a> I ||
  double rate = 0.0;           // geometric decay rate over the tail window
};

// Convergence record for one input matrix toward <rho,a> I.
MixingTrial mixing_trial(const SuperOp& phi, const CMat& a, const CMat& rho, int n_max);

struct MixingReport {
  int n_max = 0;
  double gap_ratio = 0.0;
  double slack = 0.0;
  std::vector<MixingTrial> trials;
  double max_rate = 0.0;
  bool ok = false;  // max_rate <= gap_ratio + slack
};

// Iterates random unit-norm inputs and records convergence toward the
// equilibrium <rho,a> I. Requires a primitive unital map.
MixingReport strong_mixing_check(const SuperOp& phi, int trials,
                                 std::uint64_t seed = 0x5EEDULL,
                                 const Tolerances& tol = {});

struct UnitalityRadiusReport {
  double radius = 0.0;
  double unital_defect = 0.0;  // || phi(I) - I ||
  bool radius_is_one = false;
  bool unital = false;
  bool consistent = false;  // the two flags agree
};

// For primitive maps, spectral radius 1 and unitality must co-occur.
UnitalityRadiusReport unitality_radius_check(const SuperOp& phi,
                                             const Tolerances& tol = {});

}  // namespace wielandt
