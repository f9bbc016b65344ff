// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <string>
#include <vector>

#include "wielandt/linalg.hpp"

namespace wielandt {

// A linear map on D x D complex matrices. The natural representation (the
// D^2 x D^2 matrix acting on column-stacked inputs) is always present; a
// Kraus list is carried when the map was built from one. Instances are
// immutable and safe to share across threads.
class SuperOp {
public:
  static SuperOp identity(int dim);
  static SuperOp from_natural(CMat natural, std::string metadata = {});
  static SuperOp from_kraus(std::vector<CMat> kraus, std::string metadata = {});
  // Accepts any Choi matrix, PSD or not; complete positivity is a separate
  // question answered by the positivity module.
  static SuperOp from_choi(const CMat& choi, std::string metadata = {});

  int dim() const { return dim_; }
  const CMat& natural() const { return natural_; }
  bool has_kraus() const { return !kraus_.empty(); }
  const std::vector<CMat>& kraus() const { return kraus_; }
  const std::string& metadata() const { return metadata_; }
  SuperOp with_metadata(std::string metadata) const;

  CMat choi() const;

  CMat apply(const CMat& a) const;

  // (*this) after rhs: (phi.compose(psi))(a) = phi(psi(a)).
  SuperOp compose(const SuperOp& rhs) const;
  SuperOp power(int n) const;

  // Adjoint for the unweighted Hilbert-Schmidt inner product.
  SuperOp hs_adjoint() const;

  bool is_unital(double tol = 1e-9) const;
  bool is_trace_preserving(double tol = 1e-9) const;

private:
  SuperOp(int dim, CMat natural, std::vector<CMat> kraus, std::string metadata)
      : dim_(dim),
        natural_(std::move(natural)),
        kraus_(std::move(kraus)),
        metadata_(std::move(metadata)) {}

  int dim_;
  CMat natural_;
  std::vector<CMat> kraus_;
  std::string metadata_;
};

// Reshuffles between the natural representation and the Choi matrix
// J = sum_ij E_ij (x) phi(E_ij). The transformation is an involution on
// the entries: J[(i*D+k),(j*D+l)] = Phi[(l*D+k),(j*D+i)].
CMat natural_to_choi(const CMat& natural);
CMat choi_to_natural(const CMat& choi);

// Kraus operators from a PSD Choi matrix, one per eigenvalue above
// rank_rel * lambda_max. Eigenvalues below -psd_tol * lambda_max raise
// NotCompletelyPositive; small negatives are clipped.
std::vector<CMat> choi_to_kraus(const CMat& choi, double psd_tol = 1e-9,
                                double rank_rel = 1e-8);

// Adjoint for <a,b>_rho = Tr(rho a* b): a |-> phi*(a rho) rho^{-1}.
SuperOp rho_adjoint(const SuperOp& phi, const CMat& rho, double posdef_tol = 1e-9);

// phi (x) Id_copies acting on M_{copies*D} viewed as copies x copies blocks
// of D x D matrices, phi applied to each block.
SuperOp amplify(const SuperOp& phi, int copies);

struct NormalizedMap {
  SuperOp map;    // phi_z, unital with spectral radius 1
  CMat z;         // positive definite eigenvector of phi, trace 1
  double radius;  // spectral radius of the input map
};

// Conjugates phi by the square root of its leading eigenvector z:
// phi_z(a) = r^{-1} z^{-1/2} phi(z^{1/2} a z^{1/2}) z^{-1/2}.
// The caller is responsible for phi being primitive; a leading eigenvector
// that fails to be positive definite raises NotPrimitive.
NormalizedMap similarity_normalize(const SuperOp& phi, const Tolerances& tol = {});

}  // namespace wielandt
