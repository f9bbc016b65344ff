// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "wielandt/errors.hpp"
#include "wielandt/tolerances.hpp"

namespace wielandt {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

// Column-stacking vectorization. vec(AXB) = (B^T kron A) vec(X).
CVec vec(const CMat& a);
CMat devec(const CVec& v, int dim);

CMat kron(const CMat& a, const CMat& b);

inline CMat hermitize(const CMat& a) { return 0.5 * (a + a.adjoint()); }

double hs_norm(const CMat& a);
Complex hs_inner(const CMat& a, const CMat& b);  // Tr(a* b)

bool is_hermitian(const CMat& a, double tol = 1e-10);
bool is_psd(const CMat& a, double tol = 1e-10);
bool is_projection(const CMat& a, double tol = 1e-10);

// Eigenvalues of the Hermitian part, ascending.
RVec herm_eigenvalues(const CMat& a);
double lambda_min(const CMat& a);
double lambda_max(const CMat& a);

// Count of eigenvalues above rel_tol * lambda_max (Hermitian input).
int numerical_rank_psd(const CMat& a, double rel_tol);

// Hermitian p-th power through the eigendecomposition. Eigenvalues below
// floor_rel * lambda_max raise SingularEigenvector for negative powers.
CMat hermitian_power(const CMat& a, double p, double floor_rel = 1e-12);

// Inner product <a,b>_z = Tr(z a* b) for a positive definite weight z.
class WeightedInner {
public:
  WeightedInner(CMat weight, double posdef_tol = 1e-9);
  const CMat& weight() const { return weight_; }
  Complex inner(const CMat& a, const CMat& b) const;
  double norm_sq(const CMat& a) const;

private:
  CMat weight_;
};

// Orthonormal basis (as vectorized columns) of the column span of `cols`,
// keeping singular directions above rel_tol * sigma_max.
CMat orthonormal_span(const CMat& cols, double rel_tol);

// Orthonormal Hermitian basis of M_D: E_ii, (E_ij+E_ji)/sqrt(2),
// i(E_ij-E_ji)/sqrt(2).
std::vector<CMat> hermitian_operator_basis(int dim);

// Principal angles (radians, ascending) between subspaces with orthonormal
// bases in the columns of u and v.
std::vector<double> principal_angles(const CMat& u, const CMat& v);

}  // namespace wielandt
