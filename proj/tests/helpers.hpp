// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <doctest.h>

#include <cmath>
#include <vector>

#include "wielandt/linalg.hpp"
#include "wielandt/rng.hpp"
#include "wielandt/superop.hpp"

namespace wielandt::testing {

inline void check_close(const CMat& a, const CMat& b, double tol,
                        const char* what = "matrices") {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.cols() == b.cols());
  INFO(what);
  CHECK((a - b).norm() <= tol);
}

inline CMat matrix_unit(int dim, int i, int j) {
  CMat e = CMat::Zero(dim, dim);
  e(i, j) = 1.0;
  return e;
}

// Hermitian operator basis of M_D: E_ii, (E_ij+E_ji)/sqrt(2),
// i(E_ij-E_ji)/sqrt(2). Orthonormal for the Hilbert-Schmidt inner product.
inline std::vector<CMat> hermitian_basis(int dim) {
  std::vector<CMat> basis;
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < dim; ++i) basis.push_back(matrix_unit(dim, i, i));
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      basis.push_back(s * (matrix_unit(dim, i, j) + matrix_unit(dim, j, i)));
      basis.push_back(Complex(0, 1) * s *
                      (matrix_unit(dim, i, j) - matrix_unit(dim, j, i)));
    }
  return basis;
}

// phi(a) = Tr(a) I / d with Kraus set {E_ij / sqrt(d)}.
inline SuperOp depolarizing(int d) {
  std::vector<CMat> kraus;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      kraus.push_back(matrix_unit(d, i, j) / std::sqrt(static_cast<double>(d)));
  return SuperOp::from_kraus(std::move(kraus));
}

// a |-> a^T; positive but not 2-positive.
inline SuperOp transpose_map(int d) {
  CMat natural = CMat::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) natural(i * d + j, j * d + i) = 1.0;
  return SuperOp::from_natural(std::move(natural));
}

inline SuperOp random_cp(Rng& rng, int d, int g) {
  std::vector<CMat> kraus;
  for (int i = 0; i < g; ++i) kraus.push_back(rng.ginibre(d, d));
  return SuperOp::from_kraus(std::move(kraus));
}

// QR of a Ginibre matrix with the R diagonal phases absorbed.
inline CMat random_unitary(Rng& rng, int d) {
  CMat g = rng.ginibre(d, d);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    Complex diag = r(i, i);
    q.col(i) *= diag / std::abs(diag);
  }
  return q;
}

}  // namespace wielandt::testing
