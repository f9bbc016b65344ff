// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "wielandt/rng.hpp"

#include <cmath>

namespace wielandt {

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

CVec Rng::unit_vector(int dim) {
  CVec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = complex_gaussian();
  double n = v.norm();
  while (n < 1e-12) {
    for (int i = 0; i < dim; ++i) v(i) = complex_gaussian();
    n = v.norm();
  }
  return v / n;
}

CMat Rng::ginibre(int rows, int cols) {
  CMat m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = complex_gaussian();
  return m;
}

CMat Rng::hermitian(int dim) {
  CMat g = ginibre(dim, dim);
  return hermitize(g);
}

CMat Rng::unitary(int dim) {
  Eigen::HouseholderQR<CMat> qr(ginibre(dim, dim));
  CMat q = qr.householderQ() * CMat::Identity(dim, dim);
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    Complex diag = r(i, i);
    q.col(i) *= diag / std::abs(diag);
  }
  return q;
}

}  // namespace wielandt
