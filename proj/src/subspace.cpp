// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "wielandt/subspace.hpp"

#include <algorithm>
#include <cmath>

namespace wielandt {

SubspaceBasis::SubspaceBasis(int dim, std::vector<CMat> orthonormal)
    : dim_(dim), basis_(std::move(orthonormal)) {
  if (dim_ < 2) throw InvalidDimension("SubspaceBasis: requires dim >= 2");
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].rows() != dim_ || basis_[i].cols() != dim_)
      throw DimensionMismatch("SubspaceBasis: element dimension mismatch");
    for (size_t j = 0; j <= i; ++j) {
      Complex g = hs_inner(basis_[i], basis_[j]);
      double expected = i == j ? 1.0 : 0.0;
      if (std::abs(g - expected) > 1e-10)
        throw DimensionMismatch("SubspaceBasis: basis is not orthonormal");
    }
  }
}

SubspaceBasis SubspaceBasis::from_span(int dim, const std::vector<CMat>& gens,
                                       double rel_tol) {
  CMat cols(dim * dim, static_cast<Eigen::Index>(gens.size()));
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].rows() != dim || gens[i].cols() != dim)
      throw DimensionMismatch("SubspaceBasis::from_span: element dimension mismatch");
    cols.col(static_cast<Eigen::Index>(i)) = vec(gens[i]);
  }
  CMat q = orthonormal_span(cols, rel_tol);
  std::vector<CMat> basis;
  basis.reserve(static_cast<size_t>(q.cols()));
  for (Eigen::Index c = 0; c < q.cols(); ++c) basis.push_back(devec(q.col(c), dim));
  return SubspaceBasis(dim, std::move(basis));
}

CMat SubspaceBasis::stacked() const {
  CMat out(dim_ambient(), rank());
  for (int i = 0; i < rank(); ++i) out.col(i) = vec(basis_[static_cast<size_t>(i)]);
  return out;
}

CMat SubspaceBasis::project(const CMat& a) const {
  CMat out = CMat::Zero(dim_, dim_);
  for (const auto& b : basis_) out += hs_inner(b, a) * b;
  return out;
}

double SubspaceBasis::containment_defect(const CMat& a) const {
  double norm = a.norm();
  if (norm <= 0.0) return 0.0;
  return (a - project(a)).norm() / norm;
}

double max_principal_angle(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.rank() == 0 || b.rank() == 0) return 0.0;
  auto angles = principal_angles(a.stacked(), b.stacked());
  return angles.back();
}

}  // namespace wielandt
