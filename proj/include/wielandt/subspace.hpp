// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <vector>

#include "wielandt/linalg.hpp"

namespace wielandt {

// An operator subspace of M_D held as an orthonormal basis (Hilbert-Schmidt
// inner product). Construction validates orthonormality.
class SubspaceBasis {
public:
  SubspaceBasis(int dim, std::vector<CMat> orthonormal);

  // Orthonormalizes arbitrary spanning matrices, dropping singular
  // directions below rel_tol times the top singular value.
  static SubspaceBasis from_span(int dim, const std::vector<CMat>& gens,
                                 double rel_tol = 1e-9);

  int dim() const { return dim_; }
  int dim_ambient() const { return dim_ * dim_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<CMat>& basis() const { return basis_; }

  // Vectorized basis, one column per element.
  CMat stacked() const;

  CMat project(const CMat& a) const;

  // || a - P(a) || / || a ||; zero matrices are contained by convention.
  double containment_defect(const CMat& a) const;
  bool contains(const CMat& a, double rel_tol = 1e-8) const {
    return containment_defect(a) <= rel_tol;
  }

private:
  int dim_;
  std::vector<CMat> basis_;
};

// Largest principal angle between the spans (radians); 0 for two empty bases.
double max_principal_angle(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace wielandt
