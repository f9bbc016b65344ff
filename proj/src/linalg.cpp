// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "wielandt/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace wielandt {

CVec vec(const CMat& a) {
  // Eigen is column-major, so the raw data already is the column stack.
  return Eigen::Map<const CVec>(a.data(), a.size());
}

CMat devec(const CVec& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim)
    throw DimensionMismatch("devec: vector length does not match dim^2");
  return Eigen::Map<const CMat>(v.data(), dim, dim);
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double hs_norm(const CMat& a) { return a.norm(); }

Complex hs_inner(const CMat& a, const CMat& b) { return (a.adjoint() * b).trace(); }

bool is_hermitian(const CMat& a, double tol) {
  double scale = std::max(1.0, a.norm());
  return (a - a.adjoint()).norm() <= tol * scale;
}

RVec herm_eigenvalues(const CMat& a) {
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(a), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double lambda_min(const CMat& a) { return herm_eigenvalues(a).minCoeff(); }
double lambda_max(const CMat& a) { return herm_eigenvalues(a).maxCoeff(); }

bool is_psd(const CMat& a, double tol) {
  if (!is_hermitian(a, tol)) return false;
  RVec ev = herm_eigenvalues(a);
  double top = std::max(1.0, ev.cwiseAbs().maxCoeff());
  return ev.minCoeff() >= -tol * top;
}

bool is_projection(const CMat& a, double tol) {
  if (!is_hermitian(a, tol)) return false;
  return (a * a - a).norm() <= tol * std::max(1.0, a.norm());
}

int numerical_rank_psd(const CMat& a, double rel_tol) {
  RVec ev = herm_eigenvalues(a);
  double top = ev.maxCoeff();
  if (top <= 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > rel_tol * top) ++rank;
  return rank;
}

CMat hermitian_power(const CMat& a, double p, double floor_rel) {
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(a));
  RVec ev = es.eigenvalues();
  double top = ev.maxCoeff();
  if (top <= 0.0)
    throw SingularEigenvector("hermitian_power: matrix has no positive part");
  RVec powered(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    double x = ev(i);
    if (x < floor_rel * top) {
      if (p < 0.0)
        throw SingularEigenvector("hermitian_power: eigenvalue below floor");
      x = std::max(x, 0.0);
    }
    powered(i) = std::pow(x, p);
  }
  return es.eigenvectors() * powered.asDiagonal() * es.eigenvectors().adjoint();
}

WeightedInner::WeightedInner(CMat weight, double posdef_tol) : weight_(std::move(weight)) {
  if (weight_.rows() != weight_.cols())
    throw DimensionMismatch("WeightedInner: weight must be square");
  RVec ev = herm_eigenvalues(weight_);
  if (!is_hermitian(weight_, 1e-8) || ev.minCoeff() <= posdef_tol * std::abs(ev.maxCoeff()))
    throw WeightNotPositiveDefinite("WeightedInner: weight is not positive definite");
}

Complex WeightedInner::inner(const CMat& a, const CMat& b) const {
  return (weight_ * a.adjoint() * b).trace();
}

double WeightedInner::norm_sq(const CMat& a) const { return inner(a, a).real(); }

CMat orthonormal_span(const CMat& cols, double rel_tol) {
  if (cols.cols() == 0) return CMat(cols.rows(), 0);
  Eigen::JacobiSVD<CMat> svd(cols, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  double top = sv.size() > 0 ? sv(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * top) ++rank;
  return svd.matrixU().leftCols(rank);
}

std::vector<CMat> hermitian_operator_basis(int dim) {
  std::vector<CMat> basis;
  basis.reserve(static_cast<size_t>(dim) * dim);
  const double s = 1.0 / std::sqrt(2.0);
  auto unit = [dim](int i, int j) {
    CMat e = CMat::Zero(dim, dim);
    e(i, j) = 1.0;
    return e;
  };
  for (int i = 0; i < dim; ++i) basis.push_back(unit(i, i));
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      basis.push_back(s * (unit(i, j) + unit(j, i)));
      basis.push_back(Complex(0, 1) * s * (unit(i, j) - unit(j, i)));
    }
  return basis;
}

std::vector<double> principal_angles(const CMat& u, const CMat& v) {
  if (u.rows() != v.rows())
    throw DimensionMismatch("principal_angles: ambient dimensions differ");
  CMat overlap = u.adjoint() * v;
  Eigen::JacobiSVD<CMat> svd(overlap);
  std::vector<double> angles;
  angles.reserve(static_cast<size_t>(svd.singularValues().size()));
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    double c = std::clamp(svd.singularValues()(i), 0.0, 1.0);
    angles.push_back(std::acos(c));
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

}  // namespace wielandt
