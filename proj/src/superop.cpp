// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "wielandt/superop.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <utility>

namespace wielandt {

namespace {

int side_of(const CMat& m, const char* who) {
  if (m.rows() != m.cols()) throw DimensionMismatch(std::string(who) + ": matrix not square");
  int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m.rows()))));
  if (static_cast<Eigen::Index>(side) * side != m.rows())
    throw DimensionMismatch(std::string(who) + ": size is not a perfect square");
  if (side < 2) throw InvalidDimension(std::string(who) + ": requires dim >= 2");
  return side;
}

}  // namespace

SuperOp SuperOp::identity(int dim) {
  if (dim < 2) throw InvalidDimension("SuperOp::identity: requires dim >= 2");
  std::vector<CMat> kraus{CMat::Identity(dim, dim)};
  return SuperOp(dim, CMat::Identity(dim * dim, dim * dim), std::move(kraus), "identity");
}

SuperOp SuperOp::from_natural(CMat natural, std::string metadata) {
  int dim = side_of(natural, "SuperOp::from_natural");
  return SuperOp(dim, std::move(natural), {}, std::move(metadata));
}

SuperOp SuperOp::from_kraus(std::vector<CMat> kraus, std::string metadata) {
  if (kraus.empty()) throw EmptySet("SuperOp::from_kraus: empty Kraus list");
  const Eigen::Index d = kraus.front().rows();
  if (d < 2) throw InvalidDimension("SuperOp::from_kraus: requires dim >= 2");
  for (const auto& a : kraus)
    if (a.rows() != d || a.cols() != d)
      throw DimensionMismatch("SuperOp::from_kraus: mixed Kraus dimensions");
  CMat natural = CMat::Zero(d * d, d * d);
  for (const auto& a : kraus) natural += kron(a.conjugate(), a);
  return SuperOp(static_cast<int>(d), std::move(natural), std::move(kraus),
                 std::move(metadata));
}

SuperOp SuperOp::from_choi(const CMat& choi, std::string metadata) {
  return from_natural(choi_to_natural(choi), std::move(metadata));
}

SuperOp SuperOp::with_metadata(std::string metadata) const {
  return SuperOp(dim_, natural_, kraus_, std::move(metadata));
}

CMat SuperOp::choi() const { return natural_to_choi(natural_); }

CMat SuperOp::apply(const CMat& a) const {
  if (a.rows() != dim_ || a.cols() != dim_)
    throw DimensionMismatch("SuperOp::apply: argument dimension mismatch");
  return devec(natural_ * vec(a), dim_);
}

SuperOp SuperOp::compose(const SuperOp& rhs) const {
  if (dim_ != rhs.dim_) throw DimensionMismatch("SuperOp::compose: dimension mismatch");
  return SuperOp(dim_, natural_ * rhs.natural_, {}, metadata_);
}

SuperOp SuperOp::power(int n) const {
  if (n < 0) throw InvalidDimension("SuperOp::power: exponent must be >= 0");
  if (n == 0) return identity(dim_).with_metadata(metadata_);
  if (n == 1) return *this;
  CMat acc = CMat::Identity(dim_ * dim_, dim_ * dim_);
  CMat base = natural_;
  int e = n;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return SuperOp(dim_, std::move(acc), {}, metadata_);
}

SuperOp SuperOp::hs_adjoint() const {
  std::vector<CMat> adj_kraus;
  adj_kraus.reserve(kraus_.size());
  for (const auto& a : kraus_) adj_kraus.push_back(a.adjoint());
  return SuperOp(dim_, natural_.adjoint(), std::move(adj_kraus), metadata_);
}

bool SuperOp::is_unital(double tol) const {
  CMat id = CMat::Identity(dim_, dim_);
  return (apply(id) - id).norm() <= tol;
}

bool SuperOp::is_trace_preserving(double tol) const {
  return hs_adjoint().is_unital(tol);
}

CMat natural_to_choi(const CMat& natural) {
  int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(natural.rows()))));
  CMat choi(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          choi(i * d + k, j * d + l) = natural(l * d + k, j * d + i);
  return choi;
}

CMat choi_to_natural(const CMat& choi) {
  int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(choi.rows()))));
  CMat natural(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          natural(l * d + k, j * d + i) = choi(i * d + k, j * d + l);
  return natural;
}

std::vector<CMat> choi_to_kraus(const CMat& choi, double psd_tol, double rank_rel) {
  int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(choi.rows()))));
  if (static_cast<Eigen::Index>(d) * d != choi.rows() || choi.rows() != choi.cols())
    throw DimensionMismatch("choi_to_kraus: Choi matrix has invalid shape");
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(choi));
  const RVec& ev = es.eigenvalues();
  double top = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
  if (ev.minCoeff() < -psd_tol * top)
    throw NotCompletelyPositive("choi_to_kraus: Choi matrix has a negative eigenvalue");
  std::vector<CMat> kraus;
  for (Eigen::Index m = ev.size() - 1; m >= 0; --m) {
    if (ev(m) <= rank_rel * top) continue;
    kraus.push_back(std::sqrt(ev(m)) * devec(es.eigenvectors().col(m), d));
  }
  return kraus;
}

SuperOp rho_adjoint(const SuperOp& phi, const CMat& rho, double posdef_tol) {
  if (rho.rows() != phi.dim() || rho.cols() != phi.dim())
    throw DimensionMismatch("rho_adjoint: weight dimension mismatch");
  (void)WeightedInner(rho, posdef_tol);
  CMat rho_inv = hermitian_power(rho, -1.0);
  CMat id = CMat::Identity(phi.dim(), phi.dim());
  CMat right = kron(rho.transpose(), id);
  CMat left = kron(rho_inv.transpose(), id);
  return SuperOp::from_natural(left * phi.natural().adjoint() * right, phi.metadata());
}

SuperOp amplify(const SuperOp& phi, int copies) {
  if (copies < 1) throw InvalidDimension("amplify: copies must be >= 1");
  if (copies == 1) return phi;
  if (phi.has_kraus()) {
    CMat idk = CMat::Identity(copies, copies);
    std::vector<CMat> kraus;
    kraus.reserve(phi.kraus().size());
    for (const auto& a : phi.kraus()) kraus.push_back(kron(idk, a));
    return SuperOp::from_kraus(std::move(kraus), phi.metadata());
  }
  const int d = phi.dim();
  const Eigen::Index n = static_cast<Eigen::Index>(copies) * d;
  CMat natural = CMat::Zero(n * n, n * n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      CMat img = devec(phi.natural().col(j * d + i), d);
      for (int a = 0; a < copies; ++a)
        for (int b = 0; b < copies; ++b) {
          Eigen::Index col = (b * d + j) * n + a * d + i;
          for (int c = 0; c < d; ++c)
            for (int r = 0; r < d; ++r)
              natural((b * d + c) * n + a * d + r, col) = img(r, c);
        }
    }
  return SuperOp::from_natural(std::move(natural), phi.metadata());
}

NormalizedMap similarity_normalize(const SuperOp& phi, const Tolerances& tol) {
  Eigen::ComplexEigenSolver<CMat> es(phi.natural());
  const CVec& lam = es.eigenvalues();
  Eigen::Index lead = 0;
  for (Eigen::Index i = 1; i < lam.size(); ++i)
    if (std::abs(lam(i)) > std::abs(lam(lead))) lead = i;
  double r = std::abs(lam(lead));
  if (r <= 0.0) throw NotPrimitive("similarity_normalize: spectral radius is zero");

  CMat z = devec(es.eigenvectors().col(lead), phi.dim());
  Complex tr = z.trace();
  if (std::abs(tr) < 1e-12 * z.norm())
    throw NotPrimitive("similarity_normalize: leading eigenvector is traceless");
  z *= std::conj(tr) / std::abs(tr);  // rotate so the trace is real positive
  z = hermitize(z);
  z /= z.trace().real();

  RVec ev = herm_eigenvalues(z);
  double top = ev.maxCoeff();
  if (ev.minCoeff() <= tol.pf_posdef * top)
    throw NotPrimitive("similarity_normalize: leading eigenvector is not positive definite");
  if (ev.minCoeff() < 1e-10 * top)
    throw SingularEigenvector("similarity_normalize: leading eigenvector nearly singular");

  CMat z_half = hermitian_power(z, 0.5, tol.eig_floor);
  CMat z_minus_half = hermitian_power(z, -0.5, tol.eig_floor);

  if (phi.has_kraus()) {
    std::vector<CMat> kraus;
    kraus.reserve(phi.kraus().size());
    double scale = 1.0 / std::sqrt(r);
    for (const auto& a : phi.kraus())
      kraus.push_back(scale * z_minus_half * a * z_half);
    return {SuperOp::from_kraus(std::move(kraus), phi.metadata()), z, r};
  }
  CMat pre = kron(z_half.transpose(), z_half);
  CMat post = kron(z_minus_half.transpose(), z_minus_half);
  CMat natural = (post * phi.natural() * pre) / r;
  return {SuperOp::from_natural(std::move(natural), phi.metadata()), z, r};
}

}  // namespace wielandt
