// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "wielandt/multdomain.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace wielandt {

namespace {

struct KernelSplit {
  std::vector<CMat> basis;
  double gap = 0.0;       // smallest retained eigenvalue over lambda_max
  bool warning = false;   // eigenvalues inside the guard band
};

// Kernel of a PSD form with a relative threshold and an absolute floor tied
// to the form's natural scale.
KernelSplit psd_kernel(const CMat& form, int dim, double scale,
                       const Tolerances& tol) {
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(form));
  const RVec& ev = es.eigenvalues();
  double top = std::max(ev.maxCoeff(), 0.0);
  double cut = std::max(tol.kernel_rel * top, 1e-13 * scale);
  double guard = std::max(tol.kernel_guard * top, 1e-13 * scale);
  KernelSplit split;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) <= cut) {
      split.basis.push_back(devec(es.eigenvectors().col(i), dim));
    } else {
      if (ev(i) <= guard) split.warning = true;
      if (split.gap == 0.0) split.gap = top > 0.0 ? ev(i) / top : 0.0;
    }
  }
  return split;
}

}  // namespace

MultDomain mult_domain(const SuperOp& phi, int n, const CMat& rho,
                       const Tolerances& tol) {
  if (n < 1) throw InvalidDimension("mult_domain: power must be >= 1");
  (void)WeightedInner(rho, tol.pf_posdef);
  const int d = phi.dim();
  if (rho.rows() != d || rho.cols() != d)
    throw DimensionMismatch("mult_domain: weight dimension mismatch");

  CMat id = CMat::Identity(d, d);
  CMat left_form = kron(rho.transpose(), id);   // <a,a>_rho
  CMat right_form = kron(id, rho);              // <a*,a*>_rho
  CMat pn = phi.power(n).natural();
  CMat q = left_form - pn.adjoint() * left_form * pn;
  CMat qp = right_form - pn.adjoint() * right_form * pn;

  double scale = left_form.norm() + right_form.norm();
  auto psd_gate = [&](const CMat& form, const char* name) {
    RVec ev = herm_eigenvalues(form);
    double floor = std::max(1e-7 * std::abs(ev.maxCoeff()), 1e-12 * scale);
    if (ev.minCoeff() < -floor)
      throw FormNotPSD(std::string("mult_domain: ") + name +
                       " has a negative eigenvalue; Schwarz or fixed-point "
                       "preconditions look violated");
  };
  psd_gate(q, "norm-preservation form");
  psd_gate(qp, "adjoint norm-preservation form");
  KernelSplit split = psd_kernel(q + qp, d, scale, tol);

  MultDomain out{SubspaceBasis(d, std::move(split.basis)), split.gap, split.warning,
                 false};
  out.contains_identity = out.basis.contains(id, tol.pass);
  return out;
}

SubspaceBasis mult_domain_oracle(const SuperOp& phi, int n, const Tolerances& tol) {
  if (n < 1) throw InvalidDimension("mult_domain_oracle: power must be >= 1");
  const int d = phi.dim();
  CMat id = CMat::Identity(d, d);
  CMat pn = phi.power(n).natural();

  CMat k = CMat::Zero(d * d, d * d);
  for (const CMat& b : hermitian_operator_basis(d)) {
    CMat bn = devec(pn * vec(b), d);
    CMat l = pn * kron(b.transpose(), id) - kron(bn.transpose(), id) * pn;
    CMat r = pn * kron(id, b) - kron(id, bn) * pn;
    k += l.adjoint() * l + r.adjoint() * r;
  }

  double scale = std::max(k.norm(), 1e-300);
  KernelSplit split = psd_kernel(k, d, scale, tol);
  std::vector<CMat> candidate = std::move(split.basis);

  auto equality_defect = [&](const CMat& x) {
    CMat xn = devec(pn * vec(x), d);
    CMat lhs1 = devec(pn * vec(x.adjoint() * x), d);
    CMat lhs2 = devec(pn * vec(x * x.adjoint()), d);
    double scale_x = 1.0 + xn.norm() * xn.norm();
    return ((lhs1 - xn.adjoint() * xn).norm() + (lhs2 - xn * xn.adjoint()).norm()) /
           scale_x;
  };

  // Tighten the kernel cut until every element satisfies the defining
  // equalities; a kernel that never does signals a tolerance misread.
  double cut_scale = 1.0;
  for (int pass = 0; pass < 4; ++pass) {
    bool all_good = true;
    for (const CMat& x : candidate)
      if (equality_defect(x) > 1e-6) {
        all_good = false;
        break;
      }
    if (all_good) break;
    if (pass == 3)
      throw NonAlgebraKernel(
          "mult_domain_oracle: kernel elements violate the defining equalities");
    cut_scale *= 0.1;
    SubspaceBasis current(d, std::move(candidate));
    CMat s = current.stacked();
    CMat restricted = s.adjoint() * k * s;
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(restricted));
    const RVec& ev = es.eigenvalues();
    double top = std::max(ev.maxCoeff(), 0.0);
    double cut = std::max(cut_scale * tol.kernel_rel * top, 1e-14 * scale);
    candidate.clear();
    for (Eigen::Index i = 0; i < ev.size(); ++i)
      if (ev(i) <= cut) candidate.push_back(devec(s * es.eigenvectors().col(i), d));
  }

  SubspaceBasis result(d, std::move(candidate));
  if (!is_subalgebra(result, tol.subspace_angle * 10.0))
    throw NonAlgebraKernel(
        "mult_domain_oracle: kernel is not closed under products");
  return result;
}

KappaResult kappa(const SuperOp& phi, const CMat& rho, const Tolerances& tol) {
  const int d = phi.dim();
  const int hard_cap = 2 * d - 1;
  KappaResult result;
  result.chain.push_back(mult_domain(phi, 1, rho, tol));
  for (int n = 1; n <= hard_cap; ++n) {
    MultDomain next = mult_domain(phi, n + 1, rho, tol);
    const MultDomain& cur = result.chain.back();
    if (next.basis.rank() == cur.basis.rank()) {
      double angle = max_principal_angle(next.basis, cur.basis);
      if (angle > tol.subspace_angle)
        throw ChainTooLong(
            "kappa: equal ranks but distinct subspaces; kernel thresholds "
            "cannot be trusted");
      int stabilized_rank = cur.basis.rank();
      result.chain.push_back(std::move(next));
      result.kappa = n;
      if (result.kappa > 2 * d - 2)
        throw ChainTooLong("kappa: stabilization later than 2D-2");
      if (stabilized_rank != 1)
        throw NotPrimitive("kappa: stabilized subspace is larger than the scalars");
      return result;
    }
    result.chain.push_back(std::move(next));
  }
  throw ChainTooLong("kappa: no stabilization by n = 2D-1");
}

NestingReport verify_nesting(const SuperOp& phi, const CMat& rho, int n_max,
                             const Tolerances& tol) {
  NestingReport report;
  std::vector<MultDomain> chain;
  for (int n = 1; n <= n_max + 1; ++n) chain.push_back(mult_domain(phi, n, rho, tol));
  for (int n = 0; n < n_max; ++n) {
    const SubspaceBasis& outer = chain[static_cast<size_t>(n)].basis;
    const SubspaceBasis& inner = chain[static_cast<size_t>(n) + 1].basis;
    report.ranks.push_back(outer.rank());
    if (inner.rank() > outer.rank()) report.monotone = false;
    for (const CMat& b : inner.basis()) {
      double defect = outer.containment_defect(b);
      report.worst_containment = std::max(report.worst_containment, defect);
      if (defect > tol.subspace_angle) report.nested = false;
    }
  }
  report.ok = report.nested && report.monotone;
  return report;
}

bool is_subalgebra(const SubspaceBasis& basis, double tol) {
  for (const CMat& a : basis.basis()) {
    if (basis.containment_defect(a.adjoint()) > tol) return false;
    for (const CMat& b : basis.basis())
      if (basis.containment_defect(a * b) > tol) return false;
  }
  return true;
}

}  // namespace wielandt
