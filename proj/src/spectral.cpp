// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "wielandt/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "wielandt/rng.hpp"

namespace wielandt {

namespace {

struct LeadingVector {
  CMat m;              // hermitized, trace-normalized when possible
  double residual;     // eigen-residual of the raw eigenvector
  double herm_defect;  // relative distance from Hermitian before fixing
  bool normalized;     // trace normalization succeeded
};

LeadingVector extract_leading(const CMat& natural, int dim) {
  Eigen::ComplexEigenSolver<CMat> es(natural);
  const CVec& lam = es.eigenvalues();
  Eigen::Index lead = 0;
  for (Eigen::Index i = 1; i < lam.size(); ++i)
    if (std::abs(lam(i)) > std::abs(lam(lead))) lead = i;
  CVec v = es.eigenvectors().col(lead);
  LeadingVector out;
  out.residual = (natural * v - lam(lead) * v).norm();
  CMat m = devec(v, dim);
  Complex tr = m.trace();
  out.normalized = std::abs(tr) > 1e-12 * m.norm();
  if (out.normalized) m *= std::conj(tr) / std::abs(tr);
  out.herm_defect = (m - m.adjoint()).norm() / std::max(m.norm(), 1e-300);
  m = hermitize(m);
  if (out.normalized) m /= m.trace().real();
  out.m = std::move(m);
  return out;
}

}  // namespace

SpectralData spectral_data(const SuperOp& phi, const Tolerances& tol) {
  SpectralData data;
  Eigen::ComplexEigenSolver<CMat> es(phi.natural(), /*computeEigenvectors=*/false);
  data.eigenvalues.assign(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(data.eigenvalues.begin(), data.eigenvalues.end(),
            [](const Complex& a, const Complex& b) {
              double ma = std::abs(a), mb = std::abs(b);
              if (ma != mb) return ma > mb;
              return std::arg(a) < std::arg(b);
            });
  data.radius = std::abs(data.eigenvalues.front());
  data.gap_ratio = data.eigenvalues.size() > 1 && data.radius > 0.0
                       ? std::abs(data.eigenvalues[1]) / data.radius
                       : 0.0;
  double cutoff = data.radius * (1.0 - tol.peripheral_band);
  data.peripheral_count = 0;
  for (const Complex& l : data.eigenvalues)
    if (std::abs(l) >= cutoff) ++data.peripheral_count;

  LeadingVector right = extract_leading(phi.natural(), phi.dim());
  LeadingVector left = extract_leading(phi.natural().adjoint(), phi.dim());
  data.degenerate_peripheral =
      data.peripheral_count != 1 || !right.normalized || !left.normalized;
  data.pf_right = std::move(right.m);
  data.pf_left = std::move(left.m);
  data.right_herm_defect = right.herm_defect;
  data.left_herm_defect = left.herm_defect;
  data.right_residual =
      (phi.natural() * vec(data.pf_right) - data.radius * vec(data.pf_right)).norm();
  data.left_residual =
      (phi.natural().adjoint() * vec(data.pf_left) - data.radius * vec(data.pf_left))
          .norm();
  return data;
}

PrimitivityCertificate is_primitive(const SpectralData& data, const Tolerances& tol) {
  double band_edge = data.radius * (1.0 - tol.peripheral_band);
  double guard_edge = data.radius * (1.0 - 10.0 * tol.peripheral_band);
  for (const Complex& l : data.eigenvalues) {
    double m = std::abs(l);
    if (m >= guard_edge && m < band_edge)
      throw InconclusiveSpectrum(
          "is_primitive: eigenvalue modulus inside the peripheral guard band");
  }

  PrimitivityCertificate cert;
  cert.gap_ratio = data.gap_ratio;
  cert.radius = data.radius;
  cert.unique_peripheral = data.peripheral_count == 1 && !data.degenerate_peripheral;

  auto definiteness = [](const CMat& m) {
    RVec ev = herm_eigenvalues(m);
    double top = std::max(std::abs(ev.maxCoeff()), 1e-300);
    return ev.minCoeff() / top;
  };
  cert.right_definiteness = definiteness(data.pf_right);
  cert.left_definiteness = definiteness(data.pf_left);
  cert.right_positive_definite = cert.right_definiteness > tol.pf_posdef;
  cert.left_positive_definite = cert.left_definiteness > tol.pf_posdef;
  cert.primitive = cert.unique_peripheral && cert.right_positive_definite &&
                   cert.left_positive_definite;
  return cert;
}

PrimitivityCertificate is_primitive(const SuperOp& phi, const Tolerances& tol) {
  return is_primitive(spectral_data(phi, tol), tol);
}

MixingTrial mixing_trial(const SuperOp& phi, const CMat& a, const CMat& rho, int n_max) {
  const double floor = 1e-13;
  CMat id = CMat::Identity(phi.dim(), phi.dim());
  Complex mean = hs_inner(rho, a);
  MixingTrial trial;
  trial.errors.reserve(static_cast<size_t>(n_max));
  CMat iter = a;
  for (int n = 1; n <= n_max; ++n) {
    iter = phi.apply(iter);
    trial.errors.push_back((iter - mean * id).norm());
  }
  // Geometric rate over the window [5, n_max], ignoring floor-level tails.
  int start = std::min(5, n_max) - 1;
  int end = -1;
  for (int k = static_cast<int>(trial.errors.size()) - 1; k > start; --k)
    if (trial.errors[static_cast<size_t>(k)] >= floor) {
      end = k;
      break;
    }
  if (end > start && trial.errors[static_cast<size_t>(start)] >= floor)
    trial.rate = std::pow(trial.errors[static_cast<size_t>(end)] /
                              trial.errors[static_cast<size_t>(start)],
                          1.0 / (end - start));
  return trial;
}

MixingReport strong_mixing_check(const SuperOp& phi, int trials, std::uint64_t seed,
                                 const Tolerances& tol) {
  SpectralData data = spectral_data(phi, tol);
  PrimitivityCertificate cert = is_primitive(data, tol);
  if (!cert.primitive)
    throw NotPrimitive("strong_mixing_check: map is not primitive");
  if (!phi.is_unital(tol.unital))
    throw NotUnital("strong_mixing_check: map is not unital");

  MixingReport report;
  report.gap_ratio = data.gap_ratio;
  report.slack = tol.mixing_slack;
  int n_max = 8;
  if (data.gap_ratio >= 1e-12)
    n_max = std::max(
        8, std::min(200, static_cast<int>(std::ceil(std::log(1e-12) /
                                                    std::log(data.gap_ratio)))));
  report.n_max = n_max;

  const int d = phi.dim();
  Rng rng(seed);
  report.max_rate = 0.0;
  for (int t = 0; t < trials; ++t) {
    CMat a = rng.ginibre(d, d);
    a /= a.norm();
    MixingTrial trial = mixing_trial(phi, a, data.pf_left, n_max);
    report.max_rate = std::max(report.max_rate, trial.rate);
    report.trials.push_back(std::move(trial));
  }
  report.ok = report.max_rate <= report.gap_ratio + report.slack;
  return report;
}

UnitalityRadiusReport unitality_radius_check(const SuperOp& phi, const Tolerances& tol) {
  SpectralData data = spectral_data(phi, tol);
  PrimitivityCertificate cert = is_primitive(data, tol);
  if (!cert.primitive)
    throw NotPrimitive("unitality_radius_check: map is not primitive");
  UnitalityRadiusReport report;
  report.radius = data.radius;
  CMat id = CMat::Identity(phi.dim(), phi.dim());
  report.unital_defect = (phi.apply(id) - id).norm();
  report.radius_is_one = std::abs(report.radius - 1.0) <= 1e-8;
  report.unital = report.unital_defect <= 1e-7;
  report.consistent = report.radius_is_one == report.unital;
  return report;
}

}  // namespace wielandt
