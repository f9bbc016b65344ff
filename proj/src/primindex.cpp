// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "wielandt/primindex.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <string>

#include "wielandt/multdomain.hpp"
#include "wielandt/positivity.hpp"
#include "wielandt/rng.hpp"
#include "wielandt/spectral.hpp"

namespace wielandt {

namespace {

// Walks the powers of a map, testing strict positivity at each length. Kraus
// maps keep an orthonormal basis of the span of length-n words, grown one
// letter per step; the rest go through the natural matrix power.
class PowerScanner {
public:
  PowerScanner(const SuperOp& phi, const Tolerances& tol) : phi_(phi), tol_(tol) {
    if (!phi.has_kraus()) return;
    kraus_ = phi.kraus();
    const int d = phi.dim();
    CMat cols(d * d, static_cast<Eigen::Index>(kraus_.size()));
    for (size_t i = 0; i < kraus_.size(); ++i)
      cols.col(static_cast<Eigen::Index>(i)) = vec(kraus_[i]);
    span_ = orthonormal_span(cols, tol.span_rank_rel);
    length_ = 1;
  }

  Verdict verdict(int n, const SearchBudget& budget) {
    const int d = phi_.dim();
    if (kraus_.empty()) return is_strictly_positive(phi_.power(n), budget, tol_);
    while (length_ < n) grow();
    std::vector<CMat> basis;
    basis.reserve(static_cast<size_t>(span_.cols()));
    for (Eigen::Index j = 0; j < span_.cols(); ++j)
      basis.push_back(devec(span_.col(j), d));
    return strict_positivity_from_span(basis, d, budget, tol_);
  }

private:
  void grow() {
    const int d = phi_.dim();
    CMat next(d * d, static_cast<Eigen::Index>(kraus_.size()) * span_.cols());
    Eigen::Index idx = 0;
    for (const CMat& v : kraus_)
      for (Eigen::Index j = 0; j < span_.cols(); ++j)
        next.col(idx++) = vec(v * devec(span_.col(j), d));
    span_ = orthonormal_span(next, tol_.span_rank_rel);
    ++length_;
  }

  const SuperOp& phi_;
  Tolerances tol_;
  std::vector<CMat> kraus_;
  CMat span_;
  int length_ = 0;
};

CMat random_projection(Rng& rng, int dim, int rank) {
  CMat g = rng.ginibre(dim, rank);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ() * CMat::Identity(dim, rank);
  return q * q.adjoint();
}

}  // namespace

IndexCertificate primitivity_index(const SuperOp& phi, int cap,
                                   const SearchBudget& budget,
                                   const Tolerances& tol) {
  if (!is_primitive(phi, tol).primitive)
    throw NotPrimitive("primitivity_index: map is not primitive");
  const int d = phi.dim();
  IndexCertificate cert;
  cert.bound = 2 * (d - 1) * (d - 1);
  cert.cap = cap > 0 ? cap : cert.bound;

  PowerScanner scanner(phi, tol);
  for (int n = 1; n <= cert.cap; ++n) {
    cert.per_n.push_back(scanner.verdict(n, budget));
    if (cert.per_n.back().holds()) {
      cert.q = n;
      cert.within_bound = cert.q <= cert.bound;
      cert.confirmations.push_back(scanner.verdict(n + 1, budget));
      cert.confirmations.push_back(scanner.verdict(n + 2, budget));
      return cert;
    }
  }
  throw CapExceeded("primitivity_index: no strictly positive power by n = " +
                    std::to_string(cert.cap));
}

QKappaReport check_q_vs_kappa(const SuperOp& phi, const SearchBudget& budget,
                              const Tolerances& tol) {
  if (!phi.is_unital(tol.unital))
    throw NotUnital("check_q_vs_kappa: map is not unital");
  CMat rho = spectral_data(phi, tol).pf_left;
  QKappaReport report;
  report.kappa = kappa(phi, rho, tol).kappa;
  report.q = primitivity_index(phi, 0, budget, tol).q;
  report.bound = (phi.dim() - 1) * report.kappa;
  report.ok = report.q <= report.bound;
  return report;
}

RankMonotonicityReport rank_monotonicity_check(const SuperOp& phi, int kappa,
                                               int trials, std::uint64_t seed,
                                               const Tolerances& tol) {
  if (kappa < 1) throw InvalidDimension("rank_monotonicity_check: kappa must be >= 1");
  const int d = phi.dim();
  SuperOp pk = phi.power(kappa);
  Rng rng(seed);
  RankMonotonicityReport report;
  report.trials = trials;
  for (int r = 1; r <= d - 1; ++r) {
    int lowest = d;
    for (int t = 0; t < trials; ++t) {
      CMat p = random_projection(rng, d, r);
      int out_rank = numerical_rank_psd(hermitize(pk.apply(p)), tol.rank_rel);
      if (out_rank <= r)
        throw RankViolation("rank_monotonicity_check: rank " +
                            std::to_string(r) + " input produced rank " +
                            std::to_string(out_rank) + " output");
      lowest = std::min(lowest, out_rank);
    }
    report.min_output_rank.push_back(lowest);
  }
  report.ok = true;
  return report;
}

bool range_dominated(const CMat& a, const CMat& proj, double rel_tol) {
  double base = a.norm();
  if (base == 0.0) return true;
  CMat comp = CMat::Identity(a.rows(), a.cols()) - proj;
  return (comp * a * comp).norm() <= rel_tol * base;
}

IrreducibilityProbe full_irreducibility_probe(const SuperOp& phi, int kappa,
                                              int trials, std::uint64_t seed,
                                              const Tolerances& tol) {
  if (kappa < 1)
    throw InvalidDimension("full_irreducibility_probe: kappa must be >= 1");
  const int d = phi.dim();
  SuperOp pk = phi.power(kappa);
  Rng rng(seed);
  IrreducibilityProbe probe;
  for (int r = 1; r <= d - 1; ++r) {
    for (int t = 0; t < trials; ++t) {
      CMat p = random_projection(rng, d, r);
      CMat q = random_projection(rng, d, r);
      ++probe.pairs;
      if (range_dominated(hermitize(pk.apply(p)), q, tol.pass)) {
        ++probe.findings;
        if (probe.example.empty()) probe.example = {p, q};
      }
    }
  }
  return probe;
}

WielengthResult wielength(const std::vector<CMat>& s, int cap,
                          const Tolerances& tol) {
  if (s.empty()) throw EmptySet("wielength: no generators");
  if (cap < 1) throw InvalidDimension("wielength: cap must be >= 1");
  const int d = static_cast<int>(s[0].rows());
  if (d < 2) throw InvalidDimension("wielength: dimension must be >= 2");
  for (const CMat& v : s)
    if (v.rows() != d || v.cols() != d)
      throw DimensionMismatch("wielength: generators of unequal shape");

  CMat cols(d * d, static_cast<Eigen::Index>(s.size()));
  for (size_t i = 0; i < s.size(); ++i)
    cols.col(static_cast<Eigen::Index>(i)) = vec(s[i]);

  WielengthResult result;
  std::vector<int> tight;
  for (int k = 1; k <= cap; ++k) {
    CMat basis = orthonormal_span(cols, tol.span_rank_rel);
    int loose_rank = static_cast<int>(basis.cols());
    int tight_rank =
        static_cast<int>(orthonormal_span(cols, 0.1 * tol.span_rank_rel).cols());
    result.profile.push_back(loose_rank);
    tight.push_back(tight_rank);
    if (tight_rank != loose_rank) result.tolerance_warning = true;
    if (loose_rank == d * d) {
      result.length = k;
      break;
    }
    if (loose_rank == 0) {
      for (int pad = k + 1; pad <= cap; ++pad) {
        result.profile.push_back(0);
        tight.push_back(0);
      }
      break;
    }
    CMat next(d * d, static_cast<Eigen::Index>(s.size()) * basis.cols());
    Eigen::Index idx = 0;
    for (const CMat& v : s)
      for (Eigen::Index j = 0; j < basis.cols(); ++j)
        next.col(idx++) = vec(v * devec(basis.col(j), d));
    cols = std::move(next);
  }
  if (result.tolerance_warning) result.tight_profile = std::move(tight);
  return result;
}

WielengthQReport check_wielength_ge_q(const std::vector<CMat>& s, int cap,
                                      const SearchBudget& budget,
                                      const Tolerances& tol) {
  SuperOp phi = SuperOp::from_kraus(s);
  IndexCertificate cert = primitivity_index(phi, 0, budget, tol);
  WielengthResult wl = wielength(s, std::max(cap, cert.q), tol);
  WielengthQReport report;
  report.q = cert.q;
  report.wielength = wl.length;
  if (wl.length) {
    report.gap = *wl.length - cert.q;
    report.ok = *wl.length >= cert.q;
  } else {
    report.ok = true;
  }
  return report;
}

}  // namespace wielandt
