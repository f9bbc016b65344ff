// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "wielandt/positivity.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "wielandt/rng.hpp"

namespace wielandt {

namespace {

// Rotates a global phase so the first significant coordinate is real
// positive; keeps reported witnesses reproducible.
CVec gauge_fix(CVec v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double m = std::abs(v(i));
    if (m > 1e-12 * v.norm()) {
      v *= std::conj(v(i)) / m;
      break;
    }
  }
  return v;
}

using Objective = std::function<double(const CVec&, CVec*)>;

struct DescentOutcome {
  CVec x;
  double value = std::numeric_limits<double>::infinity();
};

// Projected subgradient descent on the unit sphere with Armijo backtracking.
DescentOutcome sphere_minimize(const Objective& f, CVec x, int max_iters) {
  CVec grad(x.size());
  double fx = f(x, &grad);
  double step = 0.5;
  for (int it = 0; it < max_iters; ++it) {
    CVec tangent = grad - x * x.dot(grad);
    double gn2 = tangent.squaredNorm();
    if (gn2 <= 1e-24 * std::max(1.0, fx * fx)) break;
    bool moved = false;
    while (step >= 1e-16) {
      CVec cand = x - step * tangent;
      double n = cand.norm();
      if (n > 1e-14) {
        cand /= n;
        double fc = f(cand, nullptr);
        if (fc <= fx - 1e-4 * step * gn2) {
          x = cand;
          fx = f(x, &grad);
          step = std::min(step * 1.5, 1e3);
          moved = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  return {std::move(x), fx};
}

struct MultistartOutcome {
  CVec x;
  double value = std::numeric_limits<double>::infinity();
};

MultistartOutcome multistart_minimize(const Objective& f, int vec_dim,
                                      const SearchBudget& budget, int starts,
                                      double decisive_below) {
  Rng rng(budget.seed);
  MultistartOutcome best;
  for (int s = 0; s < starts; ++s) {
    DescentOutcome out = sphere_minimize(f, rng.unit_vector(vec_dim), budget.max_iters);
    if (out.value < best.value) {
      best.value = out.value;
      best.x = std::move(out.x);
    }
    if (best.value < decisive_below) break;
  }
  return best;
}

// lambda_min(psi(xx*)) and its gradient 2 herm(psi*(uu*)) x.
Objective min_output_eigenvalue(const SuperOp& psi) {
  CMat nat = psi.natural();
  CMat adj = psi.natural().adjoint();
  int n = psi.dim();
  return [nat = std::move(nat), adj = std::move(adj), n](const CVec& x, CVec* grad) {
    CMat m = devec(nat * vec(x * x.adjoint()), n);
    Eigen::SelfAdjointEigenSolver<CMat> es(
        hermitize(m), grad ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    double lam = es.eigenvalues()(0);
    if (grad) {
      CVec u = es.eigenvectors().col(0);
      CMat g = hermitize(devec(adj * vec(u * u.adjoint()), n));
      *grad = 2.0 * (g * x);
    }
    return lam;
  };
}

SearchEffort effort_of(const SearchBudget& budget, int starts) {
  return SearchEffort{starts, budget.max_iters, budget.seed};
}

Verdict search_min_eigenvalue(const SuperOp& psi, const SearchBudget& budget,
                              const Tolerances& tol, bool holds_on_clean) {
  int starts = budget.starts_for_dim(psi.dim());
  MultistartOutcome best = multistart_minimize(min_output_eigenvalue(psi), psi.dim(),
                                               budget, starts, -10.0 * tol.pass);
  Verdict v;
  v.value = best.value;
  v.tolerance = tol.pass;
  v.effort = effort_of(budget, starts);
  if (best.value < -tol.pass) {
    v.status = VerdictStatus::Fails;
    v.witness = {gauge_fix(best.x)};
    v.note = "negative-output-eigenvalue";
  } else {
    v.status = holds_on_clean ? VerdictStatus::Holds : VerdictStatus::Undetermined;
    v.note = "no-violation-found";
  }
  return v;
}

}  // namespace

Verdict is_completely_positive(const SuperOp& phi, const Tolerances& tol) {
  CMat choi = phi.choi();
  Verdict v;
  v.tolerance = tol.psd;
  double scale = std::max(1.0, choi.norm());
  CMat skew = 0.5 * (choi - choi.adjoint());
  if (skew.norm() > tol.psd * scale) {
    Eigen::SelfAdjointEigenSolver<CMat> es(Complex(0, -1) * skew);
    Eigen::Index worst = 0;
    es.eigenvalues().cwiseAbs().maxCoeff(&worst);
    v.status = VerdictStatus::Fails;
    v.value = -skew.norm() / scale;
    v.witness = {devec(es.eigenvectors().col(worst), phi.dim())};
    v.note = "choi-not-hermitian";
    return v;
  }
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(choi));
  const RVec& ev = es.eigenvalues();
  double top = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
  v.value = ev(0);
  if (ev(0) < -tol.psd * top) {
    v.status = VerdictStatus::Fails;
    v.witness = {devec(es.eigenvectors().col(0), phi.dim())};
    v.note = "choi-negative-eigenvalue";
  } else {
    v.status = VerdictStatus::Holds;
    v.note = "choi-psd";
  }
  return v;
}

Verdict check_positive(const SuperOp& phi, const SearchBudget& budget,
                       const Tolerances& tol) {
  Verdict cp = is_completely_positive(phi, tol);
  if (cp.holds()) {
    Verdict v;
    v.status = VerdictStatus::Holds;
    v.value = cp.value;
    v.tolerance = tol.pass;
    v.note = "completely-positive";
    return v;
  }
  return search_min_eigenvalue(phi, budget, tol, /*holds_on_clean=*/true);
}

Verdict check_two_positive(const SuperOp& phi, const SearchBudget& budget,
                           const Tolerances& tol) {
  Verdict cp = is_completely_positive(phi, tol);
  if (cp.holds()) {
    Verdict v;
    v.status = VerdictStatus::Holds;
    v.value = cp.value;
    v.tolerance = tol.pass;
    v.note = "completely-positive";
    return v;
  }
  return search_min_eigenvalue(amplify(phi, 2), budget, tol, /*holds_on_clean=*/false);
}

Verdict check_schwarz(const SuperOp& phi, const SearchBudget& budget,
                      const Tolerances& tol) {
  if (phi.is_unital(tol.unital)) {
    Verdict two = check_two_positive(phi, budget, tol);
    if (two.holds()) {
      Verdict v;
      v.status = VerdictStatus::Holds;
      v.value = two.value;
      v.tolerance = tol.pass;
      v.effort = two.effort;
      v.note = "unital-two-positive";
      return v;
    }
  }

  CMat nat = phi.natural();
  CMat adj = nat.adjoint();
  int d = phi.dim();
  Objective f = [&nat, &adj, d](const CVec& x, CVec* grad) {
    CMat a = devec(x, d);
    CMat fa = devec(nat * vec(a), d);
    CMat s = devec(nat * vec(a.adjoint() * a), d) - fa.adjoint() * fa;
    Eigen::SelfAdjointEigenSolver<CMat> es(
        hermitize(s), grad ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    double lam = es.eigenvalues()(0);
    if (grad) {
      CVec u = es.eigenvectors().col(0);
      CMat p = u * u.adjoint();
      CMat g = a * hermitize(devec(adj * vec(p), d)) - devec(adj * vec(fa * p), d);
      *grad = 2.0 * vec(g);
    }
    return lam;
  };

  int starts = budget.starts_for_dim(d);
  MultistartOutcome best =
      multistart_minimize(f, d * d, budget, starts, -10.0 * tol.pass);
  Verdict v;
  v.value = best.value;
  v.tolerance = tol.pass;
  v.effort = effort_of(budget, starts);
  if (best.value < -tol.pass) {
    v.status = VerdictStatus::Fails;
    v.witness = {devec(gauge_fix(best.x), d)};
    v.note = "schwarz-defect";
  } else {
    v.status = VerdictStatus::Undetermined;
    v.note = "no-violation-found";
  }
  return v;
}

Verdict strict_positivity_from_span(const std::vector<CMat>& basis, int dim,
                                    const SearchBudget& budget,
                                    const Tolerances& tol) {
  if (basis.empty()) throw EmptySet("strict_positivity_from_span: empty basis");
  for (const auto& b : basis)
    if (b.rows() != dim || b.cols() != dim)
      throw DimensionMismatch("strict_positivity_from_span: basis dimension mismatch");

  Verdict v;
  v.tolerance = tol.pass;
  if (static_cast<int>(basis.size()) >= dim * dim) {
    v.status = VerdictStatus::Holds;
    v.value = 1.0;
    v.note = "span-is-everything";
    return v;
  }

  int starts = budget.starts_for_dim(dim);
  int inner = std::max(budget.max_iters / 2, 64);
  v.effort = effort_of(budget, starts);

  Rng rng(budget.seed);
  double best = std::numeric_limits<double>::infinity();
  CVec best_v, best_w;
  for (int s = 0; s < starts; ++s) {
    CVec vv = rng.unit_vector(dim);
    CVec ww;
    double f = std::numeric_limits<double>::infinity();
    for (int it = 0; it < inner; ++it) {
      CMat m = CMat::Zero(dim, dim);
      for (const auto& b : basis) {
        CVec bv = b * vv;
        m += bv * bv.adjoint();
      }
      Eigen::SelfAdjointEigenSolver<CMat> esw(m);
      ww = esw.eigenvectors().col(0);
      CMat n = CMat::Zero(dim, dim);
      for (const auto& b : basis) {
        CVec bw = b.adjoint() * ww;
        n += bw * bw.adjoint();
      }
      Eigen::SelfAdjointEigenSolver<CMat> esv(n);
      vv = esv.eigenvectors().col(0);
      double fnew = esv.eigenvalues()(0);
      if (std::abs(f - fnew) <= 1e-17 + 1e-13 * std::abs(fnew)) {
        f = fnew;
        break;
      }
      f = fnew;
    }
    if (f < best) {
      best = f;
      best_v = vv;
      best_w = ww;
    }
    if (best < 0.1 * tol.zero) break;
  }

  v.value = best;
  if (best < tol.zero) {
    v.status = VerdictStatus::Fails;
    v.witness = {gauge_fix(best_v), gauge_fix(best_w)};
    v.note = "rank-one-in-orthocomplement";
  } else if (best >= tol.pass) {
    v.status = VerdictStatus::Holds;
    v.note = "no-orthogonal-rank-one";
  } else {
    v.status = VerdictStatus::Undetermined;
    v.note = "between-zero-and-pass";
  }
  return v;
}

Verdict is_strictly_positive(const SuperOp& phi, const SearchBudget& budget,
                             const Tolerances& tol) {
  if (phi.has_kraus()) {
    CMat stacked(phi.dim() * phi.dim(), static_cast<Eigen::Index>(phi.kraus().size()));
    for (size_t i = 0; i < phi.kraus().size(); ++i)
      stacked.col(static_cast<Eigen::Index>(i)) = vec(phi.kraus()[i]);
    CMat q = orthonormal_span(stacked, tol.span_rank_rel);
    std::vector<CMat> basis;
    basis.reserve(static_cast<size_t>(q.cols()));
    for (Eigen::Index c = 0; c < q.cols(); ++c)
      basis.push_back(devec(q.col(c), phi.dim()));
    return strict_positivity_from_span(basis, phi.dim(), budget, tol);
  }

  int starts = budget.starts_for_dim(phi.dim());
  MultistartOutcome best = multistart_minimize(min_output_eigenvalue(phi), phi.dim(),
                                               budget, starts, -1.0);
  CMat at_min = phi.apply(best.x * best.x.adjoint());
  RVec moduli = herm_eigenvalues(at_min).cwiseAbs();
  std::sort(moduli.data(), moduli.data() + moduli.size());
  double scale = moduli(moduli.size() / 2);

  Verdict v;
  v.value = best.value;
  v.tolerance = tol.pass * scale;
  v.effort = effort_of(budget, starts);
  if (best.value >= tol.pass * scale) {
    v.status = VerdictStatus::Holds;
    v.note = "descent-minimum-positive";
  } else {
    v.status = VerdictStatus::Fails;
    v.witness = {gauge_fix(best.x)};
    v.note = "singular-output-found";
  }
  return v;
}

}  // namespace wielandt
