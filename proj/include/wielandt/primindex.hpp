// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wielandt/superop.hpp"
#include "wielandt/verdict.hpp"

namespace wielandt {

// Trail of strict-positivity verdicts ending at the index of primitivity,
// plus the dimension-only ceiling. confirmations re-verify the two powers
// just past q so a threshold artifact cannot masquerade as the answer.
struct IndexCertificate {
  int q = 0;
  std::vector<Verdict> per_n;  // entry i is the verdict for power i + 1
  std::vector<Verdict> confirmations;
  int cap = 0;
  int bound = 0;  // 2 (D - 1)^2
  bool within_bound = false;
};

// Smallest n with phi^n strictly positive, searched in ascending order.
// cap = 0 means the 2(D-1)^2 ceiling. Kraus maps are handled through the
// span of length-n words, kept orthonormal and grown one letter at a time;
// other maps fall back to descent on the natural power.
IndexCertificate primitivity_index(const SuperOp& phi, int cap = 0,
                                   const SearchBudget& budget = {},
                                   const Tolerances& tol = {});

struct QKappaReport {
  int q = 0;
  int kappa = 0;
  int bound = 0;  // (D - 1) * kappa
  bool ok = false;
};

// Computes q and kappa on the same map and checks q <= (D-1) kappa.
// Requires a unital map with positive definite adjoint fixed point.
QKappaReport check_q_vs_kappa(const SuperOp& phi, const SearchBudget& budget = {},
                              const Tolerances& tol = {});

struct RankMonotonicityReport {
  int trials = 0;  // per rank
  std::vector<int> min_output_rank;  // entry r - 1 is over inputs of rank r
  bool ok = false;
};

// Random projections of every rank 1..D-1 must gain rank under phi^kappa.
// A single non-increase aborts with RankViolation.
RankMonotonicityReport rank_monotonicity_check(const SuperOp& phi, int kappa,
                                               int trials,
                                               std::uint64_t seed = 0x9E3779B9ULL,
                                               const Tolerances& tol = {});

// range(a) inside range(proj), measured as the relative mass of a outside
// the projection. Zero matrices are dominated by convention.
bool range_dominated(const CMat& a, const CMat& proj, double rel_tol = 1e-8);

struct IrreducibilityProbe {
  int pairs = 0;
  int findings = 0;
  std::vector<CMat> example;  // first offending {p, q}, empty when clean
};

// Hunts for equal-rank projection pairs p, q with phi^kappa(p) dominated by
// q. Primitive maps should produce zero findings.
IrreducibilityProbe full_irreducibility_probe(const SuperOp& phi, int kappa,
                                              int trials,
                                              std::uint64_t seed = 0xD1CE5EEDULL,
                                              const Tolerances& tol = {});

struct WielengthResult {
  std::optional<int> length;  // empty when the cap was reached first
  std::vector<int> profile;   // dim span S^k for k = 1..last examined
  bool tolerance_warning = false;
  std::vector<int> tight_profile;  // populated only when the warning fired
};

// Smallest k with span of the length-k products equal to all of M_D. Ranks
// are re-decided at a 10x tighter singular value cut; disagreement keeps the
// looser answer and reports both profiles.
WielengthResult wielength(const std::vector<CMat>& s, int cap,
                          const Tolerances& tol = {});

struct WielengthQReport {
  int q = 0;
  std::optional<int> wielength;
  std::optional<int> gap;
  bool ok = false;
};

// Wielength of the set against the primitivity index of its map.
WielengthQReport check_wielength_ge_q(const std::vector<CMat>& s, int cap,
                                      const SearchBudget& budget = {},
                                      const Tolerances& tol = {});

}  // namespace wielandt
