// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wielandt/generators.hpp"
#include "wielandt/io.hpp"
#include "wielandt/multdomain.hpp"
#include "wielandt/positivity.hpp"
#include "wielandt/primindex.hpp"
#include "wielandt/spectral.hpp"

namespace wielandt {

// One inequality, always carrying the two numbers it compares. A check
// whose prerequisites are missing is reported but marked not applicable.
struct BoundCheck {
  std::string name;
  bool applicable = false;
  bool ok = false;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string status() const {
    return applicable ? (ok ? "satisfied" : "violated") : "not applicable";
  }
};

struct StageTiming {
  std::string stage;
  double ms = 0.0;
};

struct AnalysisOptions {
  int cap = 0;  // overrides the 2(D-1)^2 search ceiling when positive
  bool positivity_searches = true;  // multistart hunts beyond the CP check
  Tolerances tol;
  SearchBudget budget;
};

struct AnalysisReport {
  std::string source;
  Json provenance = Json::object();
  int dim = 0;
  std::string repr;

  Verdict completely_positive;
  Verdict positive;
  Verdict two_positive;
  Verdict schwarz;
  bool searches_ran = false;

  bool spectral_ok = false;
  std::string spectral_reason;  // why extraction yielded no data
  SpectralData spectral;
  PrimitivityCertificate cert;
  bool unitality_ran = false;  // radius consistency needs a primitive map
  UnitalityRadiusReport unitality;

  std::optional<IndexCertificate> index;
  std::string index_reason;  // why the section is absent
  std::optional<KappaResult> kappa_result;
  std::string kappa_reason;
  std::optional<WielengthResult> wie;
  std::string wie_reason;

  std::vector<BoundCheck> bounds;  // thmA, kappa, qkappa, wie
  std::vector<std::string> anomalies;
  Tolerances tol;
  std::vector<StageTiming> timings;

  bool any_violation() const;
  bool clean() const { return !any_violation() && anomalies.empty(); }
};

// Pipeline: representations, positivity, spectral data, then index and
// multiplicative-domain sections when the map's credentials allow them.
AnalysisReport run_analysis(const SuperOp& phi, const AnalysisOptions& opt = {});

Json report_to_json(const AnalysisReport& report);

// One CSV row of a sweep. Missing credentials leave fields empty.
struct ScanRow {
  std::uint64_t seed = 0;
  int dim = 0;
  int kraus_count = 0;
  std::string family;
  std::optional<int> q;
  std::optional<int> kappa;
  std::optional<int> wielength;
  int bound_q = 0;
  int bound_kappa = 0;
  std::optional<bool> ok_thm_a;
  std::optional<bool> ok_kappa;
  std::optional<bool> ok_qkappa;
  std::optional<bool> ok_wie;
  double runtime_ms = 0.0;
  int rejections = 0;
  std::vector<std::string> anomalies;
};

struct ScanResult {
  std::vector<ScanRow> rows;  // instance order, ascending seed
  int max_q = 0;
  int bound_q = 0;
  int violations = 0;  // applicable-and-violated bound count over all rows
  bool ok = false;     // no violations and no anomalies
};

// Analyzes every instance of the ensemble, distributing across `jobs`
// workers (0 picks the hardware count). Row order is by instance index
// regardless of scheduling.
ScanResult run_scan(const EnsembleSpec& spec, int jobs = 0,
                    const AnalysisOptions& opt = {});

// Fixed column set; the summary row repeats max q against the Theorem A
// ceiling. runtime_ms is the only field expected to vary between runs.
std::string scan_to_csv(const ScanResult& result);

}  // namespace wielandt
