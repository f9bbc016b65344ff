// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "wielandt/analysis.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace wielandt {

namespace {

class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming>& sink) : sink_(sink) {}

  template <typename F>
  auto time(const std::string& stage, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    auto finish = [&] {
      sink_.push_back({stage, std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count()});
    };
    try {
      auto result = body();
      finish();
      return result;
    } catch (...) {
      finish();
      throw;
    }
  }

 private:
  std::vector<StageTiming>& sink_;
};

int default_cap(int dim, int override_cap) {
  return override_cap > 0 ? override_cap : 2 * (dim - 1) * (dim - 1);
}

}  // namespace

bool AnalysisReport::any_violation() const {
  for (const BoundCheck& b : bounds)
    if (b.applicable && !b.ok) return true;
  return false;
}

AnalysisReport run_analysis(const SuperOp& phi, const AnalysisOptions& opt) {
  AnalysisReport r;
  r.dim = phi.dim();
  r.repr = phi.has_kraus() ? "kraus" : "natural";
  r.source = phi.metadata();
  r.tol = opt.tol;
  StageClock clock(r.timings);

  clock.time("positivity", [&] {
    r.completely_positive = is_completely_positive(phi, opt.tol);
    if (opt.positivity_searches) {
      r.positive = check_positive(phi, opt.budget, opt.tol);
      r.two_positive = check_two_positive(phi, opt.budget, opt.tol);
      r.schwarz = check_schwarz(phi, opt.budget, opt.tol);
      r.searches_ran = true;
    }
    return 0;
  });

  clock.time("spectral", [&] {
    try {
      r.spectral = spectral_data(phi, opt.tol);
      r.cert = is_primitive(r.spectral, opt.tol);
      r.spectral_ok = true;
    } catch (const AnalysisError& e) {
      r.spectral_reason = e.code();
    }
    if (r.spectral_ok && r.cert.primitive) {
      try {
        r.unitality = unitality_radius_check(phi, opt.tol);
        r.unitality_ran = true;
        if (!r.unitality.consistent)
          r.anomalies.push_back(
              "unitality and unit radius disagree on a primitive map");
      } catch (const AnalysisError& e) {
        r.anomalies.push_back(std::string("unitality: ") + e.what());
      }
    }
    return 0;
  });

  const bool primitive = r.spectral_ok && r.cert.primitive;

  clock.time("primitivity_index", [&] {
    if (!r.spectral_ok) {
      r.index_reason = "spectral extraction failed";
    } else if (!primitive) {
      r.index_reason = "not primitive";
    } else {
      try {
        r.index = primitivity_index(phi, opt.cap, opt.budget, opt.tol);
      } catch (const AnalysisError& e) {
        r.index_reason = e.code();
        r.anomalies.push_back(std::string("primitivity_index: ") + e.what());
      }
    }
    return 0;
  });

  clock.time("mult_domain", [&] {
    // Schwarz credential: a verified search when one ran, otherwise
    // complete positivity vouches for the inequality.
    bool schwarz_ok =
        r.searches_ran ? r.schwarz.holds() : r.completely_positive.holds();
    if (!primitive) {
      r.kappa_reason = "not primitive";
    } else if (!r.unitality_ran || !r.unitality.unital) {
      r.kappa_reason = "not unital";
    } else if (!schwarz_ok) {
      r.kappa_reason = "Schwarz credential missing";
    } else {
      try {
        r.kappa_result = kappa(phi, r.spectral.pf_left, opt.tol);
      } catch (const AnalysisError& e) {
        r.kappa_reason = e.code();
        r.anomalies.push_back(std::string("kappa: ") + e.what());
      }
    }
    return 0;
  });

  clock.time("wielength", [&] {
    if (!phi.has_kraus()) {
      r.wie_reason = "no Kraus form";
    } else if (!r.index) {
      r.wie_reason = "no primitivity index";
    } else {
      int cap = std::max(default_cap(r.dim, opt.cap), r.index->q);
      try {
        r.wie = wielength(phi.kraus(), cap, opt.tol);
      } catch (const AnalysisError& e) {
        r.wie_reason = e.code();
        r.anomalies.push_back(std::string("wielength: ") + e.what());
      }
    }
    return 0;
  });

  const int d = r.dim;
  BoundCheck thm_a{"q_vs_dimension", false, false, 0.0, 2.0 * (d - 1) * (d - 1)};
  if (r.index) {
    thm_a.applicable = true;
    thm_a.lhs = r.index->q;
    thm_a.ok = thm_a.lhs <= thm_a.rhs;
  }
  r.bounds.push_back(thm_a);

  BoundCheck kap{"kappa_vs_dimension", false, false, 0.0, 2.0 * d - 2.0};
  if (r.kappa_result) {
    kap.applicable = true;
    kap.lhs = r.kappa_result->kappa;
    kap.ok = kap.lhs <= kap.rhs;
  }
  r.bounds.push_back(kap);

  BoundCheck qk{"q_vs_kappa", false, false, 0.0, 0.0};
  if (r.index && r.kappa_result) {
    qk.applicable = true;
    qk.lhs = r.index->q;
    qk.rhs = static_cast<double>(d - 1) * r.kappa_result->kappa;
    qk.ok = qk.lhs <= qk.rhs;
  }
  r.bounds.push_back(qk);

  BoundCheck wie{"wielength_vs_q", false, false, 0.0, 0.0};
  if (r.wie && r.index) {
    wie.applicable = true;
    wie.rhs = r.index->q;
    if (r.wie->length) {
      wie.lhs = *r.wie->length;
      wie.ok = wie.lhs >= wie.rhs;
    } else {
      // The cap was swept without reaching full span, so the length
      // exceeds a cap that was itself at least q.
      wie.lhs = static_cast<double>(r.wie->profile.size()) + 1.0;
      wie.ok = true;
    }
  }
  r.bounds.push_back(wie);

  return r;
}

namespace {

Json tolerances_to_json(const Tolerances& t) {
  return Json{{"rep_coherence", t.rep_coherence},
              {"psd", t.psd},
              {"pass", t.pass},
              {"zero", t.zero},
              {"unital", t.unital},
              {"peripheral_band", t.peripheral_band},
              {"pf_posdef", t.pf_posdef},
              {"eig_floor", t.eig_floor},
              {"kernel_rel", t.kernel_rel},
              {"kernel_guard", t.kernel_guard},
              {"subspace_angle", t.subspace_angle},
              {"rank_rel", t.rank_rel},
              {"span_rank_rel", t.span_rank_rel},
              {"mixing_slack", t.mixing_slack}};
}

Json verdict_list(const std::vector<Verdict>& vs) {
  Json out = Json::array();
  for (const Verdict& v : vs) out.push_back(verdict_to_json(v));
  return out;
}

}  // namespace

Json report_to_json(const AnalysisReport& r) {
  Json j;
  j["source"] = r.source;
  j["provenance"] = r.provenance;
  j["dim"] = r.dim;
  j["repr"] = r.repr;

  Json pos;
  pos["completely_positive"] = verdict_to_json(r.completely_positive);
  if (r.searches_ran) {
    pos["positive"] = verdict_to_json(r.positive);
    pos["two_positive"] = verdict_to_json(r.two_positive);
    pos["schwarz"] = verdict_to_json(r.schwarz);
  }
  pos["searches_ran"] = r.searches_ran;
  j["positivity"] = std::move(pos);

  Json spec;
  spec["ok"] = r.spectral_ok;
  if (r.spectral_ok) {
    spec["radius"] = r.spectral.radius;
    spec["gap_ratio"] = r.spectral.gap_ratio;
    spec["peripheral_count"] = r.spectral.peripheral_count;
    Json ev = Json::array();
    for (const Complex& l : r.spectral.eigenvalues)
      ev.push_back({l.real(), l.imag()});
    spec["eigenvalues"] = std::move(ev);
    spec["primitive"] = r.cert.primitive;
    spec["unique_peripheral"] = r.cert.unique_peripheral;
    spec["left_definiteness"] = r.cert.left_definiteness;
    spec["right_definiteness"] = r.cert.right_definiteness;
  } else {
    spec["reason"] = r.spectral_reason;
  }
  if (r.unitality_ran) {
    spec["unital"] = r.unitality.unital;
    spec["unital_defect"] = r.unitality.unital_defect;
    spec["radius_is_one"] = r.unitality.radius_is_one;
    spec["consistent"] = r.unitality.consistent;
  }
  j["spectral"] = std::move(spec);

  Json prim;
  prim["applicable"] = r.index.has_value();
  if (r.index) {
    prim["q"] = r.index->q;
    prim["cap"] = r.index->cap;
    prim["bound"] = r.index->bound;
    prim["within_bound"] = r.index->within_bound;
    prim["per_n"] = verdict_list(r.index->per_n);
    prim["confirmations"] = verdict_list(r.index->confirmations);
  } else {
    prim["reason"] = r.index_reason;
  }
  j["primitivity"] = std::move(prim);

  Json md;
  md["applicable"] = r.kappa_result.has_value();
  if (r.kappa_result) {
    md["kappa"] = r.kappa_result->kappa;
    Json chain = Json::array();
    for (const MultDomain& m : r.kappa_result->chain)
      chain.push_back({{"rank", m.basis.rank()},
                       {"kernel_eigen_gap", m.kernel_eigen_gap},
                       {"contains_identity", m.contains_identity},
                       {"tolerance_warning", m.tolerance_warning}});
    md["chain"] = std::move(chain);
  } else {
    md["reason"] = r.kappa_reason;
  }
  j["mult_domain"] = std::move(md);

  Json wl;
  wl["applicable"] = r.wie.has_value();
  if (r.wie) {
    if (r.wie->length)
      wl["length"] = *r.wie->length;
    else
      wl["length"] = nullptr;
    wl["profile"] = r.wie->profile;
    wl["tolerance_warning"] = r.wie->tolerance_warning;
    if (r.wie->tolerance_warning) wl["tight_profile"] = r.wie->tight_profile;
  } else {
    wl["reason"] = r.wie_reason;
  }
  j["wielength"] = std::move(wl);

  Json bounds = Json::array();
  for (const BoundCheck& b : r.bounds)
    bounds.push_back({{"name", b.name},
                      {"status", b.status()},
                      {"lhs", b.lhs},
                      {"rhs", b.rhs}});
  j["bounds"] = std::move(bounds);

  j["anomalies"] = r.anomalies;
  j["tolerances"] = tolerances_to_json(r.tol);
  Json timings = Json::array();
  for (const StageTiming& t : r.timings)
    timings.push_back({{"stage", t.stage}, {"ms", t.ms}});
  j["timings"] = std::move(timings);
  return j;
}

namespace {

ScanRow row_from_report(const EnsembleSpec& spec, const GeneratedMap& g,
                        const AnalysisReport& rep, double ms) {
  ScanRow row;
  row.seed = g.seed;
  row.dim = spec.dim;
  row.kraus_count = spec.kraus_count;
  row.family = family_name(spec.family);
  if (rep.index) row.q = rep.index->q;
  if (rep.kappa_result) row.kappa = rep.kappa_result->kappa;
  if (rep.wie && rep.wie->length) row.wielength = *rep.wie->length;
  row.bound_q = 2 * (spec.dim - 1) * (spec.dim - 1);
  row.bound_kappa = 2 * spec.dim - 2;
  for (const BoundCheck& b : rep.bounds) {
    std::optional<bool>* slot = nullptr;
    if (b.name == "q_vs_dimension") slot = &row.ok_thm_a;
    if (b.name == "kappa_vs_dimension") slot = &row.ok_kappa;
    if (b.name == "q_vs_kappa") slot = &row.ok_qkappa;
    if (b.name == "wielength_vs_q") slot = &row.ok_wie;
    if (slot && b.applicable) *slot = b.ok;
  }
  row.runtime_ms = ms;
  row.rejections = g.rejections;
  row.anomalies = rep.anomalies;
  return row;
}

}  // namespace

ScanResult run_scan(const EnsembleSpec& spec, int jobs, const AnalysisOptions& opt) {
  spec.validate();
  ScanResult result;
  result.rows.resize(static_cast<size_t>(spec.count));
  result.bound_q = 2 * (spec.dim - 1) * (spec.dim - 1);

  int workers = jobs > 0 ? jobs
                         : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers > spec.count) workers = spec.count;

  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next.fetch_add(1); i < spec.count; i = next.fetch_add(1)) {
      auto t0 = std::chrono::steady_clock::now();
      ScanRow row;
      try {
        GeneratedMap g = realize_instance(spec, i);
        AnalysisReport rep = run_analysis(g.map, opt);
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        row = row_from_report(spec, g, rep, ms);
      } catch (const AnalysisError& e) {
        row.seed = spec.seed + static_cast<std::uint64_t>(i);
        row.dim = spec.dim;
        row.kraus_count = spec.kraus_count;
        row.family = family_name(spec.family);
        row.bound_q = 2 * (spec.dim - 1) * (spec.dim - 1);
        row.bound_kappa = 2 * spec.dim - 2;
        row.runtime_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        row.anomalies.push_back(std::string(e.code()) + ": " + e.what());
      }
      result.rows[static_cast<size_t>(i)] = std::move(row);
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();

  result.violations = 0;
  bool anomalous = false;
  for (const ScanRow& row : result.rows) {
    if (row.q && *row.q > result.max_q) result.max_q = *row.q;
    auto count = [&](const std::optional<bool>& ok) {
      if (ok && !*ok) ++result.violations;
    };
    count(row.ok_thm_a);
    count(row.ok_kappa);
    count(row.ok_qkappa);
    count(row.ok_wie);
    if (!row.anomalies.empty()) anomalous = true;
  }
  result.ok = result.violations == 0 && !anomalous;
  return result;
}

std::string scan_to_csv(const ScanResult& result) {
  std::ostringstream out;
  out << "seed,D,g,family,q,kappa,wielength,bound_q,bound_kappa,"
         "ok_thmA,ok_kappa,ok_qkappa,ok_wie,runtime_ms\n";
  auto opt_int = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  auto opt_bool = [](const std::optional<bool>& v) {
    return v ? std::string(*v ? "1" : "0") : std::string();
  };
  char buf[32];
  for (const ScanRow& r : result.rows) {
    std::snprintf(buf, sizeof buf, "%.3f", r.runtime_ms);
    out << r.seed << ',' << r.dim << ',' << r.kraus_count << ',' << r.family
        << ',' << opt_int(r.q) << ',' << opt_int(r.kappa) << ','
        << opt_int(r.wielength) << ',' << r.bound_q << ',' << r.bound_kappa
        << ',' << opt_bool(r.ok_thm_a) << ',' << opt_bool(r.ok_kappa) << ','
        << opt_bool(r.ok_qkappa) << ',' << opt_bool(r.ok_wie) << ',' << buf
        << '\n';
  }
  if (!result.rows.empty()) {
    const ScanRow& first = result.rows.front();
    out << ',' << first.dim << ',' << first.kraus_count << ",summary,"
        << result.max_q << ",,," << result.bound_q << ",,"
        << (result.max_q <= result.bound_q ? '1' : '0') << ",,,,\n";
  }
  return out.str();
}

}  // namespace wielandt
