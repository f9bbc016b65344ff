// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wielandt/analysis.hpp"

namespace {

using namespace wielandt;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitViolation = 3;

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot open output file " + out_path);
  out << j.dump(2) << "\n";
}

int cmd_analyze(const std::string& path, const std::string& out_path,
                double tol_psd, double tol_rank, int cap) {
  SuperOp phi = read_map_file(path);
  AnalysisOptions opt;
  if (tol_psd > 0) opt.tol.psd = tol_psd;
  if (tol_rank > 0) {
    opt.tol.rank_rel = tol_rank;
    opt.tol.span_rank_rel = tol_rank;
  }
  opt.cap = cap;
  AnalysisReport report = run_analysis(phi, opt);
  report.provenance["path"] = path;
  emit(report_to_json(report), out_path);
  return report.clean() ? kExitOk : kExitViolation;
}

int cmd_generate(const std::string& family, int dim, int kraus, uint64_t seed,
                 const std::string& out_path) {
  EnsembleSpec spec;
  spec.family = family_from_name(family);
  spec.dim = dim;
  spec.kraus_count = kraus;
  spec.seed = seed;
  spec.count = 1;
  GeneratedMap g = realize_instance(spec, 0);
  Json provenance;
  provenance["family"] = family;
  provenance["seed"] = g.seed;
  provenance["rejections"] = g.rejections;
  if (g.oracle_index >= 0) provenance["oracle_index"] = g.oracle_index;
  write_map_file(out_path, g.map, provenance);
  provenance["path"] = out_path;
  provenance["dim"] = dim;
  std::cout << provenance.dump(2) << "\n";
  return kExitOk;
}

EnsembleSpec read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("spec parse: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("spec must be a JSON object");
  EnsembleSpec spec;
  auto pick = [&](const char* a, const char* b) -> const Json* {
    if (j.contains(a)) return &j[a];
    if (b && j.contains(b)) return &j[b];
    return nullptr;
  };
  const Json* fam = pick("family", nullptr);
  if (!fam || !fam->is_string()) throw ParseError("spec needs a string 'family'");
  spec.family = family_from_name(fam->get<std::string>());
  const Json* dim = pick("dim", "D");
  if (!dim || !dim->is_number_integer()) throw ParseError("spec needs integer 'dim'");
  spec.dim = dim->get<int>();
  if (const Json* g = pick("kraus_count", "g"))
    spec.kraus_count = g->get<int>();
  if (const Json* s = pick("seed", nullptr)) spec.seed = s->get<uint64_t>();
  if (const Json* c = pick("count", nullptr)) spec.count = c->get<int>();
  if (const char* env = std::getenv("WIELANDT_SEED")) {
    try {
      spec.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError("WIELANDT_SEED is not an unsigned integer");
    }
  }
  spec.validate();
  return spec;
}

int cmd_scan(const std::string& spec_path, const std::string& csv_path,
             int jobs) {
  EnsembleSpec spec = read_spec_file(spec_path);
  ScanResult result = run_scan(spec, jobs);
  {
    std::ofstream out(csv_path);
    if (!out) throw ParseError("cannot open CSV output " + csv_path);
    out << scan_to_csv(result);
  }
  Json summary;
  summary["count"] = spec.count;
  summary["max_q"] = result.max_q;
  summary["bound_q"] = result.bound_q;
  summary["violations"] = result.violations;
  summary["ok"] = result.ok;
  for (const ScanRow& row : result.rows)
    for (const std::string& a : row.anomalies)
      std::cerr << "instance seed " << row.seed << ": " << a << "\n";
  std::cout << summary.dump(2) << "\n";
  return result.ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral and multiplicative-domain analysis of linear maps "
               "on matrix algebras"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Analyze a map file");
  std::string an_path, an_out;
  double an_tol_psd = -1.0, an_tol_rank = -1.0;
  int an_cap = 0;
  analyze->add_option("file", an_path, "map JSON file")->required();
  analyze->add_option("--out", an_out, "report path (stdout when absent)");
  analyze->add_option("--tol-psd", an_tol_psd, "PSD tolerance override");
  analyze->add_option("--tol-rank", an_tol_rank, "rank tolerance override");
  analyze->add_option("--cap", an_cap, "index search cap override");

  auto* generate = app.add_subcommand("generate", "Generate a map family");
  std::string gen_family, gen_out;
  int gen_dim = 0, gen_kraus = 2;
  uint64_t gen_seed = 0;
  generate->add_option("family", gen_family, "family tag")->required();
  generate->add_option("--dim", gen_dim, "matrix dimension")->required();
  generate->add_option("--kraus", gen_kraus, "Kraus operator count");
  generate->add_option("--seed", gen_seed, "base seed");
  generate->add_option("--out", gen_out, "output map path")->required();

  auto* scan = app.add_subcommand("scan", "Sweep an ensemble spec");
  std::string scan_spec, scan_csv;
  int scan_jobs = 0;
  scan->add_option("spec", scan_spec, "ensemble spec JSON")->required();
  scan->add_option("--csv", scan_csv, "CSV output path")->required();
  scan->add_option("--jobs", scan_jobs, "worker count (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (analyze->parsed())
      return cmd_analyze(an_path, an_out, an_tol_psd, an_tol_rank, an_cap);
    if (generate->parsed())
      return cmd_generate(gen_family, gen_dim, gen_kraus, gen_seed, gen_out);
    if (scan->parsed()) return cmd_scan(scan_spec, scan_csv, scan_jobs);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const EmptySet& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidDimension& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const AnalysisError& e) {
    std::cerr << e.what() << "\n";
    return kExitViolation;
  }
  return kExitOk;
}
