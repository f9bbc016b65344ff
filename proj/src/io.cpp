// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "wielandt/io.hpp"

#include <fstream>

namespace wielandt {

Json matrix_to_json(const CMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw ParseError("matrix_from_json: expected a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty())
    throw ParseError("matrix_from_json: rows must be non-empty arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw ParseError("matrix_from_json: ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& e = row[static_cast<size_t>(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw ParseError("matrix_from_json: entries must be [re, im] pairs");
      m(i, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

Json map_to_json(const SuperOp& phi, Json metadata) {
  Json j;
  j["dim"] = phi.dim();
  if (!metadata.is_object()) throw ParseError("map_to_json: metadata must be an object");
  if (!phi.metadata().empty() && !metadata.contains("tag"))
    metadata["tag"] = phi.metadata();
  if (phi.has_kraus()) {
    j["repr"] = "kraus";
    Json list = Json::array();
    for (const CMat& k : phi.kraus()) list.push_back(matrix_to_json(k));
    j["matrices"] = std::move(list);
  } else {
    j["repr"] = "natural";
    j["matrices"] = matrix_to_json(phi.natural());
  }
  j["metadata"] = std::move(metadata);
  return j;
}

SuperOp map_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("map_from_json: expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("map_from_json: missing integer 'dim'");
  if (!j.contains("repr") || !j["repr"].is_string())
    throw ParseError("map_from_json: missing string 'repr'");
  if (!j.contains("matrices"))
    throw ParseError("map_from_json: missing 'matrices'");
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw ParseError("map_from_json: dim must be positive");
  const std::string repr = j["repr"].get<std::string>();
  std::string tag;
  if (j.contains("metadata") && j["metadata"].is_object() &&
      j["metadata"].contains("tag") && j["metadata"]["tag"].is_string())
    tag = j["metadata"]["tag"].get<std::string>();

  auto expect_square = [&](const CMat& m, Eigen::Index n, const char* what) {
    if (m.rows() != n || m.cols() != n)
      throw ParseError(std::string("map_from_json: ") + what + " has wrong shape");
  };

  if (repr == "kraus") {
    if (!j["matrices"].is_array() || j["matrices"].empty())
      throw ParseError("map_from_json: 'kraus' needs a non-empty matrix list");
    std::vector<CMat> kraus;
    for (const Json& jm : j["matrices"]) {
      CMat k = matrix_from_json(jm);
      expect_square(k, dim, "Kraus operator");
      kraus.push_back(std::move(k));
    }
    return SuperOp::from_kraus(std::move(kraus), tag);
  }
  if (repr == "choi") {
    CMat choi = matrix_from_json(j["matrices"]);
    expect_square(choi, static_cast<Eigen::Index>(dim) * dim, "Choi matrix");
    return SuperOp::from_choi(choi, tag);
  }
  if (repr == "natural") {
    CMat natural = matrix_from_json(j["matrices"]);
    expect_square(natural, static_cast<Eigen::Index>(dim) * dim, "natural matrix");
    return SuperOp::from_natural(std::move(natural), tag);
  }
  throw ParseError("map_from_json: unknown repr '" + repr + "'");
}

SuperOp read_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("read_map_file: cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ParseError("read_map_file: " + std::string(e.what()));
  }
  return map_from_json(j);
}

void write_map_file(const std::string& path, const SuperOp& phi, Json metadata) {
  std::ofstream out(path);
  if (!out) throw ParseError("write_map_file: cannot open " + path);
  out << map_to_json(phi, std::move(metadata)).dump(2) << "\n";
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["value"] = v.value;
  j["tolerance"] = v.tolerance;
  Json witness = Json::array();
  for (const CMat& w : v.witness) witness.push_back(matrix_to_json(w));
  j["witness"] = std::move(witness);
  j["effort"] = {{"starts", v.effort.starts},
                 {"max_iters", v.effort.max_iters},
                 {"seed", v.effort.seed}};
  j["note"] = v.note;
  return j;
}

}  // namespace wielandt
