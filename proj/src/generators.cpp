// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "wielandt/generators.hpp"

#include <cmath>
#include <utility>

#include "wielandt/rng.hpp"
#include "wielandt/spectral.hpp"

namespace wielandt {

namespace {

// Rejected draws step the seed by a large odd stride so retries never
// collide with the seed + index lattice a scan walks.
constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ULL;
constexpr int kRejectionLimit = 100;

CMat matrix_unit(int dim, int i, int j) {
  CMat e = CMat::Zero(dim, dim);
  e(i, j) = 1.0;
  return e;
}

bool passes_primitivity(const SuperOp& phi) {
  try {
    return is_primitive(phi).primitive;
  } catch (const InconclusiveSpectrum&) {
    return false;
  } catch (const SingularEigenvector&) {
    return false;
  }
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::RandomCp: return "random_cp";
    case Family::RandomCpUnital: return "random_cp_unital";
    case Family::ClassicalEmbedding: return "classical_embedding";
    case Family::Depolarizing: return "depolarizing";
    case Family::Transpose: return "transpose";
    case Family::UnitaryConj: return "unitary_conj";
    case Family::WielandtDigraph: return "wielandt_digraph";
  }
  throw InvalidDimension("family_name: unknown family tag");
}

Family family_from_name(const std::string& name) {
  if (name == "random_cp") return Family::RandomCp;
  if (name == "random_cp_unital") return Family::RandomCpUnital;
  if (name == "classical_embedding") return Family::ClassicalEmbedding;
  if (name == "depolarizing") return Family::Depolarizing;
  if (name == "transpose") return Family::Transpose;
  if (name == "unitary_conj") return Family::UnitaryConj;
  if (name == "wielandt_digraph") return Family::WielandtDigraph;
  throw ParseError("family_from_name: unknown family '" + name + "'");
}

void EnsembleSpec::validate() const {
  if (dim < 2) throw InvalidDimension("EnsembleSpec: dim must be >= 2");
  if (count < 1) throw EmptySet("EnsembleSpec: count must be >= 1");
  if ((family == Family::RandomCp || family == Family::RandomCpUnital) &&
      kraus_count < 2)
    throw InvalidDimension("EnsembleSpec: kraus_count must be >= 2");
}

SuperOp gen_classical_embedding(const Eigen::MatrixXi& adjacency) {
  const Eigen::Index n = adjacency.rows();
  if (n != adjacency.cols() || n < 1)
    throw DimensionMismatch("gen_classical_embedding: adjacency must be square");
  for (Eigen::Index j = 0; j < n; ++j)
    if ((adjacency.col(j).array() == 0).all())
      throw ZeroColumn("gen_classical_embedding: column " + std::to_string(j) +
                       " is zero, the map would annihilate E_" +
                       std::to_string(j) + std::to_string(j));
  std::vector<CMat> kraus;
  const int d = static_cast<int>(n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (adjacency(i, j) != 0) kraus.push_back(matrix_unit(d, i, j));
  return SuperOp::from_kraus(std::move(kraus), "classical_embedding");
}

Eigen::MatrixXi wielandt_adjacency(int dim) {
  if (dim < 2) throw InvalidDimension("wielandt_adjacency: dim must be >= 2");
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) a((j + 1) % dim, j) = 1;
  a(1, dim - 1) = 1;
  return a;
}

SuperOp gen_wielandt_digraph(int dim) {
  Eigen::MatrixXi a = wielandt_adjacency(dim);
  const int expected = (dim - 1) * (dim - 1) + 1;
  const int got = classical_wielandt_index(a, expected + 1);
  if (got != expected)
    throw OracleMismatch("gen_wielandt_digraph: classical index " +
                         std::to_string(got) + ", expected " +
                         std::to_string(expected));
  return gen_classical_embedding(a).with_metadata("wielandt_digraph");
}

GeneratedMap gen_random_cp(int dim, int kraus_count, std::uint64_t seed) {
  if (dim < 2) throw InvalidDimension("gen_random_cp: dim must be >= 2");
  if (kraus_count < 2)
    throw InvalidDimension("gen_random_cp: kraus_count must be >= 2");
  for (int attempt = 0; attempt < kRejectionLimit; ++attempt) {
    const std::uint64_t s = seed + attempt * kSeedStride;
    Rng rng(s);
    std::vector<CMat> kraus;
    kraus.reserve(static_cast<size_t>(kraus_count));
    for (int b = 0; b < kraus_count; ++b) kraus.push_back(rng.ginibre(dim, dim));
    SuperOp phi = SuperOp::from_kraus(std::move(kraus), "random_cp");
    if (passes_primitivity(phi)) return {std::move(phi), s, attempt, -1};
  }
  throw RejectionLimit("gen_random_cp: " + std::to_string(kRejectionLimit) +
                       " consecutive non-primitive draws");
}

GeneratedMap gen_random_cp_unital(int dim, int kraus_count, std::uint64_t seed) {
  GeneratedMap draw = gen_random_cp(dim, kraus_count, seed);
  NormalizedMap nm = similarity_normalize(draw.map);
  CMat id = CMat::Identity(dim, dim);
  double defect = (nm.map.apply(id) - id).norm();
  if (defect > 1e-8)
    throw NotUnital("gen_random_cp_unital: unitality defect " +
                    std::to_string(defect));
  draw.map = nm.map.with_metadata("random_cp_unital");
  return draw;
}

SuperOp gen_depolarizing(int dim) {
  if (dim < 2) throw InvalidDimension("gen_depolarizing: dim must be >= 2");
  std::vector<CMat> kraus;
  const double s = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) kraus.push_back(s * matrix_unit(dim, i, j));
  return SuperOp::from_kraus(std::move(kraus), "depolarizing");
}

SuperOp gen_transpose(int dim) {
  if (dim < 2) throw InvalidDimension("gen_transpose: dim must be >= 2");
  CMat natural = CMat::Zero(dim * dim, dim * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) natural(i * dim + j, j * dim + i) = 1.0;
  return SuperOp::from_natural(std::move(natural), "transpose");
}

SuperOp gen_unitary_conj(const CMat& u) {
  if (u.rows() != u.cols() || u.rows() < 1)
    throw DimensionMismatch("gen_unitary_conj: argument must be square");
  const int d = static_cast<int>(u.rows());
  double defect = (u.adjoint() * u - CMat::Identity(d, d)).norm();
  if (defect > 1e-10)
    throw NotUnitary("gen_unitary_conj: unitarity defect " +
                     std::to_string(defect));
  return SuperOp::from_kraus({u}, "unitary_conj");
}

namespace {

GeneratedMap realize_classical(int dim, std::uint64_t seed) {
  const int cap = (dim - 1) * (dim - 1) + 1;
  for (int attempt = 0; attempt < kRejectionLimit; ++attempt) {
    const std::uint64_t s = seed + attempt * kSeedStride;
    Rng rng(s);
    Eigen::MatrixXi a(dim, dim);
    for (int j = 0; j < dim; ++j)
      for (int i = 0; i < dim; ++i) a(i, j) = rng.uniform() < 0.5 ? 0 : 1;
    bool zero_column = false;
    for (int j = 0; j < dim; ++j)
      if ((a.col(j).array() == 0).all()) zero_column = true;
    if (zero_column) continue;
    try {
      int index = classical_wielandt_index(a, cap);
      return {gen_classical_embedding(a), s, attempt, index};
    } catch (const CapExceeded&) {
      continue;
    }
  }
  throw RejectionLimit("realize_instance: no primitive digraph in " +
                       std::to_string(kRejectionLimit) + " draws");
}

}  // namespace

GeneratedMap realize_instance(const EnsembleSpec& spec, int index) {
  spec.validate();
  if (index < 0 || index >= spec.count)
    throw InvalidDimension("realize_instance: index out of range");
  const std::uint64_t s = spec.seed + static_cast<std::uint64_t>(index);
  switch (spec.family) {
    case Family::RandomCp:
      return gen_random_cp(spec.dim, spec.kraus_count, s);
    case Family::RandomCpUnital:
      return gen_random_cp_unital(spec.dim, spec.kraus_count, s);
    case Family::ClassicalEmbedding:
      return realize_classical(spec.dim, s);
    case Family::Depolarizing:
      return {gen_depolarizing(spec.dim), s, 0, -1};
    case Family::Transpose:
      return {gen_transpose(spec.dim), s, 0, -1};
    case Family::UnitaryConj: {
      Rng rng(s);
      return {gen_unitary_conj(rng.unitary(spec.dim)), s, 0, -1};
    }
    case Family::WielandtDigraph:
      return {gen_wielandt_digraph(spec.dim), s, 0,
              (spec.dim - 1) * (spec.dim - 1) + 1};
  }
  throw InvalidDimension("realize_instance: unknown family tag");
}

int classical_wielandt_index(const Eigen::MatrixXi& adjacency, int cap) {
  const Eigen::Index n = adjacency.rows();
  if (n != adjacency.cols() || n < 1)
    throw DimensionMismatch("classical_wielandt_index: adjacency must be square");
  if (cap < 1)
    throw InvalidDimension("classical_wielandt_index: cap must be >= 1");
  Eigen::MatrixXi base = (adjacency.array() > 0).cast<int>().matrix();
  Eigen::MatrixXi cur = base;
  for (int k = 1; k <= cap; ++k) {
    if ((cur.array() > 0).all()) return k;
    cur = ((cur * base).array() > 0).cast<int>().matrix();
  }
  throw CapExceeded("classical_wielandt_index: not positive by power " +
                    std::to_string(cap));
}

}  // namespace wielandt
