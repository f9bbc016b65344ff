// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <string>

#include "wielandt/superop.hpp"

namespace wielandt {

enum class Family {
  RandomCp,
  RandomCpUnital,
  ClassicalEmbedding,
  Depolarizing,
  Transpose,
  UnitaryConj,
  WielandtDigraph,
};

// Stable tags used in JSON, CSV, and on the command line.
std::string family_name(Family family);
Family family_from_name(const std::string& name);

struct EnsembleSpec {
  int dim = 0;
  int kraus_count = 0;
  std::uint64_t seed = 0;
  int count = 1;
  Family family = Family::RandomCp;

  // Throws InvalidDimension or EmptySet when a field is out of range for
  // the chosen family.
  void validate() const;
};

// A generated map plus the sampling provenance the report writers record.
struct GeneratedMap {
  SuperOp map;
  std::uint64_t seed = 0;  // seed of the accepted draw
  int rejections = 0;      // non-primitive draws discarded before it
  int oracle_index = -1;   // classical index when an adjacency was involved
};

// Kraus set {E_ij : adjacency(i, j) != 0}, i.e. one edge j -> i per nonzero
// entry in column-action convention. A zero column would annihilate the
// corresponding diagonal projection, which is rejected up front.
SuperOp gen_classical_embedding(const Eigen::MatrixXi& adjacency);

// D-cycle plus the chord that shortens the cycle by one step (for D = 2 the
// chord degenerates to a self-loop). The adjacency is gated through the
// classical oracle, which must report index (D-1)^2 + 1 before the map is
// released.
SuperOp gen_wielandt_digraph(int dim);
Eigen::MatrixXi wielandt_adjacency(int dim);

// Kraus entries are i.i.d. complex Gaussians. Draws whose spectral
// certificate fails primitivity are discarded and the seed advanced by a
// fixed stride; one hundred consecutive rejections raise RejectionLimit.
GeneratedMap gen_random_cp(int dim, int kraus_count, std::uint64_t seed);

// Same sampling, then conjugated to the unital form. The unitality defect
// of the released map must sit within 1e-8.
GeneratedMap gen_random_cp_unital(int dim, int kraus_count, std::uint64_t seed);

// phi(a) = Tr(a) I / D with Kraus set {E_ij / sqrt(D)}.
SuperOp gen_depolarizing(int dim);

// a |-> a^T, built entrywise on the natural representation; no Kraus form
// exists. Positive but not completely positive.
SuperOp gen_transpose(int dim);

// a |-> U a U*. The argument must be unitary within 1e-10.
SuperOp gen_unitary_conj(const CMat& u);

// Instance `index` of an ensemble, deterministic in (spec, index). Random
// families advance the base seed by the index; fixed families ignore it.
GeneratedMap realize_instance(const EnsembleSpec& spec, int index);

// First power of a 0/1 adjacency pattern with all entries positive, by
// saturated integer matrix powers. The authoritative source for classical
// index values quoted in tests.
int classical_wielandt_index(const Eigen::MatrixXi& adjacency, int cap);

}  // namespace wielandt
