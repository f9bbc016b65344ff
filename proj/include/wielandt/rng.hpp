// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <random>

#include "wielandt/linalg.hpp"

namespace wielandt {

// Deterministic Gaussian source. std::normal_distribution is
// implementation-defined, so Box-Muller is rolled by hand to keep
// streams reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t raw() { return engine_(); }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double gaussian();

  Complex complex_gaussian() { return Complex(gaussian(), gaussian()); }

  CVec unit_vector(int dim);
  CMat ginibre(int rows, int cols);
  CMat hermitian(int dim);
  // Haar distributed, via QR of a Ginibre matrix with the R diagonal
  // phases absorbed into Q.
  CMat unitary(int dim);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace wielandt
