// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wielandt/linalg.hpp"
#include "wielandt/tolerances.hpp"

namespace wielandt {

enum class VerdictStatus { Holds, Fails, Undetermined };

// How much searching backed a verdict. Exact algebraic decisions record
// zero starts and name their route in Verdict::note.
struct SearchEffort {
  int starts = 0;
  int max_iters = 0;
  std::uint64_t seed = 0;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Undetermined;
  double value = 0.0;      // decisive objective value (best found, or exact)
  double tolerance = 0.0;  // pass threshold that was in force
  // Empty, a single matrix, or a pair of column vectors, depending on the
  // check that produced it.
  std::vector<CMat> witness;
  SearchEffort effort;
  std::string note;  // which decision route fired

  bool holds() const { return status == VerdictStatus::Holds; }
  bool fails() const { return status == VerdictStatus::Fails; }
  bool undetermined() const { return status == VerdictStatus::Undetermined; }
};

const char* to_string(VerdictStatus s);

}  // namespace wielandt
