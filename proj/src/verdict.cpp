// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "wielandt/verdict.hpp"

namespace wielandt {

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Holds:
      return "holds";
    case VerdictStatus::Fails:
      return "fails";
    case VerdictStatus::Undetermined:
      return "undetermined";
  }
  return "undetermined";
}

}  // namespace wielandt
