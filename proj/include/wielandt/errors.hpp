// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <stdexcept>
#include <string>

namespace wielandt {

// Base class for all analysis failures. `code()` is a stable machine-readable
// tag; `what()` carries the human-readable detail.
class AnalysisError : public std::runtime_error {
public:
  AnalysisError(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

#define WIELANDT_DEFINE_ERROR(NAME)                                  \
  class NAME : public AnalysisError {                                \
  public:                                                            \
    explicit NAME(const std::string& msg) : AnalysisError(#NAME, msg) {} \
  }

WIELANDT_DEFINE_ERROR(DimensionMismatch);
WIELANDT_DEFINE_ERROR(InvalidDimension);
WIELANDT_DEFINE_ERROR(NotCompletelyPositive);
WIELANDT_DEFINE_ERROR(WeightNotPositiveDefinite);
WIELANDT_DEFINE_ERROR(NotPrimitive);
WIELANDT_DEFINE_ERROR(NotUnital);
WIELANDT_DEFINE_ERROR(NotUnitary);
WIELANDT_DEFINE_ERROR(SingularEigenvector);
WIELANDT_DEFINE_ERROR(InconclusiveSpectrum);
WIELANDT_DEFINE_ERROR(FormNotPSD);
WIELANDT_DEFINE_ERROR(NonAlgebraKernel);
WIELANDT_DEFINE_ERROR(ChainTooLong);
WIELANDT_DEFINE_ERROR(CapExceeded);
WIELANDT_DEFINE_ERROR(RankViolation);
WIELANDT_DEFINE_ERROR(ZeroColumn);
WIELANDT_DEFINE_ERROR(RejectionLimit);
WIELANDT_DEFINE_ERROR(OracleMismatch);
WIELANDT_DEFINE_ERROR(EmptySet);
WIELANDT_DEFINE_ERROR(ParseError);

#undef WIELANDT_DEFINE_ERROR

}  // namespace wielandt
