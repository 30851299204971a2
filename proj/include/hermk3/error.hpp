#pragma once

#include <stdexcept>
#include <string>

namespace hermk3 {

enum class ErrorCode {
  invalid_argument = 1,
  inadmissible = 2,      // point outside the domain (Y not positive definite, singular CW+D, ...)
  convergence = 3,       // truncation could not reach the requested tail tolerance
  division_by_zero = 4,
  locus_mismatch = 5,
  bounds = 6,            // requested expansion order exceeds the supported range
  capacity = 7,          // group closure exceeded its safety cap
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

#define HERMK3_DEFINE_ERROR(Name, Code)                                              \
  class Name : public Error {                                                        \
  public:                                                                            \
    explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {}         \
  }

HERMK3_DEFINE_ERROR(InvalidArgument, invalid_argument);
HERMK3_DEFINE_ERROR(InadmissiblePoint, inadmissible);
HERMK3_DEFINE_ERROR(ConvergenceError, convergence);
HERMK3_DEFINE_ERROR(DivisionByZero, division_by_zero);
HERMK3_DEFINE_ERROR(LocusMismatch, locus_mismatch);
HERMK3_DEFINE_ERROR(BoundsError, bounds);
HERMK3_DEFINE_ERROR(CapacityError, capacity);

#undef HERMK3_DEFINE_ERROR

}  // namespace hermk3
