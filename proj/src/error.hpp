#pragma once

#include <stdexcept>
#include <string>

namespace qadc {

enum class ErrorCode {
    InvalidArgument,
    ZeroPolynomial,
    InfeasibleSpec,
    LengthMismatch,
    OddTransitionCount,
    UnsortedInput,
    TooLarge,
    NoFeasibleInput,
    NonStochasticMatrix,
    EmptySearchSpace,
    ParseError,
    Internal,
};

/// Library-wide exception; carries a machine-readable code for the C API.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace qadc
