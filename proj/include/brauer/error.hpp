#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

enum class ErrorCode {
  InvalidInput,       // malformed tables, permutations, files, arguments
  NotAssociative,
  NoIdentity,
  NoInverse,
  InvalidPermutation,
  OrderCapExceeded,
  NotAHomomorphism,
  CoefficientMismatch,
  UnknownPreset,
  PNotOddPrime,
  CycFailed,
  NotPerfect,
  TheoremViolation,   // two routes that must agree did not; always a bug
  OracleMismatch,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

}  // namespace brauer
