#include "brauer/error.hpp"

namespace brauer {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::CoefficientMismatch: return "CoefficientMismatch";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
    case ErrorCode::PNotOddPrime: return "PNotOddPrime";
    case ErrorCode::CycFailed: return "CycFailed";
    case ErrorCode::NotPerfect: return "NotPerfect";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

}  // namespace brauer
