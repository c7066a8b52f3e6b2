#include "k3lat/error.hpp"

namespace k3lat {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::NotASquare: return "NotASquare";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::InvalidPrime: return "InvalidPrime";
    case ErrorCode::UnsupportedModulus: return "UnsupportedModulus";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::LatticeMismatch: return "LatticeMismatch";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::DependentInput: return "DependentInput";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::DegenerateFirstVector: return "DegenerateFirstVector";
    case ErrorCode::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::NoRootVector: return "NoRootVector";
    case ErrorCode::NoDeltaFound: return "NoDeltaFound";
    case ErrorCode::EtaNotFound: return "EtaNotFound";
    case ErrorCode::InvalidLattice: return "InvalidLattice";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace k3lat
