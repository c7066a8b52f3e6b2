#pragma once

#include <stdexcept>
#include <string>

namespace k3lat {

enum class ErrorCode {
  // modp
  ZeroInverse,
  NotASquare,
  NoSolution,
  ModulusMismatch,
  InvalidPrime,
  UnsupportedModulus,
  // lattice_core
  InvalidDegree,
  LatticeMismatch,
  DegenerateForm,
  DependentInput,
  ZeroVector,
  NotFound,
  // plane
  DegenerateFirstVector,
  NonInvertibleDenominator,
  Precondition,
  // perturb
  NoRootVector,
  NoDeltaFound,
  EtaNotFound,
  InvalidLattice,
  // io / cli
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace k3lat
