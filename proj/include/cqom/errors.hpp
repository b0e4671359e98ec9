#pragma once

#include <stdexcept>
#include <string>

namespace cqom {

// Physics-domain failure; CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "Error"; }
};

#define CQOM_ERROR(Name)                                              \
  class Name : public Error {                                         \
  public:                                                             \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    const char* kind() const noexcept override { return #Name; }      \
  };

CQOM_ERROR(InvalidSpec)
CQOM_ERROR(HalfQuantumFlux)
CQOM_ERROR(NonPositiveFrequency)
CQOM_ERROR(RootNotBracketed)
CQOM_ERROR(DegenerateSpec)
CQOM_ERROR(FixedPointNotConverged)
CQOM_ERROR(OutOfDomain)
CQOM_ERROR(NearPole)
CQOM_ERROR(GeometryOutOfRegime)
CQOM_ERROR(QuadratureFailure)
CQOM_ERROR(ParityRejected)
CQOM_ERROR(NonPositiveTemperature)
CQOM_ERROR(SubVacuumBound)
CQOM_ERROR(InfeasibleConstraints)

#undef CQOM_ERROR

// Usage-level failures (bad schema, bad plan); CLI maps these to exit code 2.
class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

class SchemaError : public UsageError {
public:
  explicit SchemaError(const std::string& what) : UsageError("SchemaError: " + what) {}
};

class PlanInvalid : public UsageError {
public:
  explicit PlanInvalid(const std::string& what) : UsageError("PlanInvalid: " + what) {}
};

}  // namespace cqom
