#pragma once

#include <stdexcept>
#include <string>

namespace strata {

// Exit-code categories used by the CLI front end.
enum class ErrorKind {
  Io = 1,              // malformed input files / JSON
  Validation = 2,      // an input fails a structural invariant
  Inconsistency = 3,   // tolerance-level numerical contradiction
  Usage = 4,           // bad request parameters
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

struct NotAComplexStructure : Error {
  explicit NotAComplexStructure(const std::string& msg) : Error(ErrorKind::Validation, msg) {}
};
struct NotMetricCompatible : Error {
  explicit NotMetricCompatible(const std::string& msg) : Error(ErrorKind::Validation, msg) {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error(ErrorKind::Validation, msg) {}
};
struct OddKernelDimension : Error {
  explicit OddKernelDimension(const std::string& msg) : Error(ErrorKind::Inconsistency, msg) {}
};
struct NonUnitEigenvalue : Error {
  explicit NonUnitEigenvalue(const std::string& msg) : Error(ErrorKind::Inconsistency, msg) {}
};
struct NumericalInconsistency : Error {
  explicit NumericalInconsistency(const std::string& msg) : Error(ErrorKind::Inconsistency, msg) {}
};
struct InvalidRequest : Error {
  explicit InvalidRequest(const std::string& msg) : Error(ErrorKind::Usage, msg) {}
};
struct ParityViolation : Error {
  explicit ParityViolation(const std::string& msg) : Error(ErrorKind::Usage, msg) {}
};
struct InvalidBlockSpec : Error {
  explicit InvalidBlockSpec(const std::string& msg) : Error(ErrorKind::Usage, msg) {}
};
struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(ErrorKind::Io, msg) {}
};

}  // namespace strata
