#ifndef BIRATIO_ERRORS_HPP
#define BIRATIO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace biratio {

enum class ErrorKind {
  ZeroDenominator,
  BothZero,
  MixedField,
  DegenerateComposition,
  PositiveDimensionalLocus,
  SimplicityViolation,
  RealRootDetected,
  SingularityApproach,
  ResourceCap,
  MissingInverse,
  Parse,
  Usage,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::MixedField: return "MixedField";
    case ErrorKind::DegenerateComposition: return "DegenerateComposition";
    case ErrorKind::PositiveDimensionalLocus: return "PositiveDimensionalLocus";
    case ErrorKind::SimplicityViolation: return "SimplicityViolation";
    case ErrorKind::RealRootDetected: return "RealRootDetected";
    case ErrorKind::SingularityApproach: return "SingularityApproach";
    case ErrorKind::ResourceCap: return "ResourceCap";
    case ErrorKind::MissingInverse: return "MissingInverse";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Usage: return "UsageError";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

}  // namespace biratio

#endif  // BIRATIO_ERRORS_HPP
