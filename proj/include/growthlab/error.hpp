#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace growthlab {

/// Failure categories raised across the library. Every thrown growthlab::Error
/// carries exactly one of these so callers (and tests) can dispatch on kind.
enum class Errc {
  NotPrime,
  ReducibleModulus,
  WrongDegree,
  DivisionByZero,
  FieldMismatch,
  Singular,
  SpecMismatch,
  SizeLimitExceeded,
  ZeroDimension,
  NotGenerating,
  IdentityMissing,
  NotSymmetric,
  UnsupportedFamily,
  EmptyIntersection,
  NotSubgroup,
  NotNormal,
  PNotContained,
  StructureViolated,
  MemoryCapExceeded,
  SubspaceTooLarge,
  UnsupportedSpec,
  UnsupportedPreset,
  GaveUp,
  DegreeCapExceeded,
  MismatchFound,
  ConfigError,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace growthlab
