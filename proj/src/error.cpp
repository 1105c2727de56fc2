#include "growthlab/error.hpp"

#include "growthlab/numeric.hpp"

namespace growthlab {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::WrongDegree: return "WrongDegree";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::Singular: return "Singular";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::ZeroDimension: return "ZeroDimension";
    case Errc::NotGenerating: return "NotGenerating";
    case Errc::IdentityMissing: return "IdentityMissing";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::EmptyIntersection: return "EmptyIntersection";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::NotNormal: return "NotNormal";
    case Errc::PNotContained: return "PNotContained";
    case Errc::StructureViolated: return "StructureViolated";
    case Errc::MemoryCapExceeded: return "MemoryCapExceeded";
    case Errc::SubspaceTooLarge: return "SubspaceTooLarge";
    case Errc::UnsupportedSpec: return "UnsupportedSpec";
    case Errc::UnsupportedPreset: return "UnsupportedPreset";
    case Errc::GaveUp: return "GaveUp";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::MismatchFound: return "MismatchFound";
    case Errc::ConfigError: return "ConfigError";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& v) { return v.convert_to<double>(); }

}  // namespace growthlab
