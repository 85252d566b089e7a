#include "reflen/error.hpp"

namespace reflen {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotPrime: return "NotPrime";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::ZeroForm: return "ZeroForm";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotAReflection: return "NotAReflection";
    case Errc::Singular: return "Singular";
    case Errc::NoReflections: return "NoReflections";
    case Errc::PointOnHyperplane: return "PointOnHyperplane";
    case Errc::NotAHyperplane: return "NotAHyperplane";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

bool is_input_error(Errc code) noexcept {
  switch (code) {
    case Errc::FieldMismatch:
    case Errc::DimensionMismatch:
    case Errc::NotPrime:
    case Errc::Parse:
      return true;
    default:
      return false;
  }
}

}  // namespace reflen
