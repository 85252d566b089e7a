#pragma once

#include <stdexcept>
#include <string>

namespace reflen {

enum class Errc {
  FieldMismatch,
  DimensionMismatch,
  DivisionByZero,
  NotPrime,
  ZeroVector,
  ZeroForm,
  NotInvertible,
  NotAReflection,
  Singular,
  NoReflections,
  PointOnHyperplane,
  NotAHyperplane,
  TooLarge,
  Parse,
};

const char* errc_name(Errc code) noexcept;

/// True for errors caused by malformed or mismatched input rather than by the
/// mathematics of a well-formed request.
bool is_input_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace reflen
