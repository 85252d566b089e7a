#pragma once

// Reflections of GL(V): invertible maps fixing a hyperplane pointwise.
//
// Every reflection has the form x -> x + alpha(x) v with v != 0, alpha != 0,
// and such a pair defines an invertible map exactly when alpha(v) != -1. The
// fixed hyperplane is ker(alpha) and the moved line is F v. The pair is only
// unique up to (c v, alpha / c); Reflection::from_matrix fixes that freedom
// by taking v to be the echelon generator of im(M - I).

#include <cstddef>

#include "reflen/linalg.hpp"
#include "reflen/subspace.hpp"

namespace reflen {

class Reflection {
 public:
  /// Throws ZeroVector, ZeroForm, NotInvertible (alpha(v) = -1),
  /// FieldMismatch or DimensionMismatch.
  static Reflection make(Vector v, LinearForm alpha);

  /// Throws DimensionMismatch for non-square input, Singular when M is not
  /// invertible and NotAReflection when rank(M - I) != 1.
  static Reflection from_matrix(const Matrix& m);

  Field field() const noexcept { return v_.field(); }
  std::size_t dim() const noexcept { return v_.size(); }

  const Vector& vector() const noexcept { return v_; }
  const LinearForm& form() const noexcept { return alpha_; }

  /// I + v alpha^T.
  Matrix matrix() const;
  Vector apply(const Vector& x) const;

  /// det = 1 + alpha(v).
  Scalar determinant() const;

  /// The inverse map x -> x - alpha(x) / (1 + alpha(v)) v.
  Reflection inverse() const;

  Subspace fixed_hyperplane() const;
  Subspace moved_line() const;

  /// Same linear map (the (v, alpha) pairs may differ by scaling).
  bool same_map(const Reflection& other) const { return matrix() == other.matrix(); }

 private:
  Reflection(Vector v, LinearForm alpha) : v_(std::move(v)), alpha_(std::move(alpha)) {}

  Vector v_;
  LinearForm alpha_;
};

Reflection make_reflection(Vector v, LinearForm alpha);
Matrix matrix_of(const Reflection& r);
Reflection reflection_from_matrix(const Matrix& m);

/// True when m is invertible and rank(m - I) = 1.
bool is_reflection(const Matrix& m);

struct ReflectionKind {
  enum class Type { Semisimple, Transvection };

  Type type;
  Scalar beta;  // det; 1 for transvections

  bool is_transvection() const noexcept { return type == Type::Transvection; }
};

ReflectionKind classify_reflection(const Reflection& r);

const char* to_string(ReflectionKind::Type type) noexcept;

}  // namespace reflen
