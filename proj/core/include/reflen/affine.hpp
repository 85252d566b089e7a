#pragma once

// The general affine group GA(V~) of a coordinatized affine space.
//
// An AffineMap x -> g x + lambda is stored as its linear part g and its
// translation lambda; block() gives the (n+1)x(n+1) matrix [[g, lambda], [0, 1]].
// Points and vectors share the Vector type; the origin is a point.
//
// Reflection length in GA is dim mov + d, where d is 0, 1 or 2 for elliptic,
// parabolic and hyperbolic elements respectively.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reflen/linalg.hpp"
#include "reflen/subspace.hpp"

namespace reflen {

class AffineMap {
 public:
  /// Throws Errc::Singular when `linear` is not invertible.
  AffineMap(Matrix linear, Vector translation);

  static AffineMap identity(Field field, std::size_t n);
  static AffineMap translation_by(const Vector& lambda);
  /// Reads [[g, lambda], [0, 1]]; the last row is enforced (Errc::Parse).
  static AffineMap from_block(const Matrix& block);

  Field field() const noexcept { return linear_.field(); }
  std::size_t dim() const noexcept { return linear_.rows(); }
  const Matrix& linear() const noexcept { return linear_; }
  const Vector& translation() const noexcept { return translation_; }

  Vector apply(const Vector& point) const { return linear_ * point + translation_; }
  Matrix block() const;

  bool is_identity() const { return linear_.is_identity() && translation_.is_zero(); }
  bool is_translation() const { return linear_.is_identity(); }

  AffineMap inverse() const;

  /// Composition: (a * b)(x) = a(b(x)).
  friend AffineMap operator*(const AffineMap& a, const AffineMap& b);
  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  Matrix linear_;
  Vector translation_;
};

/// A possibly-empty affine subspace base + directions, stored canonically:
/// the base point is reduced against the echelon direction basis, so equal
/// sets compare equal.
class AffineSubspace {
 public:
  static AffineSubspace empty(Field field, std::size_t n);
  static AffineSubspace through(const Vector& point, const Subspace& directions);

  Field field() const noexcept { return directions_.field(); }
  std::size_t ambient_dim() const noexcept { return directions_.ambient_dim(); }
  bool is_empty() const noexcept { return !base_.has_value(); }
  /// Throws Errc::DimensionMismatch when empty.
  const Vector& base() const;
  const Subspace& directions() const noexcept { return directions_; }
  /// nullopt for the empty set.
  std::optional<std::size_t> dim() const;

  bool contains(const Vector& point) const;

  friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;

  /// "empty" or "[1,0] + {[1,2]}"
  std::string to_string() const;

 private:
  AffineSubspace(std::optional<Vector> base, Subspace directions)
      : base_(std::move(base)), directions_(std::move(directions)) {}

  std::optional<Vector> base_;
  Subspace directions_;
};

enum class ClassKind { Elliptic, Parabolic, Hyperbolic };

/// 0, 1, 2 for elliptic, parabolic, hyperbolic.
std::size_t offset(ClassKind kind) noexcept;
const char* to_string(ClassKind kind) noexcept;

/// The linear part g of gg.
Matrix project(const AffineMap& gg);
/// x -> a + g(x - a), the copy of g fixing the point a.
AffineMap include_at(const Matrix& g, const Vector& a);

/// {gg(x) - x}: im(g - I) shifted by gg(0). Never empty.
AffineSubspace mov(const AffineMap& gg);
/// {x : gg(x) = x}; possibly empty.
AffineSubspace fix_aff(const AffineMap& gg);
/// ker(g - I).
Subspace fix_lin(const AffineMap& gg);

/// Elliptic iff gg fixes a point. Hyperbolic iff gg fixes no point and the two
/// cosets a + fix_lin, gg(a) + fix_lin cover the space for every point a.
/// Parabolic otherwise.
ClassKind classify(const AffineMap& gg);

/// dim mov(gg) + offset(classify(gg)). Throws Errc::NoReflections for a
/// non-identity element of the 1-dimensional group over F_2.
std::size_t reflection_length_affine(const AffineMap& gg);

bool is_affine_reflection(const AffineMap& gg);

/// An affine map known to fix an affine hyperplane pointwise.
class AffineReflection {
 public:
  /// Throws Errc::NotAReflection unless is_affine_reflection(gg).
  explicit AffineReflection(AffineMap gg);

  const AffineMap& map() const noexcept { return map_; }
  AffineSubspace fixed_hyperplane() const { return fix_aff(map_); }
  AffineReflection inverse() const { return AffineReflection(map_.inverse()); }

 private:
  AffineMap map_;
};

/// The unique affine reflection fixing the hyperplane H pointwise and sending
/// a to b. Throws NotAHyperplane, PointOnHyperplane (a or b in H),
/// NotAReflection (a == b), FieldMismatch or DimensionMismatch.
AffineReflection make_affine_reflection(const AffineSubspace& hyperplane, const Vector& a, const Vector& b);

/// A shortest reflection factorization gg = r_1 r_2 ... r_k with
/// k = reflection_length_affine(gg).
std::vector<AffineReflection> factor_minimal_affine(const AffineMap& gg);

/// r_1 r_2 ... r_k, the identity when empty.
AffineMap compose(Field field, std::size_t n, const std::vector<AffineReflection>& factors);

}  // namespace reflen
