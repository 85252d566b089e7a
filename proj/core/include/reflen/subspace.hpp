#pragma once

// Linear subspaces of F^n stored canonically, plus the affine solution sets
// of linear systems.
//
// A Subspace keeps its basis in reduced row echelon form, so two equal
// subspaces always have identical stored bases and operator== is plain
// structural equality.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reflen/linalg.hpp"

namespace reflen {

class Subspace {
 public:
  static Subspace zero(Field field, std::size_t ambient_dim);
  static Subspace full(Field field, std::size_t ambient_dim);
  /// Span of arbitrary (possibly dependent, possibly zero) vectors.
  static Subspace span(Field field, std::size_t ambient_dim, std::span<const Vector> vectors);

  Field field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t codim() const noexcept { return ambient_ - basis_.size(); }

  /// Echelon basis with strictly increasing pivots.
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const;

  /// Canonical representative of the coset v + *this: the unique element of
  /// that coset whose coordinates at this subspace's pivot columns vanish.
  Vector reduce(const Vector& v) const;

  /// Echelon basis of the linear forms vanishing on this subspace.
  std::vector<LinearForm> annihilator() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

  /// "{[1,0,1],[0,1,2]}"
  std::string to_string() const;

 private:
  Subspace(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}

  Field field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : Mx = 0}; dimension cols(M) - rank(M).
Subspace kernel_basis(const Matrix& m);
/// Column space of M; dimension rank(M).
Subspace image_basis(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const Vector& v);
bool is_subspace_of(const Subspace& inner, const Subspace& outer);

/// Common zero set of a family of forms on F^n.
Subspace common_kernel(Field field, std::size_t n, std::span<const LinearForm> forms);

/// Solution set of Ax = b: empty, or particular + kernel(A).
struct AffineSolutionSet {
  std::optional<Vector> particular;  // free variables set to 0
  Subspace kernel;

  bool empty() const noexcept { return !particular.has_value(); }
};

AffineSolutionSet solve(const Matrix& a, const Vector& b);

/// A linear form f with f|_w = 0 and f(x) = 1, for x not in w. The form is
/// built on the echelon complement so the choice is deterministic.
LinearForm form_vanishing_on(const Subspace& w, const Vector& x);

/// A linear form with prescribed values on a set of vectors that is linearly
/// independent modulo `w`, vanishing on `w`. The remaining freedom is fixed
/// by sending standard-basis extension vectors to 0.
LinearForm form_with_values(const Subspace& w, std::span<const Vector> points, std::span<const Scalar> values);

}  // namespace reflen
