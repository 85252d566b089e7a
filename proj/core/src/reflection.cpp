#include "reflen/reflection.hpp"

#include "reflen/error.hpp"

namespace reflen {

Reflection Reflection::make(Vector v, LinearForm alpha) {
  if (v.field() != alpha.field()) {
    throw Error(Errc::FieldMismatch, "vector over " + v.field().name() + ", form over " + alpha.field().name());
  }
  if (v.size() != alpha.size()) throw Error(Errc::DimensionMismatch, "vector and form lengths differ");
  if (v.is_zero()) throw Error(Errc::ZeroVector, "reflection vector is zero");
  if (alpha.is_zero()) throw Error(Errc::ZeroForm, "reflection form is zero");
  if ((alpha(v) + Scalar::one(v.field())).is_zero()) {
    throw Error(Errc::NotInvertible, "alpha(v) = -1, so x -> x + alpha(x) v is singular");
  }
  return Reflection(std::move(v), std::move(alpha));
}

Reflection Reflection::from_matrix(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "reflection matrix must be square");
  if (!is_invertible(m)) throw Error(Errc::Singular, "matrix is singular");
  const Matrix d = minus_identity(m);
  const Subspace moved = image_basis(d);
  if (moved.dim() != 1) {
    throw Error(Errc::NotAReflection, "rank(M - I) = " + std::to_string(moved.dim()) + ", expected 1");
  }
  // v has a 1 at its pivot, so (M - I)x = alpha(x) v reads alpha off that row.
  const Vector& v = moved.basis().front();
  LinearForm alpha(d.row(moved.pivots().front()));
  return Reflection(v, std::move(alpha));
}

Matrix Reflection::matrix() const { return Matrix::identity(field(), dim()) + Matrix::outer(v_, alpha_); }

Vector Reflection::apply(const Vector& x) const { return x + alpha_(x) * v_; }

Scalar Reflection::determinant() const { return Scalar::one(field()) + alpha_(v_); }

Reflection Reflection::inverse() const {
  const Scalar c = -(determinant().inverse());
  return Reflection(v_, alpha_ * c);
}

Subspace Reflection::fixed_hyperplane() const {
  return common_kernel(field(), dim(), std::span<const LinearForm>(&alpha_, 1));
}

Subspace Reflection::moved_line() const { return Subspace::span(field(), dim(), std::span<const Vector>(&v_, 1)); }

Reflection make_reflection(Vector v, LinearForm alpha) { return Reflection::make(std::move(v), std::move(alpha)); }

Matrix matrix_of(const Reflection& r) { return r.matrix(); }

Reflection reflection_from_matrix(const Matrix& m) { return Reflection::from_matrix(m); }

bool is_reflection(const Matrix& m) {
  return m.is_square() && is_invertible(m) && rank(minus_identity(m)) == 1;
}

ReflectionKind classify_reflection(const Reflection& r) {
  Scalar beta = r.determinant();
  if (beta.is_one()) return {ReflectionKind::Type::Transvection, std::move(beta)};
  return {ReflectionKind::Type::Semisimple, std::move(beta)};
}

const char* to_string(ReflectionKind::Type type) noexcept {
  return type == ReflectionKind::Type::Transvection ? "transvection" : "semisimple";
}

}  // namespace reflen
