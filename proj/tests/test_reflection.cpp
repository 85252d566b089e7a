#include <gtest/gtest.h>

#include "reflen/error.hpp"
#include "reflen/reflection.hpp"

using namespace reflen;

namespace {

const Field F5 = Field::prime(5);
const Field Q = Field::rationals();

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected reflen::Error";
  return Errc::Parse;
}

}  // namespace

TEST(Reflection, MatrixOfCoordinateReflection) {
  // v = (1,1,1), alpha = first coordinate: adds the first coordinate to every entry.
  const Reflection r = Reflection::make(Vector::from_ints(F5, {1, 1, 1}), LinearForm::from_ints(F5, {1, 0, 0}));
  EXPECT_EQ(r.matrix(), Matrix::from_ints(F5, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(r.determinant(), Scalar(F5, 2));
  EXPECT_EQ(classify_reflection(r).type, ReflectionKind::Type::Semisimple);
}

TEST(Reflection, ConstructionErrors) {
  const Vector v = Vector::from_ints(F5, {1, 0});
  EXPECT_EQ(code_of([&] { Reflection::make(Vector::zero(F5, 2), LinearForm::from_ints(F5, {1, 0})); }), Errc::ZeroVector);
  EXPECT_EQ(code_of([&] { Reflection::make(v, LinearForm::from_ints(F5, {0, 0})); }), Errc::ZeroForm);
  EXPECT_EQ(code_of([&] { Reflection::make(v, LinearForm::from_ints(F5, {4, 0})); }), Errc::NotInvertible);
  EXPECT_EQ(code_of([&] { Reflection::make(v, LinearForm::from_ints(F5, {1, 0, 0})); }), Errc::DimensionMismatch);
  EXPECT_EQ(code_of([&] { Reflection::make(v, LinearForm::from_ints(Q, {1, 0})); }), Errc::FieldMismatch);
}

TEST(Reflection, FromMatrixErrors) {
  EXPECT_EQ(code_of([] { Reflection::from_matrix(Matrix::identity(F5, 2)); }), Errc::NotAReflection);
  EXPECT_EQ(code_of([] { Reflection::from_matrix(Matrix::scalar(Scalar(F5, 2), 2)); }), Errc::NotAReflection);
  EXPECT_EQ(code_of([] { Reflection::from_matrix(Matrix::from_ints(F5, {{0, 0}, {0, 1}})); }), Errc::Singular);
  EXPECT_EQ(code_of([] { Reflection::from_matrix(Matrix::from_ints(F5, {{1, 0, 0}})); }), Errc::DimensionMismatch);
}

TEST(Reflection, FromMatrixRoundTrip) {
  const Matrix m = Matrix::from_ints(Q, {{1, 0, 2}, {0, 1, 3}, {0, 0, -1}});
  ASSERT_TRUE(is_reflection(m));
  const Reflection r = Reflection::from_matrix(m);
  EXPECT_EQ(r.matrix(), m);
  EXPECT_EQ(r.vector().leading_index(), 0u);
  EXPECT_TRUE(r.vector()[r.vector().leading_index()].is_one());
  EXPECT_EQ(r.moved_line().dim(), 1u);
  EXPECT_EQ(r.fixed_hyperplane().dim(), 2u);
  const Subspace fixed = r.fixed_hyperplane();
  for (const auto& v : fixed.basis()) EXPECT_EQ(r.apply(v), v);
}

TEST(Reflection, TransvectionSquaresToZero) {
  const Reflection t = Reflection::make(Vector::from_ints(Q, {1, 0, 0}), LinearForm::from_ints(Q, {0, 1, 7}));
  const auto kind = classify_reflection(t);
  EXPECT_TRUE(kind.is_transvection());
  EXPECT_TRUE(kind.beta.is_one());
  const Matrix d = minus_identity(t.matrix());
  EXPECT_TRUE((d * d).is_zero());
  EXPECT_STREQ(to_string(kind.type), "transvection");
}

TEST(Reflection, InverseIsAReflectionAndUndoes) {
  const Reflection r = Reflection::make(Vector::from_ints(Q, {1, 2}), LinearForm::from_ints(Q, {3, -1}));
  const Reflection inv = r.inverse();
  EXPECT_TRUE((r.matrix() * inv.matrix()).is_identity());
  EXPECT_EQ(inv.determinant(), r.determinant().inverse());
}

TEST(Reflection, SameMapIgnoresScaling) {
  const Reflection a = Reflection::make(Vector::from_ints(F5, {1, 2}), LinearForm::from_ints(F5, {1, 1}));
  const Reflection b = Reflection::make(Vector::from_ints(F5, {2, 4}), LinearForm::from_ints(F5, {3, 3}));
  EXPECT_TRUE(a.same_map(b));
  EXPECT_EQ(Reflection::from_matrix(a.matrix()).vector(), Reflection::from_matrix(b.matrix()).vector());
}
