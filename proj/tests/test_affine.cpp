#include <gtest/gtest.h>

#include "reflen/affine.hpp"
#include "reflen/error.hpp"
#include "reflen/oracle.hpp"

using namespace reflen;

namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);
const Field Q = Field::rationals();

AffineMap map_of(Field f, std::initializer_list<std::initializer_list<long long>> block) {
  return AffineMap::from_block(Matrix::from_ints(f, block));
}

Subspace line(Field f, std::initializer_list<long long> v) { return Subspace::span(f, 2, std::vector{Vector::from_ints(f, v)}); }

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

TEST(AffineMap, BlockRoundTripAndComposition) {
  const AffineMap a = map_of(F3, {{0, 1, 1}, {1, 0, 0}, {0, 0, 1}});
  EXPECT_EQ(AffineMap::from_block(a.block()), a);
  EXPECT_EQ(a.apply(Vector::from_ints(F3, {1, 2})), Vector::from_ints(F3, {0, 1}));
  EXPECT_TRUE((a * a.inverse()).is_identity());
  const AffineMap t = AffineMap::translation_by(Vector::from_ints(F3, {1, 0}));
  EXPECT_EQ((a * t).block(), a.block() * t.block());
  EXPECT_TRUE(t.is_translation());
}

TEST(AffineMap, FromBlockEnforcesLastRow) {
  EXPECT_EQ(code_of([] { map_of(F3, {{1, 0, 1}, {0, 1, 0}, {1, 0, 1}}); }), Errc::Parse);
  EXPECT_EQ(code_of([] { map_of(F3, {{1, 0, 1}, {0, 1, 0}, {0, 0, 2}}); }), Errc::Parse);
  EXPECT_EQ(code_of([] { map_of(F3, {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}); }), Errc::Singular);
}

TEST(AffineSubspace, CanonicalBase) {
  const Subspace dir = line(F3, {1, 2});
  EXPECT_EQ(AffineSubspace::through(Vector::from_ints(F3, {1, 0}), dir),
            AffineSubspace::through(Vector::from_ints(F3, {0, 1}), dir));
  EXPECT_TRUE(AffineSubspace::empty(F3, 2).is_empty());
  EXPECT_FALSE(AffineSubspace::empty(F3, 2).dim().has_value());
  EXPECT_EQ(AffineSubspace::empty(F3, 2).to_string(), "empty");
  EXPECT_THROW(AffineSubspace::empty(F3, 2).base(), Error);
}

TEST(WorkedAffineExample, ReflectionR) {
  const AffineMap r = map_of(F3, {{1, 0, 0}, {0, 2, 0}, {0, 0, 1}});
  EXPECT_EQ(classify(r), ClassKind::Elliptic);
  EXPECT_EQ(reflection_length_affine(r), 1u);
  EXPECT_EQ(mov(r), AffineSubspace::through(Vector::zero(F3, 2), line(F3, {0, 1})));
  EXPECT_EQ(fix_aff(r), AffineSubspace::through(Vector::zero(F3, 2), line(F3, {1, 0})));
  EXPECT_EQ(fix_lin(r), line(F3, {1, 0}));
  EXPECT_TRUE(is_affine_reflection(r));
}

TEST(WorkedAffineExample, ParabolicS) {
  const AffineMap s = map_of(F3, {{0, 1, 1}, {1, 0, 0}, {0, 0, 1}});
  EXPECT_EQ(classify(s), ClassKind::Parabolic);
  EXPECT_EQ(reflection_length_affine(s), 2u);
  EXPECT_EQ(mov(s), AffineSubspace::through(Vector::from_ints(F3, {1, 0}), line(F3, {1, -1})));
  EXPECT_TRUE(fix_aff(s).is_empty());
  EXPECT_EQ(fix_lin(s), line(F3, {1, 1}));
}

TEST(WorkedAffineExample, TranslationT) {
  const AffineMap t = map_of(F3, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(classify(t), ClassKind::Hyperbolic);
  EXPECT_EQ(reflection_length_affine(t), 2u);
  EXPECT_EQ(mov(t), AffineSubspace::through(Vector::from_ints(F3, {1, 0}), Subspace::zero(F3, 2)));
  EXPECT_EQ(*mov(t).dim(), 0u);
  EXPECT_TRUE(fix_aff(t).is_empty());
  EXPECT_EQ(fix_lin(t), Subspace::full(F3, 2));
  const auto f = factor_minimal_affine(t);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(compose(F3, 2, f), t);
}

TEST(Glide, OverRationals) {
  const AffineMap gg = map_of(Q, {{1, 0, 1}, {0, -1, 0}, {0, 0, 1}});
  EXPECT_EQ(classify(gg), ClassKind::Parabolic);
  EXPECT_EQ(reflection_length_affine(gg), 2u);

  // (x, y) -> (x + y, -y) fixes y = 0; (x, y) -> (x - y + 1, y) fixes y = 1.
  const AffineMap r1 = map_of(Q, {{1, 1, 0}, {0, -1, 0}, {0, 0, 1}});
  const AffineMap r2 = map_of(Q, {{1, -1, 1}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_TRUE(is_affine_reflection(r1));
  EXPECT_TRUE(is_affine_reflection(r2));
  EXPECT_EQ(r1 * r2, gg);
  EXPECT_EQ(fix_aff(r2), AffineSubspace::through(Vector::from_ints(Q, {0, 1}), line(Q, {1, 0})));

  const auto f = factor_minimal_affine(gg);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(compose(Q, 2, f), gg);
}

TEST(OverF2, HyperbolicNonTranslation) {
  const AffineMap gg = map_of(F2, {{1, 0, 1}, {1, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(classify(gg), ClassKind::Hyperbolic);
  EXPECT_FALSE(gg.is_translation());
  EXPECT_EQ(fix_lin(gg), line(F2, {0, 1}));
  EXPECT_EQ(reflection_length_affine(gg), 3u);
  const auto f = factor_minimal_affine(gg);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(compose(F2, 2, f), gg);
}

TEST(OverF2, OneDimensionalGroupHasNoReflections) {
  const AffineMap t = map_of(F2, {{1, 1}, {0, 1}});
  EXPECT_EQ(code_of([&] { reflection_length_affine(t); }), Errc::NoReflections);
  EXPECT_EQ(code_of([&] { factor_minimal_affine(t); }), Errc::NoReflections);
  EXPECT_EQ(reflection_length_affine(AffineMap::identity(F2, 1)), 0u);
  EXPECT_TRUE(factor_minimal_affine(AffineMap::identity(F2, 1)).empty());
}

TEST(MakeAffineReflection, SendsAToB) {
  const AffineSubspace h = AffineSubspace::through(Vector::from_ints(Q, {0, 1}), line(Q, {1, 0}));
  const Vector a = Vector::from_ints(Q, {3, 2});
  const Vector b = Vector::from_ints(Q, {5, -1});
  const AffineReflection r = make_affine_reflection(h, a, b);
  EXPECT_EQ(r.map().apply(a), b);
  EXPECT_EQ(r.fixed_hyperplane(), h);
}

TEST(MakeAffineReflection, Errors) {
  const AffineSubspace h = AffineSubspace::through(Vector::from_ints(Q, {0, 1}), line(Q, {1, 0}));
  const Vector a = Vector::from_ints(Q, {0, 2});
  EXPECT_EQ(code_of([&] { make_affine_reflection(h, a, a); }), Errc::NotAReflection);
  EXPECT_EQ(code_of([&] { make_affine_reflection(h, Vector::from_ints(Q, {4, 1}), a); }), Errc::PointOnHyperplane);
  const AffineSubspace point = AffineSubspace::through(a, Subspace::zero(Q, 2));
  EXPECT_EQ(code_of([&] { make_affine_reflection(point, Vector::zero(Q, 2), a); }), Errc::NotAHyperplane);
  EXPECT_EQ(code_of([&] { make_affine_reflection(h, Vector::zero(F3, 2), a); }), Errc::FieldMismatch);
}

TEST(AffineReflection, RejectsNonReflections) {
  EXPECT_EQ(code_of([] { AffineReflection(AffineMap::translation_by(Vector::from_ints(Q, {1, 0}))); }),
            Errc::NotAReflection);
}

TEST(IncludeAndProject, FixesChosenPoint) {
  const Matrix g = Matrix::from_ints(Q, {{0, -1}, {1, 0}});
  const Vector a = Vector::from_ints(Q, {2, 3});
  const AffineMap gg = include_at(g, a);
  EXPECT_EQ(gg.apply(a), a);
  EXPECT_EQ(project(gg), g);
}

TEST(FactorMinimalAffine, EveryElementOfSmallGroups) {
  for (auto [n, p] : {std::pair{1, 3}, {1, 5}, {2, 2}, {2, 3}, {3, 2}}) {
    const auto t = oracle::enumerate_group(oracle::GroupKind::GA, n, p);
    for (std::size_t id = 0; id < t.size(); ++id) {
      const AffineMap gg = t.to_affine(id);
      const auto f = factor_minimal_affine(gg);
      ASSERT_EQ(compose(gg.field(), gg.dim(), f), gg) << t.format(id);
      ASSERT_EQ(f.size(), reflection_length_affine(gg)) << t.format(id);
    }
  }
}
