#include <gtest/gtest.h>

#include "reflen/error.hpp"
#include "reflen/gl_factor.hpp"
#include "reflen/oracle.hpp"

using namespace reflen;

namespace {

const Field F5 = Field::prime(5);

Reflection coordinate_reflection(long long a, long long b, long long c, std::size_t coord) {
  return Reflection::make(Vector::from_ints(F5, {a, b, c}), LinearForm::coordinate(F5, 3, coord));
}

OrderedFactorization case_i() {
  return OrderedFactorization({coordinate_reflection(1, 1, 1, 0), coordinate_reflection(1, 1, 1, 1),
                               coordinate_reflection(1, 1, 1, 2)});
}
OrderedFactorization case_ii() {
  return OrderedFactorization({coordinate_reflection(1, 1, 1, 0), coordinate_reflection(1, 1, 1, 1),
                               coordinate_reflection(1, 0, 1, 2)});
}
OrderedFactorization case_iii() {
  return OrderedFactorization({coordinate_reflection(1, 0, 0, 0), coordinate_reflection(0, 1, 0, 1),
                               coordinate_reflection(0, 0, 1, 2)});
}

}  // namespace

TEST(WorkedExamples, FactorMatrices) {
  EXPECT_EQ(case_i().factors()[1].matrix(), Matrix::from_ints(F5, {{1, 1, 0}, {0, 2, 0}, {0, 1, 1}}));
  EXPECT_EQ(case_i().factors()[2].matrix(), Matrix::from_ints(F5, {{1, 0, 1}, {0, 1, 1}, {0, 0, 2}}));
  EXPECT_EQ(case_ii().factors()[2].matrix(), Matrix::from_ints(F5, {{1, 0, 1}, {0, 1, 0}, {0, 0, 2}}));
}

TEST(WorkedExamples, CaseOneCollapsesToAReflection) {
  const auto rep = report_factorization(case_i());
  EXPECT_EQ(rep.product, Matrix::from_ints(F5, {{2, 2, 4}, {1, 3, 4}, {1, 2, 0}}));
  EXPECT_EQ(rep.vs_dim, 1u);
  EXPECT_EQ(rep.vs_codim, 3u);
  EXPECT_FALSE(rep.reduced);
  EXPECT_EQ(rep.length_by_criterion, std::optional<std::size_t>(1));
  EXPECT_EQ(reflection_length_gl(rep.product), 1u);
  // The product fixes (1,0,1) and (1,2,0).
  EXPECT_EQ(rep.product * Vector::from_ints(F5, {1, 0, 1}), Vector::from_ints(F5, {1, 0, 1}));
  EXPECT_EQ(rep.product * Vector::from_ints(F5, {1, 2, 0}), Vector::from_ints(F5, {1, 2, 0}));
}

TEST(WorkedExamples, CaseTwoHasLengthTwo) {
  const auto rep = report_factorization(case_ii());
  EXPECT_EQ(rep.product, Matrix::from_ints(F5, {{2, 2, 2}, {1, 3, 1}, {1, 2, 3}}));
  EXPECT_EQ(rep.vs_dim, 2u);
  EXPECT_EQ(rep.vs_codim, 3u);
  EXPECT_FALSE(rep.reduced);
  EXPECT_EQ(rep.length_by_criterion, std::optional<std::size_t>(2));
  EXPECT_EQ(reflection_length_gl(rep.product), 2u);
  const OrderedFactorization tuple = case_ii();
  const auto& s = tuple.factors();
  EXPECT_TRUE(is_reflection(s[0].matrix() * s[1].matrix()));
  EXPECT_EQ(kernel_basis(minus_identity(rep.product)), Subspace::span(F5, 3, std::vector{Vector::from_ints(F5, {1, 2, 0})}));
}

TEST(WorkedExamples, CaseThreeIsReduced) {
  const auto rep = report_factorization(case_iii());
  EXPECT_EQ(rep.product, Matrix::scalar(Scalar(F5, 2), 3));
  EXPECT_EQ(rep.vs_dim, 3u);
  EXPECT_EQ(rep.vs_codim, 3u);
  EXPECT_TRUE(rep.reduced);
  EXPECT_TRUE(is_reduced(case_iii()));
  EXPECT_EQ(rep.length_by_criterion, std::optional<std::size_t>(3));
}

TEST(WorkedExamples, ScalarTwoLengthByBruteForce) {
  // Independent of the rank formula: exhaustive search over all reflections of GL_3(F_5).
  EXPECT_EQ(oracle::word_length_gl(Matrix::scalar(Scalar(F5, 2), 3), 3), std::optional<std::size_t>(3));
}

TEST(Criterion, IndeterminateWhenNeitherSideIsFull) {
  const Reflection s = coordinate_reflection(1, 0, 0, 0);
  const OrderedFactorization twice({s, s});
  EXPECT_FALSE(length_from_factorization(twice).has_value());
  EXPECT_FALSE(is_reduced(twice));
}

TEST(Criterion, EmptyTupleIsReduced) {
  const OrderedFactorization empty(F5, 3);
  EXPECT_TRUE(empty.product().is_identity());
  EXPECT_TRUE(is_reduced(empty));
  EXPECT_EQ(length_from_factorization(empty), std::optional<std::size_t>(0));
}

TEST(Criterion, MixedTuplesRejected) {
  const Reflection a = coordinate_reflection(1, 0, 0, 0);
  const Reflection b = Reflection::make(Vector::from_ints(F5, {1, 0}), LinearForm::from_ints(F5, {1, 0}));
  EXPECT_THROW(OrderedFactorization({a, b}), Error);
  EXPECT_THROW(OrderedFactorization(std::vector<Reflection>{}), Error);
}

TEST(FactorMinimal, ScalarTwo) {
  const Matrix g = Matrix::scalar(Scalar(F5, 2), 3);
  const auto s = factor_minimal_gl(g);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.product(), g);
  EXPECT_TRUE(is_reduced(s));
}

TEST(FactorMinimal, IdentityAndSingular) {
  EXPECT_TRUE(factor_minimal_gl(Matrix::identity(F5, 4)).empty());
  EXPECT_THROW(factor_minimal_gl(Matrix::from_ints(F5, {{1, 1}, {1, 1}})), Error);
  EXPECT_THROW(reflection_length_gl(Matrix::from_ints(F5, {{1, 1}, {1, 1}})), Error);
}

TEST(FactorMinimal, EveryElementOfSmallGroups) {
  for (auto [n, p] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 5}}) {
    const auto t = oracle::enumerate_group(oracle::GroupKind::GL, n, p);
    for (std::size_t id = 0; id < t.size(); ++id) {
      const Matrix g = t.to_matrix(id);
      const auto s = factor_minimal_gl(g);
      ASSERT_EQ(s.product(), g) << t.format(id);
      ASSERT_EQ(s.size(), reflection_length_gl(g)) << t.format(id);
      ASSERT_TRUE(is_reduced(s)) << t.format(id);
    }
  }
}
