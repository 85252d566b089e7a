#pragma once

// Ordered reflection factorizations in GL(V).
//
// For a tuple S = (s_1, ..., s_k) with s_i = (v_i, alpha_i):
//   V_S = span{v_1, ..., v_k}           (the S-moved space)
//   V^S = ker alpha_1 ∩ ... ∩ ker alpha_k (the S-fixed space)
// If codim V^S = k the product has length dim V_S; if dim V_S = k it has
// length codim V^S; S is a shortest factorization iff both equal k.

#include <cstddef>
#include <optional>
#include <vector>

#include "reflen/reflection.hpp"
#include "reflen/subspace.hpp"

namespace reflen {

class OrderedFactorization {
 public:
  /// All factors must live in GL_n over `field`.
  OrderedFactorization(Field field, std::size_t n, std::vector<Reflection> factors = {});
  /// Non-empty tuple; field and dimension are taken from the first factor.
  explicit OrderedFactorization(std::vector<Reflection> factors);

  Field field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool empty() const noexcept { return factors_.empty(); }
  const std::vector<Reflection>& factors() const noexcept { return factors_; }

  /// s_1 s_2 ... s_k (identity for the empty tuple).
  Matrix product() const;

 private:
  Field field_;
  std::size_t n_;
  std::vector<Reflection> factors_;
};

struct SSpaces {
  Subspace moved;  // V_S
  Subspace fixed;  // V^S
};

SSpaces s_spaces(const OrderedFactorization& s);

/// rank(g - I). Throws Errc::Singular for non-invertible g.
std::size_t reflection_length_gl(const Matrix& g);

bool is_reduced(const OrderedFactorization& s);

/// Length of the product as read off the tuple alone, or nullopt when neither
/// codim V^S = k nor dim V_S = k holds (the tuple carries no information).
using CriterionLength = std::optional<std::size_t>;
CriterionLength length_from_factorization(const OrderedFactorization& s);

struct FactorizationReport {
  std::size_t k;
  std::size_t vs_dim;
  std::size_t vs_codim;
  Matrix product;
  bool reduced;
  CriterionLength length_by_criterion;
};

FactorizationReport report_factorization(const OrderedFactorization& s);

/// A shortest factorization of g: exactly rank(g - I) reflections whose
/// product is g. Throws Errc::Singular for non-invertible g.
OrderedFactorization factor_minimal_gl(const Matrix& g);

}  // namespace reflen
