#pragma once

// Dense exact vectors, linear forms and matrices over a single Field.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "reflen/field.hpp"

namespace reflen {

class Vector {
 public:
  /// Every entry must belong to `field` (Errc::FieldMismatch otherwise).
  Vector(Field field, std::vector<Scalar> entries);

  static Vector zero(Field field, std::size_t n);
  /// The i-th standard basis vector e_i.
  static Vector unit(Field field, std::size_t n, std::size_t i);
  static Vector from_ints(Field field, std::initializer_list<long long> values);

  Field field() const noexcept { return field_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }

  bool is_zero() const noexcept;
  /// Index of the first nonzero entry, or size() for the zero vector.
  std::size_t leading_index() const noexcept;

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  Vector& operator*=(const Scalar& c);
  friend Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
  friend Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
  friend Vector operator*(const Scalar& c, Vector v) { return v *= c; }
  Vector operator-() const;

  friend bool operator==(const Vector&, const Vector&) = default;

  /// "[1,0,2]"
  std::string to_string() const;

 private:
  void require_compatible(const Vector& other) const;

  Field field_;
  std::vector<Scalar> entries_;
};

/// A covector; applying it to a Vector of equal length is the dot product.
class LinearForm {
 public:
  explicit LinearForm(Vector coefficients) : coeffs_(std::move(coefficients)) {}

  static LinearForm from_ints(Field field, std::initializer_list<long long> values) {
    return LinearForm(Vector::from_ints(field, values));
  }
  /// The i-th coordinate form.
  static LinearForm coordinate(Field field, std::size_t n, std::size_t i) {
    return LinearForm(Vector::unit(field, n, i));
  }

  Field field() const noexcept { return coeffs_.field(); }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const Vector& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.is_zero(); }

  Scalar operator()(const Vector& x) const;

  LinearForm operator*(const Scalar& c) const { return LinearForm(c * coeffs_); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

  std::string to_string() const { return coeffs_.to_string(); }

 private:
  Vector coeffs_;
};

class Matrix {
 public:
  /// Zero matrix.
  Matrix(Field field, std::size_t rows, std::size_t cols);
  /// Row-major entries; entries.size() must equal rows * cols.
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(Field field, std::size_t n);
  static Matrix scalar(const Scalar& c, std::size_t n);
  static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<long long>> rows);
  /// Stacks vectors as rows; all must have length `cols`.
  static Matrix from_rows(Field field, std::size_t cols, std::span<const Vector> rows);
  static Matrix from_columns(Field field, std::size_t rows, std::span<const Vector> columns);
  /// v * alpha^T, the rank-one map x -> alpha(x) v.
  static Matrix outer(const Vector& v, const LinearForm& alpha);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;

  Matrix transpose() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Vector operator*(const Matrix& lhs, const Vector& rhs);
  friend Matrix operator*(const Scalar& c, Matrix m);

  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// "[[1,0],[0,1]]"
  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Returns M - I for square M.
Matrix minus_identity(const Matrix& m);

struct RowEchelon {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

bool is_invertible(const Matrix& m);
/// Throws Errc::Singular (or DimensionMismatch for non-square input).
Matrix inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

/// Product of matrices in order; `n` gives the identity size for an empty list.
Matrix product(Field field, std::size_t n, std::span<const Matrix> factors);

}  // namespace reflen
