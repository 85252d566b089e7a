#include "reflen/linalg.hpp"

#include <utility>

#include "reflen/error.hpp"

namespace reflen {

namespace {

void require_field(Field expected, Field actual) {
  if (expected != actual) {
    throw Error(Errc::FieldMismatch, "expected " + expected.name() + ", got " + actual.name());
  }
}

std::string dims(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

}  // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(Field field, std::vector<Scalar> entries) : field_(field), entries_(std::move(entries)) {
  for (const auto& e : entries_) require_field(field_, e.field());
}

Vector Vector::zero(Field field, std::size_t n) { return Vector(field, std::vector<Scalar>(n, Scalar::zero(field))); }

Vector Vector::unit(Field field, std::size_t n, std::size_t i) {
  Vector v = zero(field, n);
  v[i] = Scalar::one(field);
  return v;
}

Vector Vector::from_ints(Field field, std::initializer_list<long long> values) {
  std::vector<Scalar> entries;
  entries.reserve(values.size());
  for (long long x : values) entries.emplace_back(field, x);
  return Vector(field, std::move(entries));
}

bool Vector::is_zero() const noexcept { return leading_index() == size(); }

std::size_t Vector::leading_index() const noexcept {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].is_zero()) return i;
  }
  return entries_.size();
}

void Vector::require_compatible(const Vector& other) const {
  require_field(field_, other.field_);
  if (size() != other.size()) {
    throw Error(Errc::DimensionMismatch,
                "vectors of length " + std::to_string(size()) + " and " + std::to_string(other.size()));
  }
}

Vector& Vector::operator+=(const Vector& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& c) {
  require_field(field_, c.field());
  for (auto& e : entries_) e *= c;
  return *this;
}

Vector Vector::operator-() const {
  Vector out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

std::string Vector::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ',';
    s += entries_[i].to_string();
  }
  return s + "]";
}

Scalar LinearForm::operator()(const Vector& x) const {
  require_field(field(), x.field());
  if (x.size() != size()) {
    throw Error(Errc::DimensionMismatch,
                "form of length " + std::to_string(size()) + " applied to vector of length " + std::to_string(x.size()));
  }
  Scalar acc = Scalar::zero(field());
  for (std::size_t i = 0; i < size(); ++i) acc += coeffs_[i] * x[i];
  return acc;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(Errc::DimensionMismatch,
                dims(rows, cols) + " matrix given " + std::to_string(entries_.size()) + " entries");
  }
  for (const auto& e : entries_) require_field(field_, e.field());
}

Matrix Matrix::identity(Field field, std::size_t n) { return scalar(Scalar::one(field), n); }

Matrix Matrix::scalar(const Scalar& c, std::size_t n) {
  Matrix m(c.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::from_ints(Field field, std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Scalar> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
    for (long long x : row) entries.emplace_back(field, x);
  }
  return Matrix(field, r, c, std::move(entries));
}

Matrix Matrix::from_rows(Field field, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_field(field, rows[i].field());
    if (rows[i].size() != cols) throw Error(Errc::DimensionMismatch, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, std::span<const Vector> columns) {
  return from_rows(field, rows, columns).transpose();
}

Matrix Matrix::outer(const Vector& v, const LinearForm& alpha) {
  require_field(v.field(), alpha.field());
  Matrix m(v.field(), v.size(), alpha.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < alpha.size(); ++j) m(i, j) = v[i] * alpha.coefficients()[j];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(field_, std::vector<Scalar>(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

Vector Matrix::column(std::size_t j) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return Vector(field_, std::move(out));
}

bool Matrix::is_zero() const noexcept {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const noexcept {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_field(field_, rhs.field_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(Errc::DimensionMismatch, dims(rows_, cols_) + " + " + dims(rhs.rows_, rhs.cols_));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_field(field_, rhs.field_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(Errc::DimensionMismatch, dims(rows_, cols_) + " - " + dims(rhs.rows_, rhs.cols_));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require_field(lhs.field_, rhs.field_);
  if (lhs.cols_ != rhs.rows_) {
    throw Error(Errc::DimensionMismatch, dims(lhs.rows_, lhs.cols_) + " * " + dims(rhs.rows_, rhs.cols_));
  }
  Matrix out(lhs.field_, lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Scalar& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

Vector operator*(const Matrix& lhs, const Vector& rhs) {
  require_field(lhs.field_, rhs.field());
  if (lhs.cols_ != rhs.size()) {
    throw Error(Errc::DimensionMismatch,
                dims(lhs.rows_, lhs.cols_) + " matrix applied to vector of length " + std::to_string(rhs.size()));
  }
  Vector out = Vector::zero(lhs.field_, lhs.rows_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t j = 0; j < lhs.cols_; ++j) out[i] += lhs(i, j) * rhs[j];
  }
  return out;
}

Matrix operator*(const Scalar& c, Matrix m) {
  require_field(m.field_, c.field());
  for (auto& e : m.entries_) e *= c;
  return m;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += ',';
    s += row(i).to_string();
  }
  return s + "]";
}

Matrix minus_identity(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "M - I needs a square matrix");
  return m - Matrix::identity(m.field(), m.rows());
}

// ---------------------------------------------------------------- elimination

RowEchelon rref(const Matrix& m) {
  Matrix r = m;
  const std::size_t rows = r.rows();
  const std::size_t cols = r.cols();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows; ++col) {
    std::size_t piv = next;
    while (piv < rows && r(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != next) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(r(piv, j), r(next, j));
    }
    const Scalar inv = r(next, col).inverse();
    for (std::size_t j = col; j < cols; ++j) r(next, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == next || r(i, col).is_zero()) continue;
      const Scalar factor = r(i, col);
      for (std::size_t j = col; j < cols; ++j) r(i, j) -= factor * r(next, j);
    }
    pivots.push_back(col);
    ++next;
  }
  return RowEchelon{std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  const RowEchelon e = rref(aug);
  if (e.rank < n || e.pivots[n - 1] != n - 1) throw Error(Errc::Singular, "matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  }
  return inv;
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "determinant of a non-square matrix");
  Matrix r = m;
  const std::size_t n = r.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && r(piv, col).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(m.field());
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(r(piv, j), r(col, j));
      det = -det;
    }
    det *= r(col, col);
    const Scalar inv = r(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (r(i, col).is_zero()) continue;
      const Scalar factor = r(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) r(i, j) -= factor * r(col, j);
    }
  }
  return det;
}

Matrix product(Field field, std::size_t n, std::span<const Matrix> factors) {
  Matrix acc = Matrix::identity(field, n);
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

}  // namespace reflen
