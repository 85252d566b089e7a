#include "reflen/subspace.hpp"

#include "reflen/error.hpp"

namespace reflen {

namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.field() != b.field()) throw Error(Errc::FieldMismatch, "subspaces over " + a.field().name() + " and " + b.field().name());
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(Errc::DimensionMismatch, "subspaces of F^" + std::to_string(a.ambient_dim()) + " and F^" +
                                             std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace Subspace::zero(Field field, std::size_t ambient_dim) { return Subspace(field, ambient_dim); }

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  Subspace s(field, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(Vector::unit(field, ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(Field field, std::size_t ambient_dim, std::span<const Vector> vectors) {
  Subspace s(field, ambient_dim);
  if (vectors.empty()) return s;
  const RowEchelon e = rref(Matrix::from_rows(field, ambient_dim, vectors));
  for (std::size_t i = 0; i < e.rank; ++i) {
    s.basis_.push_back(e.reduced.row(i));
    s.pivots_.push_back(e.pivots[i]);
  }
  return s;
}

bool Subspace::contains(const Vector& v) const { return reduce(v).is_zero(); }

Vector Subspace::reduce(const Vector& v) const {
  if (v.field() != field_) throw Error(Errc::FieldMismatch, "vector over " + v.field().name() + " tested against subspace over " + field_.name());
  if (v.size() != ambient_) throw Error(Errc::DimensionMismatch, "vector length does not match ambient dimension");
  Vector out = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar c = out[pivots_[i]];
    if (!c.is_zero()) out -= c * basis_[i];
  }
  return out;
}

std::vector<LinearForm> Subspace::annihilator() const {
  const Subspace k = kernel_basis(Matrix::from_rows(field_, ambient_, basis_));
  std::vector<LinearForm> forms;
  forms.reserve(k.dim());
  for (const auto& v : k.basis()) forms.emplace_back(v);
  return forms;
}

std::string Subspace::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) s += ',';
    s += basis_[i].to_string();
  }
  return s + "}";
}

Subspace kernel_basis(const Matrix& m) {
  const RowEchelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x = Vector::unit(m.field(), n, f);
    for (std::size_t i = 0; i < e.rank; ++i) x[e.pivots[i]] = -e.reduced(i, f);
    gens.push_back(std::move(x));
  }
  return Subspace::span(m.field(), n, gens);
}

Subspace image_basis(const Matrix& m) {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return Subspace::span(m.field(), m.rows(), cols);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  std::vector<Vector> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field(), a.ambient_dim(), gens);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  std::vector<LinearForm> constraints = a.annihilator();
  const std::vector<LinearForm> more = b.annihilator();
  constraints.insert(constraints.end(), more.begin(), more.end());
  return common_kernel(a.field(), a.ambient_dim(), constraints);
}

bool subspace_contains(const Subspace& a, const Vector& v) { return a.contains(v); }

bool is_subspace_of(const Subspace& inner, const Subspace& outer) {
  require_compatible(inner, outer);
  for (const auto& v : inner.basis()) {
    if (!outer.contains(v)) return false;
  }
  return true;
}

Subspace common_kernel(Field field, std::size_t n, std::span<const LinearForm> forms) {
  std::vector<Vector> rows;
  rows.reserve(forms.size());
  for (const auto& f : forms) rows.push_back(f.coefficients());
  return kernel_basis(Matrix::from_rows(field, n, rows));
}

AffineSolutionSet solve(const Matrix& a, const Vector& b) {
  if (a.field() != b.field()) throw Error(Errc::FieldMismatch, "solve: matrix over " + a.field().name() + ", rhs over " + b.field().name());
  if (a.rows() != b.size()) throw Error(Errc::DimensionMismatch, "solve: right-hand side length does not match row count");
  const std::size_t n = a.cols();
  Matrix aug(a.field(), a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const RowEchelon e = rref(aug);
  AffineSolutionSet out{std::nullopt, kernel_basis(a)};
  if (e.rank > 0 && e.pivots.back() == n) return out;
  Vector x = Vector::zero(a.field(), n);
  for (std::size_t i = 0; i < e.rank; ++i) x[e.pivots[i]] = e.reduced(i, n);
  out.particular = std::move(x);
  return out;
}

LinearForm form_with_values(const Subspace& w, std::span<const Vector> points, std::span<const Scalar> values) {
  const Field field = w.field();
  const std::size_t n = w.ambient_dim();
  if (points.size() != values.size()) throw Error(Errc::DimensionMismatch, "form_with_values: points/values length mismatch");

  std::vector<Vector> frame = w.basis();
  std::vector<Scalar> targets(frame.size(), Scalar::zero(field));
  for (std::size_t i = 0; i < points.size(); ++i) {
    frame.push_back(points[i]);
    targets.push_back(values[i]);
  }
  if (Subspace::span(field, n, frame).dim() != frame.size()) {
    throw Error(Errc::DimensionMismatch, "form_with_values: points are dependent modulo the subspace");
  }
  for (std::size_t j = 0; j < n && frame.size() < n; ++j) {
    frame.push_back(Vector::unit(field, n, j));
    if (Subspace::span(field, n, frame).dim() != frame.size()) {
      frame.pop_back();
    } else {
      targets.push_back(Scalar::zero(field));
    }
  }
  // alpha * P = targets, with P holding the frame as columns.
  const Matrix p_inv = inverse(Matrix::from_columns(field, n, frame));
  Vector alpha = Vector::zero(field, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) alpha[j] += targets[k] * p_inv(k, j);
  }
  return LinearForm(std::move(alpha));
}

LinearForm form_vanishing_on(const Subspace& w, const Vector& x) {
  const Scalar one = Scalar::one(w.field());
  return form_with_values(w, std::span<const Vector>(&x, 1), std::span<const Scalar>(&one, 1));
}

}  // namespace reflen
