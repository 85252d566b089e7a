#include "reflen/gl_factor.hpp"

#include "reflen/error.hpp"

namespace reflen {

OrderedFactorization::OrderedFactorization(Field field, std::size_t n, std::vector<Reflection> factors)
    : field_(field), n_(n), factors_(std::move(factors)) {
  for (const auto& r : factors_) {
    if (r.field() != field_) throw Error(Errc::FieldMismatch, "factor over " + r.field().name() + " in a tuple over " + field_.name());
    if (r.dim() != n_) throw Error(Errc::DimensionMismatch, "factor of dimension " + std::to_string(r.dim()) + " in a tuple of dimension " + std::to_string(n_));
  }
}

namespace {

OrderedFactorization from_nonempty(std::vector<Reflection> factors) {
  if (factors.empty()) throw Error(Errc::DimensionMismatch, "empty tuple needs an explicit field and dimension");
  const Field f = factors.front().field();
  const std::size_t n = factors.front().dim();
  return OrderedFactorization(f, n, std::move(factors));
}

}  // namespace

OrderedFactorization::OrderedFactorization(std::vector<Reflection> factors)
    : OrderedFactorization(from_nonempty(std::move(factors))) {}

Matrix OrderedFactorization::product() const {
  Matrix acc = Matrix::identity(field_, n_);
  for (const auto& r : factors_) acc = acc * r.matrix();
  return acc;
}

SSpaces s_spaces(const OrderedFactorization& s) {
  std::vector<Vector> vs;
  std::vector<LinearForm> forms;
  for (const auto& r : s.factors()) {
    vs.push_back(r.vector());
    forms.push_back(r.form());
  }
  return SSpaces{Subspace::span(s.field(), s.dim(), vs), common_kernel(s.field(), s.dim(), forms)};
}

std::size_t reflection_length_gl(const Matrix& g) {
  if (!g.is_square()) throw Error(Errc::DimensionMismatch, "reflection length needs a square matrix");
  if (!is_invertible(g)) throw Error(Errc::Singular, "matrix is singular");
  return rank(minus_identity(g));
}

bool is_reduced(const OrderedFactorization& s) {
  const SSpaces sp = s_spaces(s);
  return sp.fixed.codim() == s.size() && sp.moved.dim() == s.size();
}

CriterionLength length_from_factorization(const OrderedFactorization& s) {
  const SSpaces sp = s_spaces(s);
  if (sp.fixed.codim() == s.size()) return sp.moved.dim();
  if (sp.moved.dim() == s.size()) return sp.fixed.codim();
  return std::nullopt;
}

FactorizationReport report_factorization(const OrderedFactorization& s) {
  const SSpaces sp = s_spaces(s);
  const std::size_t k = s.size();
  CriterionLength len;
  if (sp.fixed.codim() == k) {
    len = sp.moved.dim();
  } else if (sp.moved.dim() == k) {
    len = sp.fixed.codim();
  }
  return FactorizationReport{k,          sp.moved.dim(), sp.fixed.codim(), s.product(),
                             sp.fixed.codim() == k && sp.moved.dim() == k, len};
}

OrderedFactorization factor_minimal_gl(const Matrix& g) {
  if (!g.is_square()) throw Error(Errc::DimensionMismatch, "factor_minimal_gl needs a square matrix");
  if (!is_invertible(g)) throw Error(Errc::Singular, "matrix is singular");
  const Field field = g.field();
  const std::size_t n = g.rows();

  // Each step finds a reflection r with r g fixing ker(g - I) plus one more
  // vector, then records r^{-1}: g = r^{-1} (r g).
  std::vector<Reflection> factors;
  Matrix cur = g;
  while (!cur.is_identity()) {
    const Subspace fixed = kernel_basis(minus_identity(cur));
    std::size_t i = 0;
    while (fixed.contains(Vector::unit(field, n, i))) ++i;
    const Vector x = Vector::unit(field, n, i);
    const Vector gx = cur * x;  // not in `fixed`, since cur preserves it

    const LinearForm coord = form_vanishing_on(fixed, x);
    const Scalar c = coord(gx);
    LinearForm alpha = coord;
    if (fixed.contains(gx - c * x)) {
      // gx = z + c x with z fixed; alpha(x) = -1/c gives alpha(gx) = -1.
      const Scalar ax = -(c.inverse());
      alpha = form_with_values(fixed, std::span<const Vector>(&x, 1), std::span<const Scalar>(&ax, 1));
    } else {
      const Vector pts[] = {x, gx};
      const Scalar vals[] = {Scalar::one(field), -Scalar::one(field)};
      alpha = form_with_values(fixed, pts, vals);
    }
    const Reflection r = Reflection::make(gx - x, std::move(alpha));
    cur = r.matrix() * cur;
    factors.push_back(r.inverse());
  }
  return OrderedFactorization(field, n, std::move(factors));
}

}  // namespace reflen
