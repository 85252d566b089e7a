#include "reflen/affine.hpp"

#include "reflen/error.hpp"
#include "reflen/gl_factor.hpp"
#include "reflen/reflection.hpp"

namespace reflen {

// ---------------------------------------------------------------- AffineMap

AffineMap::AffineMap(Matrix linear, Vector translation) : linear_(std::move(linear)), translation_(std::move(translation)) {
  if (linear_.field() != translation_.field()) {
    throw Error(Errc::FieldMismatch, "linear part over " + linear_.field().name() + ", translation over " + translation_.field().name());
  }
  if (!linear_.is_square() || linear_.rows() != translation_.size()) {
    throw Error(Errc::DimensionMismatch, "affine map needs an n x n linear part and a length-n translation");
  }
  if (!is_invertible(linear_)) throw Error(Errc::Singular, "linear part is singular");
}

AffineMap AffineMap::identity(Field field, std::size_t n) { return AffineMap(Matrix::identity(field, n), Vector::zero(field, n)); }

AffineMap AffineMap::translation_by(const Vector& lambda) {
  return AffineMap(Matrix::identity(lambda.field(), lambda.size()), lambda);
}

AffineMap AffineMap::from_block(const Matrix& block) {
  if (!block.is_square() || block.rows() < 2) {
    throw Error(Errc::Parse, "affine block matrix must be square of size n+1 >= 2");
  }
  const std::size_t n = block.rows() - 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (!block(n, j).is_zero()) throw Error(Errc::Parse, "last row of an affine block matrix must be (0,...,0,1)");
  }
  if (!block(n, n).is_one()) throw Error(Errc::Parse, "last row of an affine block matrix must be (0,...,0,1)");
  Matrix g(block.field(), n, n);
  Vector lambda = Vector::zero(block.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = block(i, j);
    lambda[i] = block(i, n);
  }
  return AffineMap(std::move(g), std::move(lambda));
}

Matrix AffineMap::block() const {
  const std::size_t n = dim();
  Matrix m(field(), n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = linear_(i, j);
    m(i, n) = translation_[i];
  }
  m(n, n) = Scalar::one(field());
  return m;
}

AffineMap AffineMap::inverse() const {
  Matrix inv = reflen::inverse(linear_);
  Vector t = -(inv * translation_);
  return AffineMap(std::move(inv), std::move(t));
}

AffineMap operator*(const AffineMap& a, const AffineMap& b) {
  return AffineMap(a.linear_ * b.linear_, a.linear_ * b.translation_ + a.translation_);
}

// ---------------------------------------------------------------- AffineSubspace

AffineSubspace AffineSubspace::empty(Field field, std::size_t n) { return AffineSubspace(std::nullopt, Subspace::zero(field, n)); }

AffineSubspace AffineSubspace::through(const Vector& point, const Subspace& directions) {
  return AffineSubspace(directions.reduce(point), directions);
}

const Vector& AffineSubspace::base() const {
  if (!base_) throw Error(Errc::DimensionMismatch, "empty affine subspace has no base point");
  return *base_;
}

std::optional<std::size_t> AffineSubspace::dim() const {
  if (!base_) return std::nullopt;
  return directions_.dim();
}

bool AffineSubspace::contains(const Vector& point) const { return base_ && directions_.contains(point - *base_); }

std::string AffineSubspace::to_string() const {
  if (!base_) return "empty";
  return base_->to_string() + " + " + directions_.to_string();
}

// ---------------------------------------------------------------- classification

std::size_t offset(ClassKind kind) noexcept {
  switch (kind) {
    case ClassKind::Elliptic: return 0;
    case ClassKind::Parabolic: return 1;
    case ClassKind::Hyperbolic: return 2;
  }
  return 0;
}

const char* to_string(ClassKind kind) noexcept {
  switch (kind) {
    case ClassKind::Elliptic: return "elliptic";
    case ClassKind::Parabolic: return "parabolic";
    case ClassKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

Matrix project(const AffineMap& gg) { return gg.linear(); }

AffineMap include_at(const Matrix& g, const Vector& a) {
  if (g.field() != a.field()) throw Error(Errc::FieldMismatch, "include_at: matrix and point over different fields");
  if (!g.is_square() || g.rows() != a.size()) throw Error(Errc::DimensionMismatch, "include_at: point dimension mismatch");
  if (!is_invertible(g)) throw Error(Errc::Singular, "include_at: matrix is singular");
  return AffineMap(g, a - g * a);
}

AffineSubspace mov(const AffineMap& gg) {
  return AffineSubspace::through(gg.translation(), image_basis(minus_identity(gg.linear())));
}

AffineSubspace fix_aff(const AffineMap& gg) {
  const AffineSolutionSet sol = solve(minus_identity(gg.linear()), -gg.translation());
  if (sol.empty()) return AffineSubspace::empty(gg.field(), gg.dim());
  return AffineSubspace::through(*sol.particular, sol.kernel);
}

Subspace fix_lin(const AffineMap& gg) { return kernel_basis(minus_identity(gg.linear())); }

ClassKind classify(const AffineMap& gg) {
  if (!fix_aff(gg).is_empty()) return ClassKind::Elliptic;
  const Subspace fixed = fix_lin(gg);
  if (fixed.codim() == 0) return ClassKind::Hyperbolic;
  // Two cosets of a hyperplane cover the space only over F_2, and then for
  // every point exactly when every motion gg(a) - a lies off the hyperplane.
  // Motions sweep gg(0) + im(g - I), so that is a test at the origin once
  // im(g - I) sits inside the hyperplane.
  const bool over_f2 = gg.field().is_prime_field() && gg.field().characteristic() == 2;
  if (over_f2 && fixed.codim() == 1 && is_subspace_of(image_basis(minus_identity(gg.linear())), fixed) &&
      !fixed.contains(gg.translation())) {
    return ClassKind::Hyperbolic;
  }
  return ClassKind::Parabolic;
}

namespace {

bool is_f2(Field f) { return f.is_prime_field() && f.characteristic() == 2; }

void require_has_reflections(const AffineMap& gg) {
  if (gg.dim() == 1 && is_f2(gg.field()) && !gg.is_identity()) {
    throw Error(Errc::NoReflections, "GA_1(F2) contains no reflections; only the identity has a factorization");
  }
}

}  // namespace

std::size_t reflection_length_affine(const AffineMap& gg) {
  if (gg.is_identity()) return 0;
  require_has_reflections(gg);
  return *mov(gg).dim() + offset(classify(gg));
}

bool is_affine_reflection(const AffineMap& gg) {
  const AffineSubspace fixed = fix_aff(gg);
  return !fixed.is_empty() && fixed.directions().dim() + 1 == gg.dim();
}

// ---------------------------------------------------------------- reflections

AffineReflection::AffineReflection(AffineMap gg) : map_(std::move(gg)) {
  if (!is_affine_reflection(map_)) throw Error(Errc::NotAReflection, "map does not fix an affine hyperplane pointwise");
}

AffineReflection make_affine_reflection(const AffineSubspace& hyperplane, const Vector& a, const Vector& b) {
  const Field field = hyperplane.field();
  const std::size_t n = hyperplane.ambient_dim();
  if (a.field() != field || b.field() != field) throw Error(Errc::FieldMismatch, "points and hyperplane over different fields");
  if (a.size() != n || b.size() != n) throw Error(Errc::DimensionMismatch, "point dimension does not match the hyperplane");
  if (hyperplane.is_empty() || hyperplane.directions().dim() + 1 != n) {
    throw Error(Errc::NotAHyperplane, "fixed set must be an affine hyperplane");
  }
  if (hyperplane.contains(a) || hyperplane.contains(b)) {
    throw Error(Errc::PointOnHyperplane, "both points must lie off the hyperplane");
  }
  if (a == b) throw Error(Errc::NotAReflection, "a reflection fixing a hyperplane and a = b is the identity");

  // x -> x + alpha(x - c) (a - b) with alpha vanishing on the directions of H
  // and alpha(c - a) = 1, for the base point c of H.
  const Vector& c = hyperplane.base();
  const LinearForm alpha = form_vanishing_on(hyperplane.directions(), c - a);
  const Vector v = a - b;
  Matrix linear = Matrix::identity(field, n) + Matrix::outer(v, alpha);
  Vector translation = -(alpha(c) * v);
  return AffineReflection(AffineMap(std::move(linear), std::move(translation)));
}

AffineMap compose(Field field, std::size_t n, const std::vector<AffineReflection>& factors) {
  AffineMap acc = AffineMap::identity(field, n);
  for (const auto& r : factors) acc = acc * r.map();
  return acc;
}

// ---------------------------------------------------------------- factorization

namespace {

/// First echelon form vanishing on a proper subspace.
LinearForm first_annihilating_form(const Subspace& w) { return w.annihilator().front(); }

std::vector<AffineReflection> factor_elliptic(const AffineMap& gg) {
  const Vector a = fix_aff(gg).base();
  std::vector<AffineReflection> out;
  const OrderedFactorization linear = factor_minimal_gl(gg.linear());
  for (const auto& r : linear.factors()) {
    out.emplace_back(include_at(r.matrix(), a));
  }
  return out;
}

/// Given a reflection r with (r gg)(a) = a, returns r^{-1} followed by a
/// shortest factorization of the elliptic element r gg.
std::vector<AffineReflection> peel(const AffineMap& gg, const AffineReflection& r) {
  std::vector<AffineReflection> out{r.inverse()};
  for (auto& f : factor_elliptic(r.map() * gg)) out.push_back(std::move(f));
  return out;
}

std::vector<AffineReflection> factor_translation(const AffineMap& t) {
  const Field field = t.field();
  const std::size_t n = t.dim();
  const Vector& lambda = t.translation();
  const Vector origin = Vector::zero(field, n);

  if (!(is_f2(field))) {
    // r1(x) = x + alpha(x) lambda with alpha(lambda) = 1, r2 = t r1^{-1}.
    const std::size_t j = lambda.leading_index();
    LinearForm alpha = LinearForm::coordinate(field, n, j) * lambda[j].inverse();
    AffineMap r1(Matrix::identity(field, n) + Matrix::outer(lambda, alpha), origin);
    AffineMap r2 = t * r1.inverse();
    return {AffineReflection(std::move(r2)), AffineReflection(std::move(r1))};
  }

  // Over F2, 1 + alpha(lambda) = 0 for alpha(lambda) = 1, so use a transvection
  // pair instead: the hyperplane through e_j parallel to a hyperplane
  // containing lambda misses both 0 and lambda.
  const Subspace line = Subspace::span(field, n, std::span<const Vector>(&lambda, 1));
  const LinearForm beta = first_annihilating_form(line);
  const std::size_t j = beta.coefficients().leading_index();
  const AffineSubspace h = AffineSubspace::through(Vector::unit(field, n, j), common_kernel(field, n, std::span<const LinearForm>(&beta, 1)));
  return peel(t, make_affine_reflection(h, lambda, origin));
}

std::vector<AffineReflection> factor_parabolic(const AffineMap& gg) {
  const Field field = gg.field();
  const std::size_t n = gg.dim();

  if (!is_f2(field)) {
    // A hyperplane direction H containing fix_lin; a + H and gg(a) + H miss
    // some third parallel hyperplane.
    const LinearForm beta = first_annihilating_form(fix_lin(gg));
    const Subspace h = common_kernel(field, n, std::span<const LinearForm>(&beta, 1));
    const Vector a = Vector::zero(field, n);
    const Vector ga = gg.apply(a);
    const std::size_t j = beta.coefficients().leading_index();
    const Scalar level_a = beta(a);
    const Scalar level_ga = beta(ga);
    for (long long c = 0;; ++c) {
      const Scalar level(field, c);
      if (level == level_a || level == level_ga) continue;
      const AffineSubspace off = AffineSubspace::through(level * Vector::unit(field, n, j), h);
      return peel(gg, make_affine_reflection(off, ga, a));
    }
  }

  // Over F2: find a with U = a + (F2 (gg(a) - a) + fix_lin) proper. The origin
  // or one of the unit vectors always works for a parabolic element.
  const Subspace fixed = fix_lin(gg);
  std::vector<Vector> candidates{Vector::zero(field, n)};
  for (std::size_t i = n; i-- > 0;) candidates.push_back(Vector::unit(field, n, i));
  for (const auto& a : candidates) {
    const Vector motion = gg.apply(a) - a;
    const Subspace w = subspace_sum(Subspace::span(field, n, std::span<const Vector>(&motion, 1)), fixed);
    if (w.dim() == n) continue;
    const LinearForm beta = first_annihilating_form(w);
    const std::size_t j = beta.coefficients().leading_index();
    const Subspace h = common_kernel(field, n, std::span<const LinearForm>(&beta, 1));
    // a + H contains U; its parallel translate through a + e_j misses a and gg(a).
    const AffineSubspace off = AffineSubspace::through(a + Vector::unit(field, n, j), h);
    return peel(gg, make_affine_reflection(off, gg.apply(a), a));
  }
  throw Error(Errc::NotAReflection, "internal: no witness point for a parabolic element");
}

}  // namespace

std::vector<AffineReflection> factor_minimal_affine(const AffineMap& gg) {
  if (gg.is_identity()) return {};
  require_has_reflections(gg);
  switch (classify(gg)) {
    case ClassKind::Elliptic:
      return factor_elliptic(gg);
    case ClassKind::Parabolic:
      return factor_parabolic(gg);
    case ClassKind::Hyperbolic:
      break;
  }
  if (gg.is_translation()) return factor_translation(gg);
  // Over F2 a non-translation hyperbolic element is a glide reflection: its
  // linear part is a reflection, and what remains is a translation.
  const AffineMap lifted(gg.linear(), Vector::zero(gg.field(), gg.dim()));
  std::vector<AffineReflection> out{AffineReflection(lifted)};
  for (auto& f : factor_translation(lifted.inverse() * gg)) out.push_back(std::move(f));
  return out;
}

}  // namespace reflen
