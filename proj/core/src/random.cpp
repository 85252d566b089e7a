#include "reflen/random.hpp"

#include "reflen/error.hpp"

namespace reflen {

Scalar random_scalar(Field field, Rng& rng) {
  if (field.is_prime_field()) {
    std::uniform_int_distribution<long long> d(0, field.characteristic() - 1);
    return Scalar(field, d(rng));
  }
  std::uniform_int_distribution<long long> num(-3, 3);
  std::uniform_int_distribution<int> frac(0, 4);
  Scalar s(field, num(rng));
  if (frac(rng) == 0) s = s / Scalar(field, 2 + frac(rng) % 2);
  return s;
}

Scalar random_nonzero_scalar(Field field, Rng& rng) {
  for (;;) {
    Scalar s = random_scalar(field, rng);
    if (!s.is_zero()) return s;
  }
}

Vector random_vector(Field field, std::size_t n, Rng& rng) {
  Vector v = Vector::zero(field, n);
  for (std::size_t i = 0; i < n; ++i) v[i] = random_scalar(field, rng);
  return v;
}

Vector random_nonzero_vector(Field field, std::size_t n, Rng& rng) {
  for (;;) {
    Vector v = random_vector(field, n, rng);
    if (!v.is_zero()) return v;
  }
}

Matrix random_invertible(Field field, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar(field, rng);
    }
    if (is_invertible(m)) return m;
  }
}

Reflection random_reflection(Field field, std::size_t n, Rng& rng) {
  if (n == 1 && field.is_prime_field() && field.characteristic() == 2) {
    throw Error(Errc::NoReflections, "GL_1(F2) is trivial");
  }
  const bool want_transvection = std::uniform_int_distribution<int>(0, 1)(rng) == 1 && n >= 2;
  for (;;) {
    Vector v = random_nonzero_vector(field, n, rng);
    LinearForm alpha(random_nonzero_vector(field, n, rng));
    if (want_transvection) {
      // Project alpha so that alpha(v) = 0.
      const std::size_t j = v.leading_index();
      const Scalar shift = alpha(v) / v[j];
      Vector c = alpha.coefficients();
      c[j] -= shift;
      alpha = LinearForm(c);
      if (alpha.is_zero()) continue;
    }
    if ((alpha(v) + Scalar::one(field)).is_zero()) continue;
    return Reflection::make(std::move(v), std::move(alpha));
  }
}

AffineMap random_affine(Field field, std::size_t n, Rng& rng) {
  return AffineMap(random_invertible(field, n, rng), random_vector(field, n, rng));
}

Matrix random_with_moved_rank(Field field, std::size_t n, std::size_t k, Rng& rng) {
  if (k > n) throw Error(Errc::DimensionMismatch, "moved rank exceeds dimension");
  if (k == 1 && n == 1 && field.is_prime_field() && field.characteristic() == 2) {
    throw Error(Errc::NoReflections, "GL_1(F2) is trivial");
  }
  // g = I + A B with A (n x k) and B (k x n) of full rank k.
  for (;;) {
    Matrix a(field, n, k);
    Matrix b(field, k, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        a(i, j) = random_scalar(field, rng);
        b(j, i) = random_scalar(field, rng);
      }
    }
    if (rank(a) != k || rank(b) != k) continue;
    Matrix g = Matrix::identity(field, n) + a * b;
    if (is_invertible(g)) return g;
  }
}

}  // namespace reflen
