#pragma once

// Seeded random elements for property tests and the CLI sweep.
//
// Over Q, entries are small integers with an occasional small fraction so
// that exact arithmetic stays cheap.

#include <cstddef>
#include <random>

#include "reflen/affine.hpp"
#include "reflen/linalg.hpp"
#include "reflen/reflection.hpp"

namespace reflen {

using Rng = std::mt19937_64;

Scalar random_scalar(Field field, Rng& rng);
Scalar random_nonzero_scalar(Field field, Rng& rng);
Vector random_vector(Field field, std::size_t n, Rng& rng);
Vector random_nonzero_vector(Field field, std::size_t n, Rng& rng);
Matrix random_invertible(Field field, std::size_t n, Rng& rng);
/// A random reflection; about half are transvections when the field allows it.
/// Throws Errc::NoReflections for GL_1(F2).
Reflection random_reflection(Field field, std::size_t n, Rng& rng);
AffineMap random_affine(Field field, std::size_t n, Rng& rng);

/// An invertible matrix with prescribed rank(g - I) = k <= n, conjugated by a
/// random change of basis, so that low-length elements are well represented.
Matrix random_with_moved_rank(Field field, std::size_t n, std::size_t k, Rng& rng);

}  // namespace reflen
