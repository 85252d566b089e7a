#pragma once

// Umbrella header for the reflen library.

#include "reflen/affine.hpp"
#include "reflen/error.hpp"
#include "reflen/field.hpp"
#include "reflen/gl_factor.hpp"
#include "reflen/linalg.hpp"
#include "reflen/matrix_io.hpp"
#include "reflen/oracle.hpp"
#include "reflen/reflection.hpp"
#include "reflen/subspace.hpp"
#include "reflen/random.hpp"
