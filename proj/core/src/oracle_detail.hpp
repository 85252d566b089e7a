#pragma once

// Packed mod-p matrix kernels shared by the oracle sources.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "reflen/linalg.hpp"
#include "reflen/oracle.hpp"

namespace reflen::oracle::detail {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/// Rank of the leading rows x cols block of m, read with row stride `stride`.
std::size_t rank_mod(Entries m, std::size_t rows, std::size_t cols, std::size_t stride, std::uint32_t p);

Entries minus_identity(const Entries& m, std::size_t side, std::uint32_t p);
Entries multiply(const Entries& a, const Entries& b, std::size_t side, std::uint32_t p);
std::optional<Entries> inverse(const Entries& m, std::size_t side, std::uint32_t p);
Entries identity(std::size_t side);

bool is_gl_reflection(const Entries& m, std::size_t side, std::uint32_t p);
bool is_ga_reflection(const Entries& block, std::size_t n, std::uint32_t p);

Entries pack(const Matrix& m);
Matrix unpack(const Entries& e, std::size_t side, std::uint32_t p);

}  // namespace reflen::oracle::detail
