#pragma once

// Brute-force ground truth on small groups.
//
// GL_n(F_p) and GA_n(F_p) are enumerated explicitly, with GA elements stored
// as (n+1)x(n+1) block matrices. Everything here runs on packed mod-p entries
// and deliberately avoids the closed-form machinery of the rest of the
// library, so that the two can be compared.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reflen/affine.hpp"
#include "reflen/linalg.hpp"

namespace reflen::oracle {

enum class GroupKind { GL, GA };

const char* to_string(GroupKind kind) noexcept;
/// "GL" or "GA" (case-insensitive). Throws Errc::Parse otherwise.
GroupKind parse_group_kind(std::string_view text);

inline constexpr std::uint64_t kDefaultCap = 1'000'000;
/// Largest supported matrix side: GL_5 or GA_4.
inline constexpr std::size_t kMaxSide = 5;

/// Row-major entries in [0, p); only the leading side x side block is used.
using Entries = std::array<std::uint16_t, kMaxSide * kMaxSide>;

/// |GL_n(F_p)| or |GA_n(F_p)|, saturating at UINT64_MAX.
std::uint64_t group_order(GroupKind kind, std::size_t n, std::uint32_t p);

class GroupTable {
 public:
  GroupKind kind() const noexcept { return kind_; }
  std::size_t n() const noexcept { return n_; }
  std::uint32_t p() const noexcept { return p_; }
  /// Matrix side: n for GL, n + 1 for GA.
  std::size_t side() const noexcept { return side_; }
  std::size_t size() const noexcept { return elements_.size(); }

  const Entries& element(std::size_t id) const { return elements_.at(id); }
  std::uint64_t key(std::size_t id) const { return keys_.at(id); }
  std::size_t identity() const noexcept { return identity_; }

  std::optional<std::size_t> find(const Entries& e) const;
  Entries multiply(const Entries& a, const Entries& b) const;
  /// Id of a * b.
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t id) const;

  /// Base-p row-major key; lexicographic order on entries is numeric order.
  std::uint64_t key_of(const Entries& e) const noexcept;

  /// The element as a library matrix over F_p (block form for GA).
  Matrix to_matrix(std::size_t id) const;
  /// The element as an affine map (GA tables only).
  AffineMap to_affine(std::size_t id) const;
  /// "[[1,0],[0,1]]"
  std::string format(std::size_t id) const;

 private:
  friend GroupTable enumerate_group(GroupKind, std::size_t, std::uint32_t, std::uint64_t);

  GroupKind kind_ = GroupKind::GL;
  std::size_t n_ = 0;
  std::uint32_t p_ = 2;
  std::size_t side_ = 0;
  std::size_t identity_ = 0;
  std::vector<Entries> elements_;
  std::vector<std::uint64_t> keys_;
};

/// All elements in lexicographic order of their entries. Throws Errc::NotPrime
/// for a bad p and Errc::TooLarge when the order exceeds `cap` or the matrices
/// are wider than kMaxSide.
GroupTable enumerate_group(GroupKind kind, std::size_t n, std::uint32_t p, std::uint64_t cap = kDefaultCap);

/// Exhaustive closure and inverse check, O(|G|^2). Returns the first failure.
std::optional<std::string> check_group_axioms(const GroupTable& table);

/// Ids of the elements fixing a (linear or affine) hyperplane pointwise.
std::vector<std::size_t> reflections_of(const GroupTable& table);

struct LengthTable {
  static constexpr int kUnreachable = -1;
  std::vector<int> length;

  bool reachable(std::size_t id) const { return length.at(id) != kUnreachable; }
  std::size_t unreachable_count() const;
  int max_length() const;
};

/// Word lengths over `gens` by breadth-first search from the identity.
LengthTable bfs_lengths(const GroupTable& table, const std::vector<std::size_t>& gens);

/// Word length of an invertible matrix over F_p in the reflections of
/// GL_n(F_p), by exhaustive search without building the group. nullopt if it
/// exceeds `max_length`. Practical for p^(n^2) up to a few million.
std::optional<std::size_t> word_length_gl(const Matrix& target, std::size_t max_length);

// ---------------------------------------------------------------- verification

/// Affine geometry of a GA element computed by enumerating points.
struct Geometry {
  std::size_t mov_dim;
  std::size_t fix_lin_dim;
  bool fixes_point;
  ClassKind kind;
};

Geometry brute_force_geometry(const GroupTable& table, std::size_t id);

struct VerifyOptions {
  /// Also check the reducedness criterion on every reflection tuple.
  bool tuples = false;
  std::size_t max_tuple_length = 3;
  /// 0 picks the hardware concurrency.
  unsigned workers = 0;
};

using Records = std::vector<std::pair<std::string, std::string>>;

struct VerificationReport {
  GroupKind kind;
  std::size_t n;
  std::uint32_t p;
  std::size_t elements = 0;
  std::size_t reflections = 0;
  std::size_t unreachable = 0;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::optional<std::string> first_counterexample;

  bool tuples_checked = false;
  std::size_t tuples = 0;
  std::size_t tuple_counterexamples = 0;
  std::optional<std::string> first_tuple_counterexample;

  Records records() const;
};

/// Compares BFS lengths with the closed-form length (and, for GA, the class
/// and moved-space dimension with brute_force_geometry) on every element.
/// Throws Errc::NoReflections when the group has no reflections.
VerificationReport verify_formulas(const GroupTable& table, const VerifyOptions& options = {});

struct CensusReport {
  GroupKind kind;
  std::size_t n;
  std::uint32_t p;
  std::size_t order = 0;
  std::size_t reflections = 0;
  std::size_t unreachable = 0;
  /// length -> count over reachable elements.
  std::vector<std::size_t> length_counts;

  // GL only.
  std::size_t semisimple_reflections = 0;
  std::size_t transvections = 0;

  // GA only, classes from brute_force_geometry.
  std::size_t elliptic = 0;
  std::size_t parabolic = 0;
  std::size_t hyperbolic = 0;
  std::size_t translations = 0;
  std::size_t hyperbolic_non_translation = 0;
  /// Non-identity elements fixing a point that are not reflections.
  std::size_t point_fixing_non_reflections = 0;
  std::size_t point_fixing_non_reflections_parabolic = 0;

  Records records() const;
};

CensusReport census(const GroupTable& table);

/// One line per record, "key=value" by default; "key: value" with sep ": ".
std::string format_records(const Records& records, std::string_view sep = "=");

}  // namespace reflen::oracle
