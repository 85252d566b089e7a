#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "reflen/error.hpp"
#include "reflen/field.hpp"
#include "reflen/oracle.hpp"
#include "oracle_detail.hpp"

namespace reflen::oracle {

const char* to_string(GroupKind kind) noexcept { return kind == GroupKind::GL ? "GL" : "GA"; }

GroupKind parse_group_kind(std::string_view text) {
  std::string up(text);
  for (auto& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (up == "GL") return GroupKind::GL;
  if (up == "GA") return GroupKind::GA;
  throw Error(Errc::Parse, "group kind must be GL or GA, got '" + std::string(text) + "'");
}

namespace detail {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

std::size_t rank_mod(Entries m, std::size_t rows, std::size_t cols, std::size_t stride, std::uint32_t p) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv * stride + c] == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * stride + j], m[rank * stride + j]);
    const std::uint32_t inv = inv_mod(m[rank * stride + c], p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const auto f = static_cast<std::uint32_t>(std::uint64_t{m[r * stride + c]} * inv % p);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        m[r * stride + j] = static_cast<std::uint16_t>((m[r * stride + j] + std::uint64_t{p - f} * m[rank * stride + j]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

Entries minus_identity(const Entries& m, std::size_t side, std::uint32_t p) {
  Entries d = m;
  for (std::size_t i = 0; i < side; ++i) d[i * side + i] = static_cast<std::uint16_t>((d[i * side + i] + p - 1) % p);
  return d;
}

Entries multiply(const Entries& a, const Entries& b, std::size_t side, std::uint32_t p) {
  Entries c{};
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < side; ++k) acc += std::uint64_t{a[i * side + k]} * b[k * side + j];
      c[i * side + j] = static_cast<std::uint16_t>(acc % p);
    }
  }
  return c;
}

std::optional<Entries> inverse(const Entries& m, std::size_t side, std::uint32_t p) {
  // Gauss-Jordan on [m | I].
  std::array<std::array<std::uint64_t, 2 * kMaxSide>, kMaxSide> aug{};
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) aug[i][j] = m[i * side + j];
    aug[i][side + i] = 1;
  }
  for (std::size_t c = 0; c < side; ++c) {
    std::size_t piv = c;
    while (piv < side && aug[piv][c] == 0) ++piv;
    if (piv == side) return std::nullopt;
    std::swap(aug[piv], aug[c]);
    const std::uint64_t inv = inv_mod(static_cast<std::uint32_t>(aug[c][c]), p);
    for (std::size_t j = 0; j < 2 * side; ++j) aug[c][j] = aug[c][j] * inv % p;
    for (std::size_t r = 0; r < side; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const std::uint64_t f = aug[r][c];
      for (std::size_t j = 0; j < 2 * side; ++j) aug[r][j] = (aug[r][j] + (p - f) * aug[c][j]) % p;
    }
  }
  Entries out{};
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) out[i * side + j] = static_cast<std::uint16_t>(aug[i][side + j]);
  }
  return out;
}

Entries identity(std::size_t side) {
  Entries e{};
  for (std::size_t i = 0; i < side; ++i) e[i * side + i] = 1;
  return e;
}

bool is_gl_reflection(const Entries& m, std::size_t side, std::uint32_t p) {
  return rank_mod(m, side, side, side, p) == side && rank_mod(minus_identity(m, side, p), side, side, side, p) == 1;
}

bool is_ga_reflection(const Entries& block, std::size_t n, std::uint32_t p) {
  // fix_aff solves (g - I)x = -lambda: nonempty with dimension n - 1 exactly
  // when rank(g - I) = rank([g - I | lambda]) = 1.
  const std::size_t side = n + 1;
  const Entries d = minus_identity(block, side, p);
  return rank_mod(d, n, n, side, p) == 1 && rank_mod(d, n, side, side, p) == 1;
}

Entries pack(const Matrix& m) {
  const std::uint32_t p = m.field().characteristic();
  Entries e{};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) e[i * m.cols() + j] = static_cast<std::uint16_t>(m(i, j).residue() % p);
  }
  return e;
}

Matrix unpack(const Entries& e, std::size_t side, std::uint32_t p) {
  const Field f = Field::prime(p);
  Matrix m(f, side, side);
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) m(i, j) = Scalar(f, e[i * side + j]);
  }
  return m;
}

}  // namespace detail

// ---------------------------------------------------------------- GroupTable

std::uint64_t group_order(GroupKind kind, std::size_t n, std::uint32_t p) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  auto mul = [](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
    if (a != 0 && b > kMax / a) return kMax;
    return a * b;
  };
  std::uint64_t pn = 1;
  for (std::size_t i = 0; i < n; ++i) pn = mul(pn, p);
  std::uint64_t order = 1;
  std::uint64_t pi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order = mul(order, pn == kMax ? kMax : pn - pi);
    pi = mul(pi, p);
  }
  if (kind == GroupKind::GA) order = mul(order, pn);
  return order;
}

std::optional<std::size_t> GroupTable::find(const Entries& e) const {
  const std::uint64_t k = key_of(e);
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
  if (it == keys_.end() || *it != k) return std::nullopt;
  return static_cast<std::size_t>(it - keys_.begin());
}

Entries GroupTable::multiply(const Entries& a, const Entries& b) const { return detail::multiply(a, b, side_, p_); }

std::size_t GroupTable::multiply(std::size_t a, std::size_t b) const {
  const auto id = find(multiply(elements_.at(a), elements_.at(b)));
  if (!id) throw std::logic_error("group table is not closed under multiplication");
  return *id;
}

std::size_t GroupTable::inverse(std::size_t id) const {
  const auto inv = detail::inverse(elements_.at(id), side_, p_);
  const auto found = inv ? find(*inv) : std::nullopt;
  if (!found) throw std::logic_error("group table is not closed under inverses");
  return *found;
}

std::uint64_t GroupTable::key_of(const Entries& e) const noexcept {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < side_ * side_; ++i) k = k * p_ + e[i];
  return k;
}

Matrix GroupTable::to_matrix(std::size_t id) const { return detail::unpack(elements_.at(id), side_, p_); }

AffineMap GroupTable::to_affine(std::size_t id) const {
  if (kind_ != GroupKind::GA) throw Error(Errc::DimensionMismatch, "to_affine on a GL table");
  return AffineMap::from_block(to_matrix(id));
}

std::string GroupTable::format(std::size_t id) const {
  const Entries& e = elements_.at(id);
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < side_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < side_; ++j) out << (j ? "," : "") << e[i * side_ + j];
    out << ']';
  }
  out << ']';
  return out.str();
}

namespace {

/// Echelon basis over F_p used to test independence of candidate rows.
struct Echelon {
  std::array<std::array<std::uint32_t, kMaxSide>, kMaxSide> rows{};
  std::array<std::size_t, kMaxSide> pivots{};
  std::size_t size = 0;

  /// Adds v (length len) if independent; returns false otherwise.
  bool try_add(std::array<std::uint32_t, kMaxSide> v, std::size_t len, std::uint32_t p) {
    for (std::size_t r = 0; r < size; ++r) {
      const std::uint32_t f = v[pivots[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < len; ++j) v[j] = static_cast<std::uint32_t>((v[j] + std::uint64_t{p - f} * rows[r][j]) % p);
    }
    std::size_t lead = 0;
    while (lead < len && v[lead] == 0) ++lead;
    if (lead == len) return false;
    const std::uint32_t inv = detail::inv_mod(v[lead], p);
    for (std::size_t j = 0; j < len; ++j) v[j] = static_cast<std::uint32_t>(std::uint64_t{v[j]} * inv % p);
    rows[size] = v;
    pivots[size] = lead;
    ++size;
    return true;
  }
};

}  // namespace

GroupTable enumerate_group(GroupKind kind, std::size_t n, std::uint32_t p, std::uint64_t cap) {
  const Field field = Field::prime(p);  // validates p
  (void)field;
  if (n == 0) throw Error(Errc::DimensionMismatch, "dimension must be at least 1");
  const std::size_t side = kind == GroupKind::GL ? n : n + 1;
  if (side > kMaxSide) {
    throw Error(Errc::TooLarge, "matrices of side " + std::to_string(side) + " exceed the oracle limit of " + std::to_string(kMaxSide));
  }
  const std::uint64_t order = group_order(kind, n, p);
  if (order > cap) {
    throw Error(Errc::TooLarge, std::string(to_string(kind)) + "_" + std::to_string(n) + "(F" + std::to_string(p) +
                                    ") has order " + std::to_string(order) + " > cap " + std::to_string(cap));
  }
  // Keys need p^(side^2) to fit in 64 bits.
  {
    std::uint64_t span = 1;
    for (std::size_t i = 0; i < side * side; ++i) {
      if (span > std::numeric_limits<std::uint64_t>::max() / p) throw Error(Errc::TooLarge, "matrix keys do not fit in 64 bits");
      span *= p;
    }
  }

  GroupTable t;
  t.kind_ = kind;
  t.n_ = n;
  t.p_ = p;
  t.side_ = side;
  t.elements_.reserve(order);

  // Rows are chosen in lexicographic order, so elements come out sorted. For
  // GA the first n entries of each of the first n rows must be independent;
  // the last entry (translation) is free, and the last row is (0,...,0,1).
  const std::size_t width = side;
  std::uint64_t row_count = 1;
  for (std::size_t i = 0; i < width; ++i) row_count *= p;

  Entries cur{};
  if (kind == GroupKind::GA) cur[n * side + n] = 1;

  auto recurse = [&](auto&& self, std::size_t row, const Echelon& basis) -> void {
    if (row == n) {
      t.elements_.push_back(cur);
      return;
    }
    std::array<std::uint32_t, kMaxSide> digits{};
    for (std::uint64_t code = 0; code < row_count; ++code) {
      std::uint64_t c = code;
      for (std::size_t j = width; j-- > 0;) {
        digits[j] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      Echelon next = basis;
      if (!next.try_add(digits, n, p)) continue;
      for (std::size_t j = 0; j < width; ++j) cur[row * side + j] = static_cast<std::uint16_t>(digits[j]);
      self(self, row + 1, next);
    }
  };
  recurse(recurse, 0, Echelon{});

  t.keys_.reserve(t.elements_.size());
  for (const auto& e : t.elements_) t.keys_.push_back(t.key_of(e));
  if (!std::is_sorted(t.keys_.begin(), t.keys_.end()) || t.elements_.size() != order) {
    throw std::logic_error("group enumeration produced an unexpected element list");
  }
  t.identity_ = *t.find(detail::identity(side));

  // Inverses, and closure against the element after each one.
  for (std::size_t id = 0; id < t.size(); ++id) {
    t.inverse(id);
    t.multiply(id, (id + 1) % t.size());
  }
  return t;
}

std::optional<std::string> check_group_axioms(const GroupTable& table) {
  for (std::size_t a = 0; a < table.size(); ++a) {
    if (!detail::inverse(table.element(a), table.side(), table.p()) ||
        !table.find(*detail::inverse(table.element(a), table.side(), table.p()))) {
      return "no inverse for " + table.format(a);
    }
    for (std::size_t b = 0; b < table.size(); ++b) {
      if (!table.find(table.multiply(table.element(a), table.element(b)))) {
        return "product " + table.format(a) + " * " + table.format(b) + " is missing";
      }
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> reflections_of(const GroupTable& table) {
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < table.size(); ++id) {
    const Entries& e = table.element(id);
    const bool hit = table.kind() == GroupKind::GL ? detail::is_gl_reflection(e, table.side(), table.p())
                                                   : detail::is_ga_reflection(e, table.n(), table.p());
    if (hit) out.push_back(id);
  }
  return out;
}

// ---------------------------------------------------------------- BFS

std::size_t LengthTable::unreachable_count() const {
  return static_cast<std::size_t>(std::count(length.begin(), length.end(), kUnreachable));
}

int LengthTable::max_length() const { return length.empty() ? 0 : *std::max_element(length.begin(), length.end()); }

LengthTable bfs_lengths(const GroupTable& table, const std::vector<std::size_t>& gens) {
  LengthTable out;
  out.length.assign(table.size(), LengthTable::kUnreachable);
  std::vector<std::size_t> frontier{table.identity()};
  out.length[table.identity()] = 0;
  std::vector<std::size_t> next;
  for (int depth = 1; !frontier.empty(); ++depth) {
    next.clear();
    for (const std::size_t x : frontier) {
      for (const std::size_t r : gens) {
        const std::size_t y = table.multiply(x, r);
        if (out.length[y] == LengthTable::kUnreachable) {
          out.length[y] = depth;
          next.push_back(y);
        }
      }
    }
    frontier.swap(next);
  }
  return out;
}

std::optional<std::size_t> word_length_gl(const Matrix& target, std::size_t max_length) {
  const Field field = target.field();
  if (!field.is_prime_field()) throw Error(Errc::FieldMismatch, "word_length_gl needs a prime field");
  if (!target.is_square()) throw Error(Errc::DimensionMismatch, "word_length_gl needs a square matrix");
  const std::size_t n = target.rows();
  const std::uint32_t p = field.characteristic();
  if (n == 0 || n > kMaxSide) throw Error(Errc::TooLarge, "word_length_gl supports sides 1..5");

  const Entries goal = detail::pack(target);
  if (!detail::inverse(goal, n, p)) throw Error(Errc::Singular, "target matrix is singular");
  if (goal == detail::identity(n)) return 0;

  // All reflections, found by testing every matrix.
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    total *= p;
    if (total > std::uint64_t{1} << 32) throw Error(Errc::TooLarge, "too many matrices to scan for reflections");
  }
  std::vector<Entries> refl;
  Entries m{};
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t j = n * n; j-- > 0;) {
      m[j] = static_cast<std::uint16_t>(c % p);
      c /= p;
    }
    if (detail::is_gl_reflection(m, n, p)) refl.push_back(m);
  }

  // goal = P r with P a product of d - 1 reflections iff P^{-1} goal is a
  // reflection, i.e. rank(goal - P) = 1.
  auto last_step = [&](const Entries& prefix) {
    Entries diff{};
    for (std::size_t i = 0; i < n * n; ++i) diff[i] = static_cast<std::uint16_t>((goal[i] + p - prefix[i]) % p);
    return detail::rank_mod(diff, n, n, n, p) == 1;
  };
  auto search = [&](auto&& self, const Entries& prefix, std::size_t remaining) -> bool {
    if (remaining == 1) return last_step(prefix);
    for (const auto& r : refl) {
      if (self(self, detail::multiply(prefix, r, n, p), remaining - 1)) return true;
    }
    return false;
  };
  for (std::size_t d = 1; d <= max_length; ++d) {
    if (search(search, detail::identity(n), d)) return d;
  }
  return std::nullopt;
}

}  // namespace reflen::oracle
