#pragma once

// Exact scalars over a prime field F_p or the rationals Q.
//
// A Field is a small value describing which field a Scalar lives in. Scalars
// carry their field and every binary operation checks that both operands
// agree, throwing Errc::FieldMismatch otherwise. Residues are kept in [0, p);
// rationals are kept in lowest terms with a positive denominator (gmpxx
// canonicalizes after every operation).

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace reflen {

/// Trial-division primality test.
bool is_prime(std::uint64_t n) noexcept;

class Field {
 public:
  enum class Kind : std::uint8_t { Prime, Rationals };

  /// Throws Errc::NotPrime unless 2 <= p < 2^16 and p is prime.
  static Field prime(std::uint32_t p);
  static Field rationals() noexcept { return Field(Kind::Rationals, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == Kind::Prime; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }

  /// p for F_p, 0 for Q.
  std::uint32_t characteristic() const noexcept { return p_; }

  /// Number of elements, or nullopt for Q.
  std::optional<std::uint64_t> order() const noexcept;

  /// "F5" or "Q"; the same spelling the text matrix format uses.
  std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  Field(Kind kind, std::uint32_t p) noexcept : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

class Scalar {
 public:
  /// Reduces `value` into the field (mod p, or as the integer value/1).
  Scalar(Field field, long long value);

  static Scalar zero(Field field) { return Scalar(field, 0); }
  static Scalar one(Field field) { return Scalar(field, 1); }

  /// num/den in the given field. Over F_p this is num * den^{-1}.
  /// Throws Errc::DivisionByZero when den vanishes in the field.
  static Scalar fraction(Field field, const mpz_class& num, const mpz_class& den);

  Field field() const noexcept { return field_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Throws Errc::DivisionByZero on zero.
  Scalar inverse() const;

  /// Residue in [0, p). Only meaningful for prime fields.
  std::uint32_t residue() const;
  /// Value as a rational. Only meaningful for Q.
  const mpq_class& rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  /// "3", "-1/2". Residues print in [0, p).
  std::string to_string() const;

 private:
  struct Raw {};
  Scalar(Raw, Field field, std::uint32_t residue) : field_(field), value_(residue) {}
  Scalar(Raw, Field field, mpq_class q) : field_(field), value_(std::move(q)) {}

  void require_same_field(const Scalar& other) const;

  Field field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

}  // namespace reflen
