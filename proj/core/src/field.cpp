#include "reflen/field.hpp"

#include "reflen/error.hpp"

namespace reflen {

namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1u) result = result * base % p;
    base = base * base % p;
    exp >>= 1u;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce_mpz(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 16) || !is_prime(p)) {
    throw Error(Errc::NotPrime, "field modulus " + std::to_string(p) + " is not a prime below 65536");
  }
  return Field(Kind::Prime, p);
}

std::optional<std::uint64_t> Field::order() const noexcept {
  if (is_rationals()) return std::nullopt;
  return p_;
}

std::string Field::name() const { return is_rationals() ? "Q" : "F" + std::to_string(p_); }

Scalar::Scalar(Field field, long long value) : field_(field), value_(std::uint32_t{0}) {
  if (field.is_rationals()) {
    value_ = mpq_class(static_cast<long>(value));
  } else {
    const long long p = field.characteristic();
    long long r = value % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint32_t>(r);
  }
}

Scalar Scalar::fraction(Field field, const mpz_class& num, const mpz_class& den) {
  if (field.is_rationals()) {
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(Raw{}, field, std::move(q));
  }
  const std::uint32_t p = field.characteristic();
  const std::uint32_t d = reduce_mpz(den, p);
  if (d == 0) throw Error(Errc::DivisionByZero, "denominator vanishes in " + field.name());
  const std::uint64_t n = reduce_mpz(num, p);
  return Scalar(Raw{}, field, static_cast<std::uint32_t>(n * mod_pow(d, p - 2, p) % p));
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) {
    const std::uint32_t p = field_.characteristic();
    return Scalar(Raw{}, field_, mod_pow(*r, p - 2, p));
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  return Scalar(Raw{}, field_, std::move(q));
}

std::uint32_t Scalar::residue() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r;
  throw Error(Errc::FieldMismatch, "residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(Errc::FieldMismatch, "rational() on a prime-field scalar");
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw Error(Errc::FieldMismatch, "scalars over " + field_.name() + " and " + other.field_.name());
  }
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) {
    return Scalar(Raw{}, field_, *r == 0 ? 0u : field_.characteristic() - *r);
  }
  mpq_class q = -std::get<mpq_class>(value_);
  return Scalar(Raw{}, field_, std::move(q));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint32_t>(&value_)) {
    const std::uint32_t p = field_.characteristic();
    std::uint32_t s = *r + std::get<std::uint32_t>(rhs.value_);
    if (s >= p) s -= p;
    *r = s;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint32_t>(&value_)) {
    const std::uint32_t p = field_.characteristic();
    const std::uint32_t b = std::get<std::uint32_t>(rhs.value_);
    *r = *r >= b ? *r - b : *r + p - b;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint32_t>(&value_)) {
    const std::uint64_t prod = std::uint64_t{*r} * std::get<std::uint32_t>(rhs.value_);
    *r = static_cast<std::uint32_t>(prod % field_.characteristic());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace reflen
