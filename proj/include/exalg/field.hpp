#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "exalg/error.hpp"

namespace exalg {

/// Selects the scalar field: the rationals, or GF(p) for a prime p < 2^32.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws NonPrimeModulus unless p is prime.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts the selector strings `q` and `gf:<p>`.
  static FieldSpec parse(std::string_view selector);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const noexcept { return modulus_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

/// An exact element of a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator; prime-field values are residues in [0, p).
/// Arithmetic on elements of different fields throws FieldMismatch; they
/// compare unequal.
class Scalar {
 public:
  Scalar() : Scalar(FieldSpec::rationals(), 0) {}
  Scalar(const FieldSpec& field, long value);
  Scalar(const FieldSpec& field, const mpq_class& value);
  Scalar(const FieldSpec& field, const mpz_class& num, const mpz_class& den);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True for negative rationals. Prime-field residues are never negative.
  bool is_negative() const noexcept;

  /// Valid only for rationals.
  const mpq_class& rational() const noexcept { return q_; }
  /// Valid only for prime fields.
  std::uint64_t residue() const noexcept { return r_; }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses `-?digits` or `-?digits/-?digits` into the given field.
Scalar parse_scalar(std::string_view text, const FieldSpec& field);

/// a^{-1}; throws DivisionByZero for a = 0.
inline Scalar invert(const Scalar& a) { return a.inverse(); }

inline std::uint64_t characteristic(const FieldSpec& field) { return field.characteristic(); }

}  // namespace exalg
