#include "exalg/field.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace exalg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t k = 3; k * k <= n; k += 2) {
    if (n % k == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  // Products of two residues must fit in 64 bits.
  if (p > std::numeric_limits<std::uint32_t>::max()) {
    fail(ErrorCode::NonPrimeModulus, "modulus " + std::to_string(p) + " exceeds 2^32");
  }
  if (!is_prime(p)) {
    fail(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  }
  return FieldSpec(Kind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view selector) {
  if (selector == "q" || selector == "Q") return rationals();
  constexpr std::string_view prefix = "gf:";
  if (selector.substr(0, prefix.size()) == prefix) {
    std::string_view digits = selector.substr(prefix.size());
    if (digits.empty() || digits.size() > 18) {
      fail(ErrorCode::MalformedInput, "bad field selector '" + std::string(selector) + "'");
    }
    std::uint64_t p = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        fail(ErrorCode::MalformedInput, "bad field selector '" + std::string(selector) + "'");
      }
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return prime(p);
  }
  fail(ErrorCode::MalformedInput, "bad field selector '" + std::string(selector) + "'");
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? std::string("q") : "gf:" + std::to_string(modulus_);
}

namespace {

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r = value % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

}  // namespace

Scalar::Scalar(const FieldSpec& field, long value) : field_(field) {
  if (field_.is_rationals()) {
    q_ = value;
  } else {
    r_ = reduce(mpz_class(value), field_.modulus());
  }
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& value) : field_(field) {
  if (field_.is_rationals()) {
    q_ = value;
    q_.canonicalize();
  } else {
    const std::uint64_t p = field_.modulus();
    std::uint64_t den = reduce(value.get_den(), p);
    if (den == 0) fail(ErrorCode::DivisionByZero, "denominator vanishes mod " + std::to_string(p));
    r_ = mul_mod(reduce(value.get_num(), p), pow_mod(den, p - 2, p), p);
  }
}

Scalar::Scalar(const FieldSpec& field, const mpz_class& num, const mpz_class& den) : field_(field) {
  if (den == 0) fail(ErrorCode::ZeroDenominator);
  if (field_.is_rationals()) {
    q_ = mpq_class(num, den);
    q_.canonicalize();
  } else {
    const std::uint64_t p = field_.modulus();
    std::uint64_t d = reduce(den, p);
    if (d == 0) fail(ErrorCode::DivisionByZero, "denominator vanishes mod " + std::to_string(p));
    r_ = mul_mod(reduce(num, p), pow_mod(d, p - 2, p), p);
  }
}

bool Scalar::is_zero() const noexcept { return field_.is_rationals() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const noexcept { return field_.is_rationals() ? q_ == 1 : r_ == 1; }

bool Scalar::is_negative() const noexcept { return field_.is_rationals() && sgn(q_) < 0; }

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    fail(ErrorCode::FieldMismatch, field_.to_string() + " vs " + other.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of 0");
  Scalar out = *this;
  if (field_.is_rationals()) {
    out.q_ = 1 / q_;
  } else {
    out.r_ = pow_mod(r_, field_.modulus() - 2, field_.modulus());
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rationals()) {
    q_ += rhs.q_;
  } else {
    r_ = (r_ + rhs.r_) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rationals()) {
    q_ -= rhs.q_;
  } else {
    r_ = (r_ + field_.modulus() - rhs.r_) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rationals()) {
    q_ *= rhs.q_;
  } else {
    r_ = mul_mod(r_, rhs.r_, field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rationals()) {
    out.q_ = -q_;
  } else {
    out.r_ = (field_.modulus() - r_) % field_.modulus();
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rationals() ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

// Consumes `-?digits` from the front of text.
bool take_integer(std::string_view& text, mpz_class& out) {
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  std::size_t start_digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start_digits) return false;
  out.set_str(std::string(text.substr(0, pos)), 10);
  text.remove_prefix(pos);
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
  std::string_view rest = text;
  mpz_class num;
  mpz_class den = 1;
  if (!take_integer(rest, num)) {
    fail(ErrorCode::MalformedScalar, "'" + std::string(text) + "'");
  }
  if (!rest.empty() && rest.front() == '/') {
    rest.remove_prefix(1);
    if (!take_integer(rest, den)) {
      fail(ErrorCode::MalformedScalar, "'" + std::string(text) + "'");
    }
    if (den == 0) fail(ErrorCode::ZeroDenominator, "'" + std::string(text) + "'");
  }
  if (!rest.empty()) fail(ErrorCode::MalformedScalar, "'" + std::string(text) + "'");
  if (!field.is_rationals() && mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(field.modulus())) == 0) {
    fail(ErrorCode::ZeroDenominator, "'" + std::string(text) + "' in " + field.to_string());
  }
  return Scalar(field, num, den);
}

}  // namespace exalg
