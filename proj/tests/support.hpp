#pragma once

#include <doctest.h>

#include "exalg/field.hpp"
#include "exalg/matrix.hpp"
#include "exalg/multivector.hpp"
#include "exalg/random.hpp"
#include "exalg/text.hpp"

namespace doctest {
template <>
struct StringMaker<exalg::Scalar> {
  static String convert(const exalg::Scalar& s) { return s.to_string().c_str(); }
};
template <>
struct StringMaker<exalg::Vector> {
  static String convert(const exalg::Vector& v) { return exalg::to_string(v).c_str(); }
};
template <>
struct StringMaker<exalg::Matrix> {
  static String convert(const exalg::Matrix& m) { return exalg::to_string(m).c_str(); }
};
template <>
struct StringMaker<exalg::Multivector> {
  static String convert(const exalg::Multivector& m) { return exalg::to_string(m).c_str(); }
};
}  // namespace doctest

namespace testing {

inline const exalg::FieldSpec Q = exalg::FieldSpec::rationals();
inline const exalg::FieldSpec F5 = exalg::FieldSpec::prime(5);
inline const exalg::FieldSpec F7 = exalg::FieldSpec::prime(7);
inline const exalg::FieldSpec F101 = exalg::FieldSpec::prime(101);

inline const exalg::FieldSpec kFields[] = {Q, F5, F101};

inline exalg::Multivector mv(std::string_view text, std::size_t dim, const exalg::FieldSpec& f = Q) {
  return exalg::parse_multivector(text, f, dim);
}

inline exalg::Vector vec(const exalg::FieldSpec& f, std::initializer_list<long> values) {
  return exalg::Vector::from_ints(f, values);
}

inline exalg::Scalar sc(const exalg::FieldSpec& f, long n, long d = 1) {
  return exalg::Scalar(f, mpz_class(n), mpz_class(d));
}

// Runs `body(rng)` for `count` seeded trials.
template <class Body>
void for_trials(std::uint64_t seed, int count, Body body) {
  for (int i = 0; i < count; ++i) {
    exalg::Rng rng = exalg::trial_rng(seed, static_cast<std::uint64_t>(i));
    CAPTURE(i);
    body(rng);
  }
}

inline std::size_t pick(exalg::Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace testing

#define CHECK_ERROR(expr, error_code)                                       \
  do {                                                                      \
    bool thrown_ = false;                                                   \
    try {                                                                   \
      (void)(expr);                                                         \
    } catch (const exalg::Error& e) {                                       \
      thrown_ = true;                                                       \
      CHECK_MESSAGE(e.code() == (error_code), e.what());                    \
    }                                                                       \
    CHECK_MESSAGE(thrown_, "expected " #error_code);                        \
  } while (false)
