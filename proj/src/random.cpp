#include "exalg/random.hpp"

#include "exalg/exterior.hpp"

namespace exalg {

namespace {

constexpr int kRetryCap = 1000;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

Scalar random_scalar(const FieldSpec& field, Rng& rng) {
  if (field.is_rationals()) {
    return Scalar(field, mpz_class(uniform(rng, -9, 9)), mpz_class(uniform(rng, 1, 5)));
  }
  const auto p = static_cast<long>(field.modulus());
  return Scalar(field, uniform(rng, 0, p - 1));
}

Scalar random_nonzero_scalar(const FieldSpec& field, Rng& rng) {
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Scalar s = random_scalar(field, rng);
    if (!s.is_zero()) return s;
  }
  fail(ErrorCode::GeneratorExhausted, "nonzero scalar");
}

Scalar random_small_int(const FieldSpec& field, Rng& rng, long bound) {
  return Scalar(field, uniform(rng, -bound, bound));
}

Vector random_vector(const FieldSpec& field, std::size_t dim, Rng& rng) {
  Vector v(field, dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = random_scalar(field, rng);
  return v;
}

Vector random_nonzero_vector(const FieldSpec& field, std::size_t dim, Rng& rng) {
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Vector v = random_vector(field, dim, rng);
    if (!v.is_zero()) return v;
  }
  fail(ErrorCode::GeneratorExhausted, "nonzero vector");
}

Matrix random_matrix(const FieldSpec& field, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(field, rng);
  return m;
}

Matrix random_invertible_matrix(const FieldSpec& field, std::size_t n, Rng& rng) {
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Matrix m = random_matrix(field, n, n, rng);
    if (!det(m).is_zero()) return m;
  }
  fail(ErrorCode::GeneratorExhausted, "invertible matrix");
}

std::vector<Vector> random_independent_vectors(const FieldSpec& field, std::size_t dim, std::size_t count,
                                               Rng& rng) {
  if (count > dim) fail(ErrorCode::TooManyColumns, "more vectors than the dimension");
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < count; ++i) vs.push_back(random_vector(field, dim, rng));
    if (count == 0 || !wedge_vectors(vs).is_zero()) return vs;
  }
  fail(ErrorCode::GeneratorExhausted, "independent vectors");
}

Multivector random_homogeneous(const FieldSpec& field, std::size_t dim, std::size_t grade, Rng& rng) {
  Multivector m(field, dim);
  for (MultiIndex index : indices_of_grade(dim, grade)) m.add_term(index, random_scalar(field, rng));
  return m;
}

GramForm random_gram(const FieldSpec& field, std::size_t dim, Rng& rng) {
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    Matrix m(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i; j < dim; ++j) {
        m(i, j) = random_small_int(field, rng, 3);
        m(j, i) = m(i, j);
      }
    if (!det(m).is_zero()) return GramForm::validate(m);
  }
  fail(ErrorCode::GeneratorExhausted, "nondegenerate form");
}

}  // namespace exalg
