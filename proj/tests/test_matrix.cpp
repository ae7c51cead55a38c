#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "exalg/exterior.hpp"
#include "oracles.hpp"

using namespace exalg;
using namespace testing;

TEST_CASE("determinant examples") {
  CHECK(det(Matrix::identity(Q, 4)).is_one());
  CHECK(det(Matrix::from_ints(Q, {{0, 1}, {-1, 0}})).is_one());
  CHECK(det(Matrix::from_ints(Q, {{1, 2}, {3, 4}})) == Scalar(Q, -2));
  CHECK(det(Matrix::from_ints(F7, {{1, 2}, {2, 4}})).is_zero());
  CHECK_ERROR(det(Matrix(Q, 2, 3)), ErrorCode::NotSquare);
}

TEST_CASE("determinant agrees with the permutation sum") {
  for (const FieldSpec& f : {Q, F7, F101}) {
    CAPTURE(f.to_string());
    for_trials(21, 150, [&](Rng& rng) {
      const std::size_t n = pick(rng, 1, 5);
      const Matrix m = random_matrix(f, n, n, rng);
      CHECK(det(m) == oracle::det(m));
    });
  }
}

TEST_CASE("determinant of a singular matrix with a zero pivot") {
  // Forces row exchanges in elimination.
  const Matrix m = Matrix::from_ints(Q, {{0, 0, 1}, {0, 2, 3}, {4, 5, 6}});
  CHECK(det(m) == oracle::det(m));
  CHECK(det(m) == Scalar(Q, -8));
}

TEST_CASE("permanent") {
  CHECK(permanent(Matrix::identity(Q, 3)).is_one());
  CHECK(permanent(Matrix::from_ints(Q, {{1, 1}, {1, 1}})) == Scalar(Q, 2));
  CHECK_ERROR(permanent(Matrix(Q, 1, 2)), ErrorCode::NotSquare);
  for (const FieldSpec& f : {Q, F101}) {
    for_trials(22, 150, [&](Rng& rng) {
      const std::size_t n = pick(rng, 1, 5);
      const Matrix m = random_matrix(f, n, n, rng);
      CHECK(permanent(m) == oracle::permanent(m));
    });
  }
}

TEST_CASE("determinant is multiplicative") {
  for (const FieldSpec& f : kFields) {
    for_trials(23, 100, [&](Rng& rng) {
      const std::size_t n = pick(rng, 1, 5);
      const Matrix a = random_matrix(f, n, n, rng);
      const Matrix b = random_matrix(f, n, n, rng);
      CHECK(det(a * b) == det(a) * det(b));
      CHECK(a * b == oracle::multiply(a, b));
    });
  }
}

TEST_CASE("determinant of a map equals the matrix determinant") {
  CHECK(det_of_map(Matrix::identity(Q, 3)).is_one());
  CHECK(det_of_map(Matrix::from_ints(Q, {{2, 0}, {0, 3}})) == Scalar(Q, 6));
  for (const FieldSpec& f : kFields) {
    for_trials(24, 100, [&](Rng& rng) {
      const std::size_t n = pick(rng, 1, 5);
      const Matrix m = random_matrix(f, n, n, rng);
      CHECK(det_of_map(m) == det(m));
    });
  }
}

TEST_CASE("Cramer's rule") {
  const Vector b = vec(Q, {3, -1, 2});
  CHECK(cramer_solve(Matrix::identity(Q, 3), b) == b);
  CHECK(cramer_solve(Matrix::from_ints(F7, {{2, 0}, {0, 5}}), vec(F7, {1, 1})) == vec(F7, {4, 3}));
  CHECK_ERROR(cramer_solve(Matrix::from_ints(Q, {{1, 2}, {2, 4}}), vec(Q, {1, 1})), ErrorCode::SingularMatrix);
  for (const FieldSpec& f : kFields) {
    for_trials(25, 100, [&](Rng& rng) {
      const std::size_t n = pick(rng, 1, 5);
      const Matrix a = random_invertible_matrix(f, n, rng);
      const Vector rhs = random_vector(f, n, rng);
      const Vector x = cramer_solve(a, rhs);
      CHECK(a * x == rhs);
      CHECK(solve(a, rhs) == x);
    });
  }
}

TEST_CASE("cofactor inverse") {
  CHECK(cofactor_inverse(Matrix::identity(Q, 3)) == Matrix::identity(Q, 3));
  CHECK(cofactor_inverse(Matrix::from_ints(F7, {{2, 0}, {0, 5}})) == Matrix::from_ints(F7, {{4, 0}, {0, 3}}));
  CHECK_ERROR(cofactor_inverse(Matrix(Q, 2, 2)), ErrorCode::SingularMatrix);
  CHECK_ERROR(inverse(Matrix(Q, 2, 2)), ErrorCode::SingularMatrix);
  for (const FieldSpec& f : kFields) {
    for_trials(26, 100, [&](Rng& rng) {
      const std::size_t n = pick(rng, 1, 5);
      const Matrix a = random_invertible_matrix(f, n, rng);
      const Matrix inv = cofactor_inverse(a);
      CHECK(a * inv == Matrix::identity(f, n));
      CHECK(inv * a == Matrix::identity(f, n));
      CHECK(inverse(a) == inv);
    });
  }
}

TEST_CASE("rank and kernel") {
  CHECK(rank(Matrix::identity(Q, 4)) == 4);
  CHECK(kernel_basis(Matrix::identity(Q, 4)).empty());
  CHECK(rank(Matrix(Q, 3, 2)) == 0);
  CHECK(kernel_basis(Matrix(Q, 3, 2)).size() == 2);
  CHECK(rank(Matrix::from_ints(Q, {{1, 2, 3}, {2, 4, 6}})) == 1);
}

TEST_CASE("rank plus nullity") {
  for (const FieldSpec& f : {Q, F5, F101}) {
    for_trials(27, 150, [&](Rng& rng) {
      const std::size_t r = pick(rng, 1, 5);
      const std::size_t c = pick(rng, 1, 5);
      // Low-rank draws: a product through a thin middle dimension.
      const std::size_t k = pick(rng, 1, 5);
      const Matrix m = random_matrix(f, r, k, rng) * random_matrix(f, k, c, rng);
      const auto kernel = kernel_basis(m);
      CHECK(rank(m) + kernel.size() == c);
      for (const Vector& v : kernel) CHECK((m * v).is_zero());
      if (!kernel.empty()) CHECK_FALSE(wedge_vectors(kernel).is_zero());
      CHECK(rank(m) == rank(m.transpose()));
    });
  }
}

TEST_CASE("shape errors") {
  CHECK_ERROR(Matrix(Q, 2, 2) * Matrix(Q, 3, 3), ErrorCode::DimMismatch);
  CHECK_ERROR(Matrix(Q, 2, 2) * Vector(Q, 3), ErrorCode::DimMismatch);
  CHECK_ERROR(vec(Q, {1}) + vec(Q, {1, 2}), ErrorCode::DimMismatch);
  CHECK_ERROR(vec(Q, {1}) + vec(F7, {1}), ErrorCode::FieldMismatch);
}
