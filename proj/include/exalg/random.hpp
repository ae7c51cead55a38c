#pragma once

#include <cstdint>
#include <random>

#include "exalg/matrix.hpp"
#include "exalg/metric.hpp"
#include "exalg/multivector.hpp"

namespace exalg {

using Rng = std::mt19937_64;

/// Independent stream for one trial, derived from (seed, trial).
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Over Q: numerator in [−9, 9], denominator in [1, 5]. Over GF(p): uniform.
Scalar random_scalar(const FieldSpec& field, Rng& rng);
Scalar random_nonzero_scalar(const FieldSpec& field, Rng& rng);
/// Integers in [−bound, bound], reduced into the field.
Scalar random_small_int(const FieldSpec& field, Rng& rng, long bound);

Vector random_vector(const FieldSpec& field, std::size_t dim, Rng& rng);
Vector random_nonzero_vector(const FieldSpec& field, std::size_t dim, Rng& rng);
Matrix random_matrix(const FieldSpec& field, std::size_t rows, std::size_t cols, Rng& rng);
Matrix random_invertible_matrix(const FieldSpec& field, std::size_t n, Rng& rng);
/// `count` independent vectors of F^dim.
std::vector<Vector> random_independent_vectors(const FieldSpec& field, std::size_t dim, std::size_t count, Rng& rng);

/// Homogeneous element with random coefficients on every basis blade.
Multivector random_homogeneous(const FieldSpec& field, std::size_t dim, std::size_t grade, Rng& rng);

/// Symmetric nondegenerate form with small integer entries.
GramForm random_gram(const FieldSpec& field, std::size_t dim, Rng& rng);

}  // namespace exalg
