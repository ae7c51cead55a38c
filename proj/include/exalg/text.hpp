#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "exalg/matrix.hpp"
#include "exalg/metric.hpp"
#include "exalg/multivector.hpp"

namespace exalg {

/// Canonical form: terms `<scalar>*e{i,j,...}` in grade-major, then
/// lexicographic order, joined by their signs; `E` marks dual elements and
/// `0` is the zero element.
std::string to_string(const Multivector& m);

/// Accepts the canonical form and also unsorted or repeated indices, which
/// are normalized with the permutation sign (a repeat makes the term 0).
/// A term without a scalar has coefficient 1; a bare scalar is a multiple of
/// e{}. Throws MalformedInput,
/// MalformedScalar, DualMismatch, DimMismatch.
Multivector parse_multivector(std::string_view text, const FieldSpec& field, std::size_t dim);

/// Largest index mentioned in a multivector expression, 0 if none.
std::size_t max_index(std::string_view text);

/// `[a,b,...]`.
std::string to_string(const Vector& v);
Vector parse_vector(std::string_view text, const FieldSpec& field);

/// `span{[..],[..],...}`.
std::string to_string(const std::vector<Vector>& vs);
std::vector<Vector> parse_vector_list(std::string_view text, const FieldSpec& field);

/// `[[..],[..],...]`, one bracket per row.
std::string to_string(const Matrix& m);
Matrix parse_matrix(std::string_view text, const FieldSpec& field);

/// `diag:+1,-1,...` or `matrix:[[..],..]`.
GramForm parse_gram(std::string_view text, const FieldSpec& field);

}  // namespace exalg
