#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "exalg/field.hpp"

namespace exalg {

/// A coordinate d-tuple over one field.
class Vector {
 public:
  Vector(const FieldSpec& field, std::size_t dim);
  Vector(const FieldSpec& field, std::vector<Scalar> coords);
  static Vector from_ints(const FieldSpec& field, std::initializer_list<long> values);
  static Vector unit(const FieldSpec& field, std::size_t dim, std::size_t index);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& a, Vector v);
  Vector operator-() const;

  friend bool operator==(const Vector& a, const Vector& b);

 private:
  void require_compatible(const Vector& other) const;

  FieldSpec field_;
  std::vector<Scalar> coords_;
};

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix from_ints(const FieldSpec& field,
                          std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_columns(std::span<const Vector> columns);
  static Matrix from_rows(std::span<const Vector> rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  Matrix transpose() const;
  /// Rows and columns selected by the given 0-based index lists.
  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator*(const Scalar& a, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Fraction-free Bareiss elimination over Q, plain elimination over GF(p).
Scalar det(const Matrix& m);
/// Ryser's inclusion-exclusion formula.
Scalar permanent(const Matrix& m);

std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, read off the reduced row echelon form.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Gauss-Jordan inverse; throws SingularMatrix.
Matrix inverse(const Matrix& m);
/// Unique solution of a x = b; throws SingularMatrix.
Vector solve(const Matrix& a, const Vector& b);

/// x_i = det(a with column i replaced by b) / det(a).
Vector cramer_solve(const Matrix& a, const Vector& b);
/// Adjugate divided by the determinant.
Matrix cofactor_inverse(const Matrix& a);

}  // namespace exalg
