#include "exalg/matrix.hpp"

#include <utility>

namespace exalg {

Vector::Vector(const FieldSpec& field, std::size_t dim) : field_(field), coords_(dim, Scalar::zero(field)) {}

Vector::Vector(const FieldSpec& field, std::vector<Scalar> coords) : field_(field), coords_(std::move(coords)) {
  for (const Scalar& c : coords_) {
    if (!(c.field() == field_)) fail(ErrorCode::FieldMismatch, "vector coordinate");
  }
}

Vector Vector::from_ints(const FieldSpec& field, std::initializer_list<long> values) {
  std::vector<Scalar> coords;
  coords.reserve(values.size());
  for (long v : values) coords.emplace_back(field, v);
  return Vector(field, std::move(coords));
}

Vector Vector::unit(const FieldSpec& field, std::size_t dim, std::size_t index) {
  Vector v(field, dim);
  v[index] = Scalar::one(field);
  return v;
}

bool Vector::is_zero() const {
  for (const Scalar& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void Vector::require_compatible(const Vector& other) const {
  if (!(field_ == other.field_)) fail(ErrorCode::FieldMismatch, "vector field");
  if (dim() != other.dim()) {
    fail(ErrorCode::DimMismatch, std::to_string(dim()) + " vs " + std::to_string(other.dim()));
  }
}

Vector& Vector::operator+=(const Vector& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Vector operator*(const Scalar& a, Vector v) {
  for (Scalar& c : v.coords_) c = a * c;
  return v;
}

Vector Vector::operator-() const {
  Vector out = *this;
  for (Scalar& c : out.coords_) c = -c;
  return out;
}

bool operator==(const Vector& a, const Vector& b) {
  a.require_compatible(b);
  return a.coords_ == b.coords_;
}

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& field,
                         std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) fail(ErrorCode::DimMismatch, "ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = Scalar(field, v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
  if (columns.empty()) fail(ErrorCode::DimMismatch, "no columns");
  const FieldSpec& field = columns.front().field();
  const std::size_t rows = columns.front().dim();
  Matrix m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (!(columns[j].field() == field)) fail(ErrorCode::FieldMismatch, "column field");
    if (columns[j].dim() != rows) fail(ErrorCode::DimMismatch, "column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows) {
  if (rows.empty()) fail(ErrorCode::DimMismatch, "no rows");
  const FieldSpec& field = rows.front().field();
  const std::size_t cols = rows.front().dim();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!(rows[i].field() == field)) fail(ErrorCode::FieldMismatch, "row field");
    if (rows[i].dim() != cols) fail(ErrorCode::DimMismatch, "row length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(field_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(r, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  Matrix s(field_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) fail(ErrorCode::FieldMismatch, "matrix product");
  if (a.cols_ != b.rows_) fail(ErrorCode::DimMismatch, "matrix product shapes");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (!(a.field_ == v.field())) fail(ErrorCode::FieldMismatch, "matrix-vector product");
  if (a.cols_ != v.dim()) fail(ErrorCode::DimMismatch, "matrix-vector product shapes");
  Vector out(a.field_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

Matrix operator*(const Scalar& a, Matrix m) {
  for (Scalar& x : m.data_) x = a * x;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

void require_square(const Matrix& m) {
  if (!m.is_square()) {
    fail(ErrorCode::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    }
    const Scalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Scalar factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Scalar det(const Matrix& m) {
  require_square(m);
  const FieldSpec& field = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return Scalar::one(field);
  Matrix a = m;
  bool negate = false;
  if (field.is_rationals()) {
    // Bareiss: every intermediate is a minor of the input, and each division is exact.
    Scalar prev = Scalar::one(field);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k).is_zero()) {
        std::size_t sel = k + 1;
        while (sel < n && a(sel, k).is_zero()) ++sel;
        if (sel == n) return Scalar::zero(field);
        for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(sel, j));
        negate = !negate;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
      }
      prev = a(k, k);
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
  }
  Scalar result = Scalar::one(field);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t sel = k;
    while (sel < n && a(sel, k).is_zero()) ++sel;
    if (sel == n) return Scalar::zero(field);
    if (sel != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(sel, j));
      negate = !negate;
    }
    result *= a(k, k);
    const Scalar inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Scalar factor = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return negate ? -result : result;
}

Scalar permanent(const Matrix& m) {
  require_square(m);
  const FieldSpec& field = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return Scalar::one(field);
  if (n > 20) fail(ErrorCode::DimensionTooLarge, "permanent of order > 20");
  // perm(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij
  Scalar total = Scalar::zero(field);
  const std::uint32_t subsets = 1u << n;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    Scalar product = Scalar::one(field);
    for (std::size_t i = 0; i < n && !product.is_zero(); ++i) {
      Scalar row_sum = Scalar::zero(field);
      for (std::size_t j = 0; j < n; ++j) {
        if (s & (1u << j)) row_sum += m(i, j);
      }
      product *= row_sum;
    }
    const bool odd = ((n - static_cast<std::size_t>(__builtin_popcount(s))) & 1u) != 0;
    if (odd) {
      total -= product;
    } else {
      total += product;
    }
  }
  return total;
}

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  return rref(a).size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Matrix a = m;
  const std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.field(), m.cols());
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  const std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) fail(ErrorCode::SingularMatrix);
  Matrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

Vector solve(const Matrix& a, const Vector& b) {
  require_square(a);
  if (a.rows() != b.dim()) fail(ErrorCode::DimMismatch, "right-hand side length");
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) fail(ErrorCode::SingularMatrix);
  Vector x(a.field(), n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

Vector cramer_solve(const Matrix& a, const Vector& b) {
  require_square(a);
  if (a.rows() != b.dim()) fail(ErrorCode::DimMismatch, "right-hand side length");
  const Scalar d = det(a);
  if (d.is_zero()) fail(ErrorCode::SingularMatrix);
  const Scalar inv = d.inverse();
  Vector x(a.field(), a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    Matrix replaced = a;
    for (std::size_t r = 0; r < a.rows(); ++r) replaced(r, i) = b[r];
    x[i] = det(replaced) * inv;
  }
  return x;
}

Matrix cofactor_inverse(const Matrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  const Scalar d = det(a);
  if (d.is_zero()) fail(ErrorCode::SingularMatrix);
  const Scalar inv = d.inverse();
  Matrix out(a.field(), n, n);
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // (A^{-1})_{ij} = (-1)^{i+j} det(A without row j, column i) / det A
      rows.clear();
      cols.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      Scalar cofactor = det(a.submatrix(rows, cols));
      if ((i + j) % 2 == 1) cofactor = -cofactor;
      out(i, j) = cofactor * inv;
    }
  }
  return out;
}

}  // namespace exalg
