#include "exalg/exterior.hpp"

#include <gmpxx.h>

namespace exalg {

Multivector wedge(const Multivector& a, const Multivector& b) {
  if (!(a.field() == b.field())) fail(ErrorCode::FieldMismatch, "wedge operands");
  if (a.dim() != b.dim()) {
    fail(ErrorCode::DimMismatch, std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
  if (a.is_dual() != b.is_dual()) fail(ErrorCode::DualMismatch, "wedge of primal and dual elements");
  Multivector out(a.field(), a.dim(), a.is_dual());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      const int sign = wedge_sign(ia, ib);
      if (sign == 0) continue;
      const Scalar c = ca * cb;
      out.add_term(ia | ib, sign > 0 ? c : -c);
    }
  }
  return out;
}

Multivector wedge_vectors(std::span<const Vector> vs, bool dual) {
  if (vs.empty()) fail(ErrorCode::TooFewVectors, "empty vector list");
  Multivector out = Multivector::from_vector(vs.front(), dual);
  for (std::size_t i = 1; i < vs.size() && !out.is_zero(); ++i) {
    out = wedge(out, Multivector::from_vector(vs[i], dual));
  }
  return out;
}

Multivector grade_project(const Multivector& m, std::size_t p) {
  Multivector out(m.field(), m.dim(), m.is_dual());
  for (const auto& [index, c] : m.terms()) {
    if (static_cast<std::size_t>(index_grade(index)) == p) out.add_term(index, c);
  }
  return out;
}

namespace {

// ⋀M on one basis blade: the wedge of the selected columns.
Multivector map_blade(const Matrix& m, MultiIndex index) {
  Multivector out = Multivector::scalar(m.field(), m.rows(), Scalar::one(m.field()));
  for (std::size_t i : index_list(index)) {
    out = wedge(out, Multivector::from_vector(m.column(i - 1)));
    if (out.is_zero()) break;
  }
  return out;
}

}  // namespace

Multivector ext_power_map(const Matrix& m, std::size_t p, const Multivector& x) {
  if (x.dim() != m.cols()) {
    fail(ErrorCode::DimMismatch, "map expects dimension " + std::to_string(m.cols()));
  }
  if (!x.is_zero() && x.grade() != p) fail(ErrorCode::GradeMismatch, "expected grade " + std::to_string(p));
  Multivector out(m.field(), m.rows(), x.is_dual());
  for (const auto& [index, c] : x.terms()) {
    out += c * map_blade(m, index).with_dual(x.is_dual());
  }
  return out;
}

Scalar det_of_map(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::NotSquare);
  const std::size_t d = m.rows();
  const Multivector top = Multivector::basis(m.field(), d, full_index(d));
  return ext_power_map(m, d, top).coeff(full_index(d));
}

Multivector plucker_from_matrix(const Matrix& a) {
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  if (n > d) fail(ErrorCode::TooManyColumns, std::to_string(n) + " columns in dimension " + std::to_string(d));
  Multivector out(a.field(), d);
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  for (MultiIndex rows_index : indices_of_grade(d, n)) {
    std::vector<std::size_t> rows;
    for (std::size_t i : index_list(rows_index)) rows.push_back(i - 1);
    out.add_term(rows_index, det(a.submatrix(rows, cols)));
  }
  return out;
}

ExtendedCoordView::ExtendedCoordView(const Multivector& source) : source_(source), grade_(0) {
  if (!source.is_homogeneous()) fail(ErrorCode::GradeMismatch, "extended coordinates need a homogeneous element");
  grade_ = source.grade().value_or(0);
}

Scalar ExtendedCoordView::operator()(const std::vector<std::size_t>& tuple) const {
  if (!source_.is_zero() && tuple.size() != grade_) {
    fail(ErrorCode::LengthMismatch, "index tuple of length " + std::to_string(tuple.size()));
  }
  auto normalized = normalize_indices(tuple, source_.dim());
  if (!normalized) return Scalar::zero(source_.field());
  const Scalar c = source_.coeff(normalized->first);
  return normalized->second > 0 ? c : -c;
}

std::vector<Vector> factor_blade(const Multivector& m) {
  if (m.is_zero()) fail(ErrorCode::ZeroInput, "0 has no factorization");
  if (!m.is_homogeneous()) fail(ErrorCode::NotABlade, "mixed grades");
  const std::size_t n = *m.grade();
  if (n == 0) return {};
  const std::size_t d = m.dim();
  const ExtendedCoordView coords(m);
  const std::vector<std::size_t> pivot = index_list(m.terms().begin()->first);
  std::vector<Vector> files;
  files.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector file(m.field(), d);
    std::vector<std::size_t> tuple = pivot;
    for (std::size_t i = 1; i <= d; ++i) {
      tuple[j] = i;
      file[i - 1] = coords(tuple);
    }
    files.push_back(std::move(file));
  }
  if (!proportional(wedge_vectors(files, m.is_dual()), m)) {
    fail(ErrorCode::NotABlade, "re-expanded factors are not proportional to the input");
  }
  return files;
}

bool is_blade(const Multivector& m) {
  if (m.is_zero()) return true;
  try {
    factor_blade(m);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotABlade) return false;
    throw;
  }
}

namespace {

// Coordinates of v in the basis W ∪ X.
Vector split_coordinates(std::span<const Vector> w, std::span<const Vector> x, const Vector& v) {
  std::vector<Vector> basis(w.begin(), w.end());
  basis.insert(basis.end(), x.begin(), x.end());
  if (basis.size() != v.dim()) {
    fail(ErrorCode::NotComplementary, std::to_string(basis.size()) + " vectors in dimension " + std::to_string(v.dim()));
  }
  if (wedge_vectors(basis).is_zero()) fail(ErrorCode::NotComplementary, "W and X do not span the space");
  return solve(Matrix::from_columns(basis), v);
}

Vector combine(std::span<const Vector> vs, const Vector& coords, std::size_t offset, const Vector& like) {
  Vector out(like.field(), like.dim());
  for (std::size_t i = 0; i < vs.size(); ++i) out += coords[offset + i] * vs[i];
  return out;
}

}  // namespace

Vector project_along(std::span<const Vector> w, std::span<const Vector> x, const Vector& v) {
  const Vector coords = split_coordinates(w, x, v);
  return combine(w, coords, 0, v);
}

Vector reflect_along(std::span<const Vector> w, std::span<const Vector> x, const Vector& v) {
  const Vector coords = split_coordinates(w, x, v);
  return combine(w, coords, 0, v) - combine(x, coords, w.size(), v);
}

std::uint64_t sym_basis_count(std::uint64_t n, std::uint64_t p) {
  if (n == 0) fail(ErrorCode::DimMismatch, "n must be at least 1");
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n + p - 1), static_cast<unsigned long>(p));
  return result.get_ui();
}

}  // namespace exalg
