#include "exalg/metric.hpp"

#include "exalg/duality.hpp"
#include "exalg/exterior.hpp"

namespace exalg {

GramForm::GramForm(Matrix m, Matrix inv, Scalar det) : m_(std::move(m)), inv_(std::move(inv)), det_(std::move(det)) {}

GramForm GramForm::validate(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::NotSquare);
  if (!(m == m.transpose())) fail(ErrorCode::NotSymmetric);
  Scalar g = exalg::det(m);
  if (g.is_zero()) fail(ErrorCode::Degenerate, "Gram determinant is 0");
  return GramForm(m, exalg::inverse(m), std::move(g));
}

GramForm standard_form(const FieldSpec& field, const std::vector<int>& signs) {
  if (signs.empty()) fail(ErrorCode::BadSign, "empty sign list");
  Matrix m(field, signs.size(), signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) fail(ErrorCode::BadSign, std::to_string(signs[i]));
    m(i, i) = Scalar(field, signs[i]);
  }
  return GramForm::validate(m);
}

Scalar sp(const GramForm& g, const Vector& v, const Vector& w) {
  if (v.dim() != g.dim() || w.dim() != g.dim()) fail(ErrorCode::DimMismatch, "vector and form dimensions differ");
  const Vector gw = g.matrix() * w;
  Scalar total = Scalar::zero(g.field());
  for (std::size_t i = 0; i < v.dim(); ++i) total += v[i] * gw[i];
  return total;
}

std::vector<Vector> reciprocal(const GramForm& g) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < g.dim(); ++j) out.push_back(g.inverse().column(j));
  return out;
}

Scalar related_dual_sp(const GramForm& g, const Multivector& phi, const Multivector& psi) {
  if (!phi.is_dual() || !psi.is_dual()) fail(ErrorCode::NotDual, "related product takes dual elements");
  if (phi.dim() != g.dim() || psi.dim() != g.dim()) fail(ErrorCode::DimMismatch, "element and form dimensions differ");
  const Vector a = phi.to_vector();
  const Vector b = g.inverse() * psi.to_vector();
  Scalar total = Scalar::zero(g.field());
  for (std::size_t i = 0; i < a.dim(); ++i) total += a[i] * b[i];
  return total;
}

namespace {

std::vector<std::size_t> zero_based(MultiIndex m) {
  std::vector<std::size_t> out;
  for (std::size_t i : index_list(m)) out.push_back(i - 1);
  return out;
}

Scalar gram_minor(const Matrix& m, MultiIndex rows, MultiIndex cols) {
  if (rows == 0 && cols == 0) return Scalar::one(m.field());
  return det(m.submatrix(zero_based(rows), zero_based(cols)));
}

}  // namespace

Scalar sp_ext(const GramForm& g, const Multivector& r, const Multivector& s) {
  if (r.dim() != g.dim() || s.dim() != g.dim()) fail(ErrorCode::DimMismatch, "element and form dimensions differ");
  if (!r.is_homogeneous() || !s.is_homogeneous()) fail(ErrorCode::GradeMismatch, "sp_ext takes homogeneous elements");
  if (r.grade() && s.grade() && *r.grade() != *s.grade()) fail(ErrorCode::GradeMismatch, "grades differ");
  Scalar total = Scalar::zero(g.field());
  for (const auto& [ri, rc] : r.terms())
    for (const auto& [si, sc] : s.terms()) total += rc * sc * gram_minor(g.matrix(), ri, si);
  return total;
}

Multivector apply_ext_map(const Matrix& m, const Multivector& x, bool dual_out) {
  if (x.dim() != m.cols()) fail(ErrorCode::DimMismatch, "map and element dimensions differ");
  Multivector out(m.field(), m.rows(), dual_out);
  for (const auto& [index, c] : x.terms()) {
    const Multivector blade = Multivector::basis(x.field(), x.dim(), index);
    out += c * ext_power_map(m, static_cast<std::size_t>(index_grade(index)), blade).with_dual(dual_out);
  }
  return out;
}

Multivector hodge(const GramForm& g, const Multivector& m) {
  if (m.dim() != g.dim()) fail(ErrorCode::DimMismatch, "element and form dimensions differ");
  return apply_ext_map(g.inverse(), annihilator_H(m), false);
}

Multivector hodge_inv(const GramForm& g, const Multivector& m) {
  if (m.dim() != g.dim()) fail(ErrorCode::DimMismatch, "element and form dimensions differ");
  if (m.is_dual()) fail(ErrorCode::AlreadyDual);
  return annihilator_H_inv(apply_ext_map(g.matrix(), m, true));
}

Multivector hodge_alt(const GramForm& g, const Multivector& m) {
  if (m.dim() != g.dim()) fail(ErrorCode::DimMismatch, "element and form dimensions differ");
  if (m.is_dual()) fail(ErrorCode::AlreadyDual);
  const std::size_t d = g.dim();
  const MultiIndex top = full_index(d);
  Multivector out(g.field(), d);
  for (std::size_t p = 0; p <= d; ++p) {
    const Multivector part = grade_project(m, p);
    if (part.is_zero()) continue;
    const std::vector<MultiIndex> basis = indices_of_grade(d, d - p);
    // Row K: Σ_J y_J g(e_J, e_K) = [part ∧ e_K].
    Matrix system(g.field(), basis.size(), basis.size());
    Vector rhs(g.field(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      for (std::size_t j = 0; j < basis.size(); ++j) system(k, j) = gram_minor(g.matrix(), basis[j], basis[k]);
      rhs[k] = wedge(part, Multivector::basis(g.field(), d, basis[k])).coeff(top);
    }
    const Vector y = solve(system, rhs);
    for (std::size_t j = 0; j < basis.size(); ++j) out.add_term(basis[j], y[j]);
  }
  return out;
}

ProjFlat orthogonal_flat(const GramForm& g, const ProjFlat& f) {
  Multivector star = hodge(g, f.blade());
  if (!is_blade(star)) fail(ErrorCode::StarNotBlade);
  return ProjFlat(std::move(star));
}

Multivector star_dual(const GramForm& g, const Multivector& dm) {
  if (!dm.is_dual()) fail(ErrorCode::NotDual, "star_dual takes dual elements");
  if (dm.dim() != g.dim()) fail(ErrorCode::DimMismatch, "element and form dimensions differ");
  return annihilator_H(apply_ext_map(g.inverse(), dm, false));
}

Vector cross_product(const GramForm& g, const Vector& u, const Vector& v) {
  if (g.dim() != 3) fail(ErrorCode::WrongDimension, "cross product needs d = 3");
  const Multivector uv = wedge(Multivector::from_vector(u), Multivector::from_vector(v));
  return hodge(g, uv).to_vector();
}

}  // namespace exalg
