#include "exalg/duality.hpp"

#include <numeric>

#include "exalg/exterior.hpp"

namespace exalg {

Multivector annihilator_H(const Multivector& m) {
  if (m.is_dual()) fail(ErrorCode::AlreadyDual, "H applies to primal elements");
  const MultiIndex full = full_index(m.dim());
  Multivector out(m.field(), m.dim(), true);
  for (const auto& [index, c] : m.terms()) {
    const MultiIndex complement = full ^ index;
    out.add_term(complement, wedge_sign(index, complement) > 0 ? c : -c);
  }
  return out;
}

Multivector annihilator_H_inv(const Multivector& dm) {
  if (!dm.is_dual()) fail(ErrorCode::NotDual, "H⁻¹ applies to dual elements");
  const MultiIndex full = full_index(dm.dim());
  Multivector out(dm.field(), dm.dim(), false);
  for (const auto& [index, c] : dm.terms()) {
    const MultiIndex complement = full ^ index;
    out.add_term(complement, wedge_sign(complement, index) > 0 ? c : -c);
  }
  return out;
}

Multivector regressive(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) {
    fail(ErrorCode::DimMismatch, std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
  return annihilator_H_inv(wedge(annihilator_H(a), annihilator_H(b)));
}

Scalar bracket(const Multivector& m) {
  for (const auto& [index, c] : m.terms()) {
    if (static_cast<std::size_t>(index_grade(index)) != m.dim()) {
      fail(ErrorCode::WrongGrade, "bracket needs a grade-" + std::to_string(m.dim()) + " element");
    }
  }
  return m.coeff(full_index(m.dim()));
}

namespace {

struct FactorLists {
  std::size_t d;
  std::size_t n;
};

FactorLists check_factor_lists(std::span<const Vector> us, std::span<const Vector> vs) {
  if (us.empty() || vs.empty()) fail(ErrorCode::TooFewVectors, "both factor lists must be nonempty");
  const std::size_t d = us.front().dim();
  if (us.size() + vs.size() < d) {
    fail(ErrorCode::TooFewVectors, std::to_string(us.size() + vs.size()) + " factors in dimension " + std::to_string(d));
  }
  if (wedge_vectors(us).is_zero()) fail(ErrorCode::DependentFactors, "u factors are dependent");
  if (wedge_vectors(vs).is_zero()) fail(ErrorCode::DependentFactors, "v factors are dependent");
  return {d, us.size() + vs.size() - d};
}

// Wedge of the selected factors in list order; the unit scalar for an empty selection.
Multivector wedge_selected(std::span<const Vector> vs, MultiIndex selection) {
  const Vector& like = vs.front();
  Multivector out = Multivector::scalar(like.field(), like.dim(), Scalar::one(like.field()));
  for (std::size_t k : index_list(selection)) {
    out = wedge(out, Multivector::from_vector(vs[k - 1]));
  }
  return out;
}

}  // namespace

Multivector regressive_coordfree(std::span<const Vector> us, std::span<const Vector> vs) {
  const auto [d, n] = check_factor_lists(us, vs);
  const Multivector beta = wedge_vectors(vs);
  const MultiIndex all = full_index(us.size());
  Multivector out(us.front().field(), d);
  for (MultiIndex selected : indices_of_grade(us.size(), n)) {
    const MultiIndex rest = all ^ selected;
    const Scalar coefficient = bracket(wedge(wedge_selected(us, rest), beta));
    if (coefficient.is_zero()) continue;
    const Scalar signed_coefficient = wedge_sign(rest, selected) > 0 ? coefficient : -coefficient;
    out += signed_coefficient * wedge_selected(us, selected);
  }
  return out;
}

Multivector regressive_coordfree_vside(std::span<const Vector> us, std::span<const Vector> vs) {
  const auto [d, n] = check_factor_lists(us, vs);
  const Multivector alpha = wedge_vectors(us);
  const MultiIndex all = full_index(vs.size());
  Multivector out(us.front().field(), d);
  for (MultiIndex selected : indices_of_grade(vs.size(), n)) {
    const MultiIndex rest = all ^ selected;
    const Scalar coefficient = bracket(wedge(alpha, wedge_selected(vs, rest)));
    if (coefficient.is_zero()) continue;
    const Scalar signed_coefficient = wedge_sign(selected, rest) > 0 ? coefficient : -coefficient;
    out += signed_coefficient * wedge_selected(vs, selected);
  }
  return out;
}

std::vector<Multivector> annihilator_subspace(const FieldSpec& field, std::size_t dim,
                                              std::span<const Vector> w) {
  std::vector<Multivector> out;
  if (w.empty()) {
    for (std::size_t i = 0; i < dim; ++i) out.push_back(Multivector::from_vector(Vector::unit(field, dim, i), true));
    return out;
  }
  for (const Vector& v : w) {
    if (v.dim() != dim) fail(ErrorCode::DimMismatch, "generator of the wrong dimension");
  }
  if (wedge_vectors(w).is_zero()) fail(ErrorCode::DependentInput, "generators are dependent");
  for (const Vector& k : kernel_basis(Matrix::from_rows(w))) out.push_back(Multivector::from_vector(k, true));
  return out;
}

Scalar evaluate(const Multivector& phi, const Vector& v) {
  if (!phi.is_dual()) fail(ErrorCode::NotDual, "functional must be a dual element");
  if (phi.dim() != v.dim()) fail(ErrorCode::DimMismatch, "functional and vector dimensions differ");
  const Vector coords = phi.to_vector();
  Scalar total = Scalar::zero(v.field());
  for (std::size_t i = 0; i < v.dim(); ++i) total += coords[i] * v[i];
  return total;
}

Scalar eval_dual_blade(std::span<const Multivector> phis, std::span<const Vector> vs) {
  if (phis.size() != vs.size()) {
    fail(ErrorCode::LengthMismatch, std::to_string(phis.size()) + " functionals, " + std::to_string(vs.size()) + " vectors");
  }
  if (phis.empty()) fail(ErrorCode::TooFewVectors, "empty pairing");
  Matrix pairing(vs.front().field(), phis.size(), vs.size());
  for (std::size_t i = 0; i < phis.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) pairing(i, j) = evaluate(phis[i], vs[j]);
  return det(pairing);
}

Matrix dual_map(const Matrix& m) { return m.transpose(); }

Matrix contragredient(const Matrix& m) { return inverse(m).transpose(); }

std::pair<Scalar, Scalar> jacobi_identity_check(const Matrix& m, std::size_t n) {
  if (!m.is_square()) fail(ErrorCode::NotSquare);
  const std::size_t d = m.rows();
  if (n > d) fail(ErrorCode::DimMismatch, "block size exceeds the matrix");
  const Matrix inv = inverse(m);
  std::vector<std::size_t> lead(n);
  std::iota(lead.begin(), lead.end(), std::size_t{0});
  std::vector<std::size_t> trail(d - n);
  std::iota(trail.begin(), trail.end(), n);
  return {det(m.submatrix(lead, lead)), det(m) * det(inv.submatrix(trail, trail))};
}

}  // namespace exalg
