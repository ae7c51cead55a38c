#pragma once

#include <vector>

#include "exalg/matrix.hpp"
#include "exalg/multivector.hpp"
#include "exalg/projective.hpp"

namespace exalg {

/// A nondegenerate symmetric bilinear form, given by its Gram matrix in the
/// working basis. The inverse and the determinant G are computed once.
class GramForm {
 public:
  /// Throws NotSquare, NotSymmetric, Degenerate.
  static GramForm validate(const Matrix& m);

  const Matrix& matrix() const noexcept { return m_; }
  const Matrix& inverse() const noexcept { return inv_; }
  const Scalar& det() const noexcept { return det_; }
  std::size_t dim() const noexcept { return m_.rows(); }
  const FieldSpec& field() const noexcept { return m_.field(); }

 private:
  GramForm(Matrix m, Matrix inv, Scalar det);

  Matrix m_;
  Matrix inv_;
  Scalar det_;
};

inline GramForm gram_validate(const Matrix& m) { return GramForm::validate(m); }

/// diag(η1..ηd) with each η = ±1. Throws BadSign.
GramForm standard_form(const FieldSpec& field, const std::vector<int>& signs);

/// vᵀ g w.
Scalar sp(const GramForm& g, const Vector& v, const Vector& w);

/// x_j^⊥ = Σ_i g^{ij} x_i, the columns of g⁻¹.
std::vector<Vector> reciprocal(const GramForm& g);

/// φᵀ g⁻¹ ψ on grade-1 dual elements.
Scalar related_dual_sp(const GramForm& g, const Multivector& phi, const Multivector& psi);

/// Σ r_I s_J det g[I,J], with g(1,1) = 1. Throws GradeMismatch.
Scalar sp_ext(const GramForm& g, const Multivector& r, const Multivector& s);

/// ⋀g⁻¹ ∘ H, unscaled.
Multivector hodge(const GramForm& g, const Multivector& m);

/// The element ∗m with m ∧ t = g(∗m, t) e{1..d} for every t of the
/// complementary grade, found by solving against the Gram matrix of that grade.
Multivector hodge_alt(const GramForm& g, const Multivector& m);

/// Inverse of hodge: H⁻¹ ∘ ⋀g.
Multivector hodge_inv(const GramForm& g, const Multivector& m);

/// The flat of vectors orthogonal to F.
ProjFlat orthogonal_flat(const GramForm& g, const ProjFlat& f);

/// H ∘ ⋀g⁻¹ on dual elements. Throws NotDual.
Multivector star_dual(const GramForm& g, const Multivector& dm);

/// ∗(u ∧ v) read as a vector. Throws WrongDimension unless d = 3.
Vector cross_product(const GramForm& g, const Vector& u, const Vector& v);

/// ⋀M applied termwise to any element, keeping the dual flag as given.
Multivector apply_ext_map(const Matrix& m, const Multivector& x, bool dual_out);

}  // namespace exalg
