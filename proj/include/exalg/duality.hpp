#pragma once

#include <span>
#include <utility>
#include <vector>

#include "exalg/matrix.hpp"
#include "exalg/multivector.hpp"

namespace exalg {

/// H(e_I) = (−1)^ρ E_Ī, where ρ lists I and then its complement Ī.
/// Throws AlreadyDual.
Multivector annihilator_H(const Multivector& m);
/// Two-sided inverse of annihilator_H. Throws NotDual.
Multivector annihilator_H_inv(const Multivector& dm);

/// a ∨ b = H⁻¹(H(a) ∧ H(b)); the unit is e{1..d}.
Multivector regressive(const Multivector& a, const Multivector& b);

/// Coefficient of e{1..d}. Throws WrongGrade for other nonzero grades.
Scalar bracket(const Multivector& m);

/// (u1∧..∧ul) ∨ (v1∧..∧vm) expanded over the u factors:
///   Σ_{|I| = l+m−d} (−1)^{ĪI} [u_Ī ∧ β] u_I.
/// Throws TooFewVectors, DependentFactors.
Multivector regressive_coordfree(std::span<const Vector> us, std::span<const Vector> vs);
/// The same product expanded over the v factors:
///   Σ_{|I| = l+m−d} (−1)^{IĪ} [α ∧ v_Ī] v_I.
Multivector regressive_coordfree_vside(std::span<const Vector> us, std::span<const Vector> vs);

/// Basis of the functionals vanishing on ⟨W⟩, as grade-1 dual elements.
/// Throws DependentInput.
std::vector<Multivector> annihilator_subspace(const FieldSpec& field, std::size_t dim,
                                              std::span<const Vector> w);

/// Applies a grade-1 dual element to a vector.
Scalar evaluate(const Multivector& phi, const Vector& v);

/// det[φ_i(v_j)]. Throws LengthMismatch.
Scalar eval_dual_blade(std::span<const Multivector> phis, std::span<const Vector> vs);

/// Dual-basis matrix of f⊤, i.e. the transpose.
Matrix dual_map(const Matrix& m);
/// (M⁻¹)⊤. Throws SingularMatrix.
Matrix contragredient(const Matrix& m);

/// (det of the leading n×n block of M, det M · det of the trailing
/// (d−n)×(d−n) block of M⁻¹). Throws SingularMatrix.
std::pair<Scalar, Scalar> jacobi_identity_check(const Matrix& m, std::size_t n);

}  // namespace exalg
