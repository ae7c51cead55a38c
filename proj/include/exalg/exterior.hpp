#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "exalg/matrix.hpp"
#include "exalg/multivector.hpp"

namespace exalg {

/// Progressive (exterior) product. Throws DimMismatch, DualMismatch.
Multivector wedge(const Multivector& a, const Multivector& b);

/// v1 ∧ ... ∧ vp; 0 exactly when the sequence is dependent.
Multivector wedge_vectors(std::span<const Vector> vs, bool dual = false);

Multivector grade_project(const Multivector& m, std::size_t p);

/// The scalar a with ⋀^d f (e_{1..d}) = a · e_{1..d}.
Scalar det_of_map(const Matrix& m);

/// ⋀^p M applied to a grade-p element of F^{cols(M)}.
Multivector ext_power_map(const Matrix& m, std::size_t p, const Multivector& x);

/// Coefficient on e_I is the minor of A on rows I. Throws TooManyColumns.
Multivector plucker_from_matrix(const Matrix& a);

/// Signed coordinates of a homogeneous element at arbitrary index tuples.
class ExtendedCoordView {
 public:
  explicit ExtendedCoordView(const Multivector& source);

  /// P_{j1..jn} for 1-based indices; 0 on repeats.
  Scalar operator()(const std::vector<std::size_t>& tuple) const;

 private:
  const Multivector& source_;
  std::size_t grade_;
};

/// Factors a blade into vectors whose wedge is a nonzero multiple of m.
/// The factors are the files of the extended coordinate array through the
/// first nonzero coordinate. Throws ZeroInput, NotABlade.
std::vector<Vector> factor_blade(const Multivector& m);

/// True for 0, for scalars, and for elements that factor_blade accepts.
bool is_blade(const Multivector& m);

/// The W-component of v in the decomposition v = w + x, w ∈ ⟨W⟩, x ∈ ⟨X⟩.
/// Throws NotComplementary unless W and X together form a basis.
Vector project_along(std::span<const Vector> w, std::span<const Vector> x, const Vector& v);
/// w − x for the same decomposition.
Vector reflect_along(std::span<const Vector> w, std::span<const Vector> x, const Vector& v);

/// Number of degree-p monomials in n variables, C(n+p-1, p).
std::uint64_t sym_basis_count(std::uint64_t n, std::uint64_t p);

}  // namespace exalg
