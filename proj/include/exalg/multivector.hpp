#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "exalg/field.hpp"
#include "exalg/matrix.hpp"

namespace exalg {

/// Largest supported ambient dimension.
inline constexpr std::size_t kMaxDim = 16;

/// A strictly increasing subset of {1..d}, stored as a bitmask (bit i-1 for index i).
using MultiIndex = std::uint32_t;

inline int index_grade(MultiIndex m) noexcept { return std::popcount(m); }
inline MultiIndex full_index(std::size_t d) noexcept {
  return d >= 32 ? ~MultiIndex{0} : (MultiIndex{1} << d) - 1;
}

/// Grade first, then lexicographic on the sorted index lists.
bool canonical_less(MultiIndex a, MultiIndex b) noexcept;

struct CanonicalOrder {
  bool operator()(MultiIndex a, MultiIndex b) const noexcept { return canonical_less(a, b); }
};

/// Sorted 1-based indices of m.
std::vector<std::size_t> index_list(MultiIndex m);

/// e_a ∧ e_b = wedge_sign(a, b) · e_{a∪b}; 0 when a and b overlap.
int wedge_sign(MultiIndex a, MultiIndex b) noexcept;

/// All multi-indices of the given grade in {1..d}, in canonical order.
std::vector<MultiIndex> indices_of_grade(std::size_t d, std::size_t grade);

/// Normalizes an arbitrary 1-based index tuple. Returns the sorted index and
/// the sign of the sorting permutation, or nullopt when an index repeats.
std::optional<std::pair<MultiIndex, int>> normalize_indices(const std::vector<std::size_t>& tuple,
                                                           std::size_t d);

/// An element of the exterior algebra on F^d, or of its dual when is_dual().
/// Only nonzero coefficients are stored.
class Multivector {
 public:
  using Terms = std::map<MultiIndex, Scalar, CanonicalOrder>;

  Multivector(const FieldSpec& field, std::size_t dim, bool dual = false);

  static Multivector scalar(const FieldSpec& field, std::size_t dim, const Scalar& value);
  static Multivector basis(const FieldSpec& field, std::size_t dim, MultiIndex index, bool dual = false);
  /// The grade-1 element with the vector's coordinates.
  static Multivector from_vector(const Vector& v, bool dual = false);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  bool is_dual() const noexcept { return dual_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Scalar coeff(MultiIndex index) const;
  /// Adds c to the coefficient of index, pruning a resulting zero.
  void add_term(MultiIndex index, const Scalar& c);

  /// True for 0 and for elements with all terms of one grade.
  bool is_homogeneous() const noexcept;
  /// Grade of a nonzero homogeneous element.
  std::optional<std::size_t> grade() const noexcept;

  /// Coordinates of a grade-1 element (or 0); throws WrongGrade otherwise.
  Vector to_vector() const;
  /// Same terms with the dual flag flipped.
  Multivector with_dual(bool dual) const;

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const Scalar& a, Multivector m);
  Multivector operator-() const;

  friend bool operator==(const Multivector& a, const Multivector& b);

 private:
  void require_compatible(const Multivector& other) const;

  FieldSpec field_;
  std::size_t dim_;
  bool dual_;
  Terms terms_;
};

/// The scalar c with a = c·b, if there is one. Requires b ≠ 0.
std::optional<Scalar> proportionality(const Multivector& a, const Multivector& b);
/// a = c·b for some nonzero c; two zeros are not proportional.
bool proportional(const Multivector& a, const Multivector& b);

}  // namespace exalg
