#pragma once

#include <span>
#include <vector>

#include "exalg/affine.hpp"
#include "exalg/matrix.hpp"
#include "exalg/multivector.hpp"

namespace exalg {

/// A subspace of F^d held as a nonzero blade. A nonzero scalar stands for the
/// null flat. Two flats are equal when their blades are proportional.
class ProjFlat {
 public:
  /// Throws ZeroInput, AlreadyDual, NotABlade.
  explicit ProjFlat(Multivector blade);
  /// The flat spanned by the given vectors; dependent vectors are skipped.
  static ProjFlat span(std::span<const Vector> vs);

  const Multivector& blade() const noexcept { return blade_; }
  std::size_t grade() const noexcept { return grade_; }
  std::size_t dim() const noexcept { return blade_.dim(); }
  /// grade − 1; the null flat has pdim −1.
  long pdim() const noexcept { return static_cast<long>(grade_) - 1; }
  bool is_null() const noexcept { return grade_ == 0; }

  /// Vectors spanning the flat.
  std::vector<Vector> basis() const;

  friend bool operator==(const ProjFlat& a, const ProjFlat& b);

 private:
  Multivector blade_;
  std::size_t grade_;
};

/// A point of P(F^d), represented by any nonzero vector on it.
class ProjPoint {
 public:
  /// Throws ZeroVector.
  explicit ProjPoint(Vector v);

  const Vector& vector() const noexcept { return v_; }
  std::size_t dim() const noexcept { return v_.dim(); }
  ProjFlat flat() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b);

 private:
  Vector v_;
};

/// (1, p).
ProjPoint embed_affine(const AffinePoint& p);
/// (0, v). Throws ZeroVector.
ProjPoint embed_direction(const Vector& v);

struct Dehomogenized {
  bool at_infinity;
  Vector coords;  // affine point, or direction when at infinity
};
Dehomogenized dehomogenize(const ProjPoint& p);

/// Blade of the subspace sum. The product of the blades is used when it is
/// nonzero; otherwise factors are folded in one at a time, skipping any
/// factor already in the running span.
ProjFlat join(std::span<const ProjFlat> flats);
ProjFlat join(const ProjFlat& a, const ProjFlat& b);

/// Blade of the intersection: the same fold applied to H(a), H(b) and pulled
/// back through H⁻¹. A scalar result means the intersection is null.
ProjFlat meet(const ProjFlat& a, const ProjFlat& b);

/// One flat contains the other.
bool incident(const ProjFlat& a, const ProjFlat& b);

bool collinear_proj(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

/// Pairwise distinct, and every min(d, n) of them independent.
bool general_position(std::span<const ProjPoint> points);

/// d+1 points in general position: the unit point first, then the base points.
class ProjFrame {
 public:
  /// Throws NotAFrame.
  explicit ProjFrame(std::vector<ProjPoint> points);

  const std::vector<ProjPoint>& points() const noexcept { return points_; }
  std::size_t dim() const noexcept { return points_.front().dim(); }

 private:
  std::vector<ProjPoint> points_;
};

/// Representatives x1..xd of the base points with x0 = x1 + ... + xd on the
/// unit point, scaled so that x1's first nonzero coordinate is 1.
std::vector<Vector> standardize_frame(const ProjFrame& frame);

/// An invertible matrix up to scale, stored with its first nonzero entry
/// (row-major) equal to 1.
class ProjTransform {
 public:
  /// Throws NotSquare, SingularMatrix.
  explicit ProjTransform(const Matrix& m);

  const Matrix& matrix() const noexcept { return m_; }

  friend bool operator==(const ProjTransform& a, const ProjTransform& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
};

/// The transform sending each point of src to the matching point of dst.
ProjTransform transform_from_frames(const ProjFrame& src, const ProjFrame& dst);
ProjPoint transform_apply(const ProjTransform& t, const ProjPoint& p);
bool transforms_equal(const ProjTransform& s, const ProjTransform& t);

/// Projection of p from center onto target. Throws NotComplementary when the
/// two flats do not split the space, PointInCenter when p lies in center.
ProjPoint central_project(const ProjFlat& center, const ProjFlat& target, const ProjPoint& p);

}  // namespace exalg
