#include "exalg/projective.hpp"

#include <algorithm>

#include "exalg/duality.hpp"
#include "exalg/exterior.hpp"

namespace exalg {

namespace {

Multivector validated_blade(Multivector blade) {
  if (blade.is_zero()) fail(ErrorCode::ZeroInput, "a flat needs a nonzero blade");
  if (blade.is_dual()) fail(ErrorCode::AlreadyDual, "flats are primal blades");
  if (!is_blade(blade)) fail(ErrorCode::NotABlade);
  return blade;
}

// Folds the factors of `next` into `running`, skipping those that add nothing.
Multivector fold_into(Multivector running, const Multivector& next) {
  const Multivector product = wedge(running, next);
  if (!product.is_zero()) return product;
  for (const Vector& v : factor_blade(next)) {
    Multivector extended = wedge(running, Multivector::from_vector(v, running.is_dual()));
    if (!extended.is_zero()) running = std::move(extended);
  }
  return running;
}

}  // namespace

ProjFlat::ProjFlat(Multivector blade) : blade_(validated_blade(std::move(blade))), grade_(*blade_.grade()) {}

ProjFlat ProjFlat::span(std::span<const Vector> vs) {
  std::vector<ProjFlat> points;
  for (const Vector& v : vs) {
    if (!v.is_zero()) points.push_back(ProjPoint(v).flat());
  }
  if (points.empty()) fail(ErrorCode::ZeroInput, "span of zero vectors");
  return join(points);
}

std::vector<Vector> ProjFlat::basis() const { return factor_blade(blade_); }

bool operator==(const ProjFlat& a, const ProjFlat& b) {
  return a.dim() == b.dim() && a.grade_ == b.grade_ && proportional(a.blade_, b.blade_);
}

ProjPoint::ProjPoint(Vector v) : v_(std::move(v)) {
  if (v_.is_zero()) fail(ErrorCode::ZeroVector, "the zero vector is not a point");
}

ProjFlat ProjPoint::flat() const { return ProjFlat(Multivector::from_vector(v_)); }

bool operator==(const ProjPoint& a, const ProjPoint& b) {
  return a.dim() == b.dim() && proportional(Multivector::from_vector(a.v_), Multivector::from_vector(b.v_));
}

ProjPoint embed_affine(const AffinePoint& p) {
  std::vector<Scalar> coords{Scalar::one(p.field())};
  coords.insert(coords.end(), p.coords().begin(), p.coords().end());
  return ProjPoint(Vector(p.field(), std::move(coords)));
}

ProjPoint embed_direction(const Vector& v) {
  if (v.is_zero()) fail(ErrorCode::ZeroVector, "a direction must be nonzero");
  std::vector<Scalar> coords{Scalar::zero(v.field())};
  coords.insert(coords.end(), v.coords().begin(), v.coords().end());
  return ProjPoint(Vector(v.field(), std::move(coords)));
}

Dehomogenized dehomogenize(const ProjPoint& p) {
  const Vector& v = p.vector();
  std::vector<Scalar> rest(v.coords().begin() + 1, v.coords().end());
  Vector tail(v.field(), std::move(rest));
  if (v[0].is_zero()) return {true, tail};
  return {false, v[0].inverse() * tail};
}

ProjFlat join(std::span<const ProjFlat> flats) {
  if (flats.empty()) fail(ErrorCode::TooFewVectors, "join of no flats");
  Multivector running = flats.front().blade();
  for (std::size_t i = 1; i < flats.size(); ++i) {
    if (flats[i].dim() != running.dim()) fail(ErrorCode::DimMismatch, "flats of different dimension");
    if (flats[i].is_null()) continue;
    running = fold_into(std::move(running), flats[i].blade());
  }
  return ProjFlat(std::move(running));
}

ProjFlat join(const ProjFlat& a, const ProjFlat& b) {
  const std::vector<ProjFlat> pair{a, b};
  return join(pair);
}

ProjFlat meet(const ProjFlat& a, const ProjFlat& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::DimMismatch, "flats of different dimension");
  return ProjFlat(annihilator_H_inv(fold_into(annihilator_H(a.blade()), annihilator_H(b.blade()))));
}

bool incident(const ProjFlat& a, const ProjFlat& b) {
  return join(a, b).grade() == std::max(a.grade(), b.grade());
}

bool collinear_proj(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  const std::vector<Vector> vs{p.vector(), q.vector(), r.vector()};
  return wedge_vectors(vs).is_zero();
}

bool general_position(std::span<const ProjPoint> points) {
  if (points.empty()) return true;
  const std::size_t d = points.front().dim();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != d) fail(ErrorCode::DimMismatch, "points of different dimension");
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) return false;
    }
  }
  const std::size_t k = std::min(d, points.size());
  if (points.size() > 31) fail(ErrorCode::DimensionTooLarge, "too many points");
  for (MultiIndex subset : indices_of_grade(points.size(), k)) {
    std::vector<Vector> vs;
    for (std::size_t i : index_list(subset)) vs.push_back(points[i - 1].vector());
    if (wedge_vectors(vs).is_zero()) return false;
  }
  return true;
}

ProjFrame::ProjFrame(std::vector<ProjPoint> points) : points_(std::move(points)) {
  if (points_.empty()) fail(ErrorCode::NotAFrame, "no points");
  const std::size_t d = points_.front().dim();
  if (points_.size() != d + 1) {
    fail(ErrorCode::NotAFrame, std::to_string(points_.size()) + " points in dimension " + std::to_string(d));
  }
  if (!general_position(points_)) fail(ErrorCode::NotAFrame, "points are not in general position");
}

std::vector<Vector> standardize_frame(const ProjFrame& frame) {
  const auto& pts = frame.points();
  std::vector<Vector> base;
  for (std::size_t i = 1; i < pts.size(); ++i) base.push_back(pts[i].vector());
  const Vector weights = solve(Matrix::from_columns(base), pts[0].vector());
  std::vector<Vector> out;
  for (std::size_t i = 0; i < base.size(); ++i) out.push_back(weights[i] * base[i]);
  const Vector& first = out.front();
  std::size_t lead = 0;
  while (first[lead].is_zero()) ++lead;
  const Scalar scale = first[lead].inverse();
  for (Vector& v : out) v = scale * v;
  return out;
}

namespace {

Matrix canonical_scale(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) return m(i, j).inverse() * m;
    }
  return m;
}

}  // namespace

ProjTransform::ProjTransform(const Matrix& m) : m_(m.field(), 0, 0) {
  if (!m.is_square()) fail(ErrorCode::NotSquare);
  if (det(m).is_zero()) fail(ErrorCode::SingularMatrix, "projective transforms are invertible");
  m_ = canonical_scale(m);
}

ProjTransform transform_from_frames(const ProjFrame& src, const ProjFrame& dst) {
  if (src.dim() != dst.dim()) fail(ErrorCode::DimMismatch, "frames of different dimension");
  const Matrix x = Matrix::from_columns(standardize_frame(src));
  const Matrix y = Matrix::from_columns(standardize_frame(dst));
  return ProjTransform(y * inverse(x));
}

ProjPoint transform_apply(const ProjTransform& t, const ProjPoint& p) {
  if (t.matrix().cols() != p.dim()) fail(ErrorCode::DimMismatch, "transform and point dimensions differ");
  return ProjPoint(t.matrix() * p.vector());
}

bool transforms_equal(const ProjTransform& s, const ProjTransform& t) {
  if (s.matrix().rows() != t.matrix().rows()) fail(ErrorCode::DimMismatch, "transforms of different dimension");
  return s == t;
}

ProjPoint central_project(const ProjFlat& center, const ProjFlat& target, const ProjPoint& p) {
  if (center.dim() != target.dim() || center.dim() != p.dim()) fail(ErrorCode::DimMismatch);
  if (center.grade() + target.grade() != center.dim() ||
      wedge(center.blade(), target.blade()).is_zero()) {
    fail(ErrorCode::NotComplementary, "center and target do not split the space");
  }
  if (join(center, p.flat()).grade() == center.grade()) fail(ErrorCode::PointInCenter);
  const std::vector<Vector> c = center.is_null() ? std::vector<Vector>{} : center.basis();
  const std::vector<Vector> t = target.is_null() ? std::vector<Vector>{} : target.basis();
  return ProjPoint(project_along(t, c, p.vector()));
}

}  // namespace exalg
