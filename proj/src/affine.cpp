#include "exalg/affine.hpp"

#include <array>

namespace exalg {

namespace {

void require_same_dim(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) {
    fail(ErrorCode::DimMismatch, std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

std::size_t rank_of_columns(std::span<const Vector> columns) {
  if (columns.empty()) return 0;
  return rank(Matrix::from_columns(columns));
}

bool on_line(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r) {
  const std::array<AffinePoint, 3> pts{p, q, r};
  return collinear(pts);
}

void precondition(bool ok, const std::string& clause) {
  if (!ok) fail(ErrorCode::PreconditionViolated, clause);
}

Scalar side_ratio_product(const AffinePoint& a, const AffinePoint& b, const AffinePoint& c,
                          const AffinePoint& a1, const AffinePoint& b1, const AffinePoint& c1) {
  for (const AffinePoint* p : {&b, &c, &a1, &b1, &c1}) require_same_dim(a, *p);
  precondition(!on_line(a, b, c), "A, B, C are collinear");
  precondition(on_line(b, c, a1), "A' is not on BC");
  precondition(on_line(c, a, b1), "B' is not on CA");
  precondition(on_line(a, b, c1), "C' is not on AB");
  for (const AffinePoint* p : {&a1, &b1, &c1}) {
    precondition(!(*p == a) && !(*p == b) && !(*p == c), "a side point coincides with a vertex");
  }
  return vector_ratio(a1 - b, c - a1) * vector_ratio(b1 - c, a - b1) * vector_ratio(c1 - a, b - c1);
}

}  // namespace

AffinePoint barycenter(std::span<const WeightedPoint> terms) {
  if (terms.empty()) fail(ErrorCode::ZeroWeight, "no weighted points");
  const AffinePoint& first = terms.front().point;
  Scalar total = Scalar::zero(first.field());
  AffinePoint sum(first.field(), first.dim());
  for (const WeightedPoint& t : terms) {
    require_same_dim(first, t.point);
    total += t.weight;
    sum += t.weight * t.point;
  }
  if (total.is_zero()) fail(ErrorCode::ZeroWeight, "weights sum to 0");
  return total.inverse() * sum;
}

AffinePoint translate(const AffinePoint& v, const Scalar& a, const AffinePoint& x, const AffinePoint& w) {
  require_same_dim(v, x);
  require_same_dim(v, w);
  return v + a * (x - w);
}

bool affine_independent(std::span<const AffinePoint> ps) {
  if (ps.empty()) fail(ErrorCode::TooFewVectors, "no points");
  std::vector<Vector> diffs;
  for (std::size_t i = 1; i < ps.size(); ++i) {
    require_same_dim(ps[0], ps[i]);
    diffs.push_back(ps[i] - ps[0]);
  }
  if (diffs.size() > ps[0].dim()) return false;
  return rank_of_columns(diffs) == diffs.size();
}

bool collinear(std::span<const AffinePoint> ps) {
  if (ps.empty()) return true;
  const FieldSpec& field = ps[0].field();
  std::vector<Vector> lifted;
  for (const AffinePoint& p : ps) {
    require_same_dim(ps[0], p);
    std::vector<Scalar> coords{Scalar::one(field)};
    coords.insert(coords.end(), p.coords().begin(), p.coords().end());
    lifted.emplace_back(field, std::move(coords));
  }
  return rank(Matrix::from_rows(lifted)) <= 2;
}

bool parallel_vectors(const Vector& u, const Vector& v) {
  require_same_dim(u, v);
  const std::array<Vector, 2> cols{u, v};
  return rank_of_columns(cols) <= 1;
}

Scalar vector_ratio(const Vector& u, const Vector& v) {
  require_same_dim(u, v);
  if (v.is_zero()) fail(ErrorCode::ZeroDenominatorVector);
  std::size_t lead = 0;
  while (v[lead].is_zero()) ++lead;
  const Scalar k = u[lead] / v[lead];
  if (!(k * v == u)) fail(ErrorCode::NotProportional);
  return k;
}

Scalar menelaus_product(const AffinePoint& a, const AffinePoint& b, const AffinePoint& c,
                        const AffinePoint& a1, const AffinePoint& b1, const AffinePoint& c1) {
  return side_ratio_product(a, b, c, a1, b1, c1);
}

Scalar ceva_product(const AffinePoint& a, const AffinePoint& b, const AffinePoint& c,
                    const AffinePoint& a1, const AffinePoint& b1, const AffinePoint& c1) {
  return side_ratio_product(a, b, c, a1, b1, c1);
}

LineIntersection lines_intersect_affine(const AffinePoint& p1, const AffinePoint& q1,
                                        const AffinePoint& p2, const AffinePoint& q2) {
  require_same_dim(p1, q1);
  require_same_dim(p1, p2);
  require_same_dim(p1, q2);
  if (p1 == q1 || p2 == q2) fail(ErrorCode::DegenerateLine);
  const Vector u = q1 - p1;
  const Vector v = q2 - p2;
  const Vector offset = p2 - p1;
  if (parallel_vectors(u, v)) {
    return {parallel_vectors(u, offset) ? LineIntersection::Kind::Coincident : LineIntersection::Kind::Parallel, {}};
  }
  // s u − t v − offset = 0 has a one-dimensional solution space when the lines meet.
  const std::array<Vector, 3> cols{u, -v, -offset};
  const std::vector<Vector> kernel = kernel_basis(Matrix::from_columns(cols));
  if (kernel.empty() || kernel[0][2].is_zero()) return {LineIntersection::Kind::Skew, {}};
  const Scalar s = kernel[0][0] / kernel[0][2];
  return {LineIntersection::Kind::Point, {p1 + s * u}};
}

AffinePoint dilation_apply(const AffinePoint& t, const AffinePoint& u, const Scalar& b, const AffinePoint& v) {
  require_same_dim(t, u);
  require_same_dim(t, v);
  return t + b * (v - u);
}

AffinePoint affine_apply(const AffineMapData& alpha, const AffinePoint& v) {
  return alpha.linear * v + alpha.translation;
}

Matrix underlying_linear(const AffineMapData& alpha, const AffinePoint& probe) {
  const std::size_t m = probe.dim();
  const AffinePoint base = affine_apply(alpha, probe);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < m; ++i) {
    cols.push_back(affine_apply(alpha, probe + Vector::unit(probe.field(), m, i)) - base);
  }
  return Matrix::from_columns(cols);
}

SimilarityResult similarity_check(const AffinePoint& a, const AffinePoint& b, const AffinePoint& c,
                                  const AffinePoint& x) {
  for (const AffinePoint* p : {&b, &c, &x}) require_same_dim(a, *p);
  precondition(!on_line(a, b, c), "A, B, C are collinear");
  const std::array<AffinePoint, 4> plane{a, b, c, x};
  precondition(!affine_independent(plane), "X is not in the plane ABC");
  precondition(!on_line(a, b, x), "X is on AB");
  precondition(!on_line(b, c, x), "X is on BC");
  precondition(!on_line(c, a, x), "X is on CA");
  const LineIntersection hit = lines_intersect_affine(b, x, a, c);
  precondition(hit.kind == LineIntersection::Kind::Point, "BX does not meet AC");
  const AffinePoint& w = hit.point.front();
  SimilarityResult out;
  out.parallel = parallel_vectors(x - c, b - a);
  out.ratios_equal = vector_ratio(c - w, a - w) == vector_ratio(x - w, b - w);
  return out;
}

}  // namespace exalg
