#pragma once

#include <span>
#include <utility>
#include <vector>

#include "exalg/matrix.hpp"

namespace exalg {

/// A point of F^m in affine coordinates.
using AffinePoint = Vector;

struct WeightedPoint {
  Scalar weight;
  AffinePoint point;
};

/// The X with (Σ a_i) X = Σ a_i A_i. Throws ZeroWeight.
AffinePoint barycenter(std::span<const WeightedPoint> terms);

/// v + a (x − w).
AffinePoint translate(const AffinePoint& v, const Scalar& a, const AffinePoint& x, const AffinePoint& w);

/// Whether the differences from the first point are linearly independent.
bool affine_independent(std::span<const AffinePoint> ps);

/// All points on one line: rank of the rows (1, p) is at most 2.
bool collinear(std::span<const AffinePoint> ps);

/// Whether u and v are linearly dependent.
bool parallel_vectors(const Vector& u, const Vector& v);

/// The k with u = k v. Throws ZeroDenominatorVector, NotProportional.
Scalar vector_ratio(const Vector& u, const Vector& v);

/// (BA'/A'C)(CB'/B'A)(AC'/C'B) for A' on BC, B' on CA, C' on AB.
/// Throws PreconditionViolated naming the failed clause.
Scalar menelaus_product(const AffinePoint& a, const AffinePoint& b, const AffinePoint& c,
                        const AffinePoint& a1, const AffinePoint& b1, const AffinePoint& c1);
/// The same triple product, read against concurrency of AA', BB', CC'.
Scalar ceva_product(const AffinePoint& a, const AffinePoint& b, const AffinePoint& c,
                    const AffinePoint& a1, const AffinePoint& b1, const AffinePoint& c1);

struct LineIntersection {
  /// Skew occurs only in dimension 3 and up.
  enum class Kind { Point, Parallel, Coincident, Skew };
  Kind kind;
  std::vector<AffinePoint> point;  // one entry when kind == Point
};

/// Classifies lines P1Q1 and P2Q2. Throws DegenerateLine.
LineIntersection lines_intersect_affine(const AffinePoint& p1, const AffinePoint& q1,
                                        const AffinePoint& p2, const AffinePoint& q2);

/// δ_{t,u;b}(v) = t + b (v − u).
AffinePoint dilation_apply(const AffinePoint& t, const AffinePoint& u, const Scalar& b, const AffinePoint& v);

/// α(v) = linear v + translation.
struct AffineMapData {
  Matrix linear;
  Vector translation;
};

AffinePoint affine_apply(const AffineMapData& alpha, const AffinePoint& v);

/// The linear part, read off as h ↦ α(probe + h) − α(probe).
Matrix underlying_linear(const AffineMapData& alpha, const AffinePoint& probe);

struct SimilarityResult {
  bool parallel;      // CX ∥ AB
  bool ratios_equal;  // WC/WA = WX/WB with W = BX ∩ AC
};

/// Throws PreconditionViolated.
SimilarityResult similarity_check(const AffinePoint& a, const AffinePoint& b, const AffinePoint& c,
                                  const AffinePoint& x);

}  // namespace exalg
