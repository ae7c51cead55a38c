#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "exalg/duality.hpp"
#include "exalg/exterior.hpp"
#include "exalg/harness.hpp"
#include "exalg/projective.hpp"

using namespace exalg;
using namespace testing;

namespace {

ProjPoint point(const FieldSpec& f, std::initializer_list<long> xs) { return ProjPoint(Vector::from_ints(f, xs)); }

ProjFlat flat(std::string_view text, std::size_t dim) { return ProjFlat(mv(text, dim)); }

ProjFlat span_of(const std::vector<Vector>& vs) { return ProjFlat::span(vs); }

ProjPoint line_cross(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d) {
  const ProjFlat m = meet(join(a.flat(), b.flat()), join(c.flat(), d.flat()));
  REQUIRE(m.grade() == 1);
  return ProjPoint(m.blade().to_vector());
}

// A random frame: d+1 points with every d of them independent.
ProjFrame random_frame(const FieldSpec& f, std::size_t d, Rng& rng) {
  for (;;) {
    std::vector<ProjPoint> ps;
    for (std::size_t i = 0; i <= d; ++i) ps.push_back(ProjPoint(random_nonzero_vector(f, d, rng)));
    if (general_position(ps)) return ProjFrame(ps);
  }
}

// Intersection of two subspaces by solving U a = W b.
std::vector<Vector> kernel_intersection(const std::vector<Vector>& u, const std::vector<Vector>& w) {
  std::vector<Vector> cols = u;
  for (const Vector& v : w) cols.push_back(-v);
  const Matrix uw = Matrix::from_columns(cols);
  std::vector<Vector> out;
  for (const Vector& k : kernel_basis(uw)) {
    Vector x(u.front().field(), u.front().dim());
    for (std::size_t i = 0; i < u.size(); ++i) x += k[i] * u[i];
    out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("embedding and dehomogenizing") {
  CHECK(embed_affine(vec(Q, {3, 5})).vector() == vec(Q, {1, 3, 5}));
  CHECK(embed_direction(vec(Q, {1, 2})).vector() == vec(Q, {0, 1, 2}));
  CHECK_ERROR(embed_direction(vec(Q, {0, 0})), ErrorCode::ZeroVector);
  CHECK_ERROR(ProjPoint(vec(Q, {0, 0, 0})), ErrorCode::ZeroVector);
  const auto a = dehomogenize(point(Q, {2, 6, 10}));
  CHECK_FALSE(a.at_infinity);
  CHECK(a.coords == vec(Q, {3, 5}));
  const auto b = dehomogenize(point(Q, {0, 1, 2}));
  CHECK(b.at_infinity);
  CHECK(b.coords == vec(Q, {1, 2}));
  CHECK(dehomogenize(point(Q, {1, 0, 0})).coords == vec(Q, {0, 0}));
  for (const FieldSpec& f : kFields) {
    for_trials(71, 100, [&](Rng& rng) {
      const AffinePoint p = random_vector(f, pick(rng, 1, 4), rng);
      const auto back = dehomogenize(embed_affine(p));
      CHECK_FALSE(back.at_infinity);
      CHECK(back.coords == p);
      const Scalar k = random_nonzero_scalar(f, rng);
      CHECK(ProjPoint(k * embed_affine(p).vector()) == embed_affine(p));
    });
  }
}

TEST_CASE("flats are blades up to scale") {
  CHECK(flat("e{1,2}", 3) == flat("-3*e{1,2}", 3));
  CHECK_FALSE(flat("e{1,2}", 3) == flat("e{1,3}", 3));
  CHECK_ERROR(ProjFlat(mv("e{1,2}+e{3,4}", 4)), ErrorCode::NotABlade);
  CHECK_ERROR(ProjFlat(Multivector(Q, 3)), ErrorCode::ZeroInput);
  CHECK_ERROR(ProjFlat(mv("E{1}", 3)), ErrorCode::AlreadyDual);
  CHECK(flat("e{1,2,3}", 4).pdim() == 2);
  CHECK(ProjFlat(Multivector::scalar(Q, 3, Scalar(Q, 2))).is_null());
  CHECK(ProjFlat(Multivector::scalar(Q, 3, Scalar(Q, 2))).pdim() == -1);
}

TEST_CASE("join examples") {
  const ProjFlat mu = span_of({vec(Q, {1, 1, 0, 0}), vec(Q, {1, 0, 1, 1})});
  const ProjFlat j = join(point(Q, {1, 0, 0, 0}).flat(), mu);
  CHECK(j.blade() == mv("e{1,2,3}+e{1,2,4}", 4));
  const ProjFlat p = point(Q, {1, 2, 3}).flat();
  CHECK(join(p, p) == p);
  const ProjPoint a = point(Q, {1, 0, 2});
  const ProjPoint b = point(Q, {0, 1, 1});
  const ProjFlat line = join(a.flat(), b.flat());
  CHECK(line.grade() == 2);
  CHECK(wedge(line.blade(), a.flat().blade()).is_zero());
  CHECK(wedge(line.blade(), b.flat().blade()).is_zero());
  const std::vector<ProjFlat> many = {a.flat(), b.flat(), a.flat(), line};
  CHECK(join(many) == line);
}

TEST_CASE("meet examples") {
  // The coordinate plane i-bar is spanned by every basis vector but e_i.
  const ProjFlat plane(mv("e{1,3,4}-e{1,2,4}+e{1,2,3}+e{2,3,4}", 4));
  const ProjFlat two_bar(mv("e{1,3,4}", 4));
  const ProjFlat m = meet(plane, two_bar);
  CHECK(m.blade() == mv("-e{1,4}+e{1,3}-e{3,4}", 4));
  const ProjFlat lambda = span_of({vec(Q, {1, 0, 0, 0}), vec(Q, {1, 1, 1, 1})});
  const ProjFlat mu = span_of({vec(Q, {1, 1, 0, 0}), vec(Q, {1, 0, 1, 1})});
  CHECK(meet(lambda, mu).blade() == mv("2*e{1}+e{2}+e{3}+e{4}", 4));
  for_trials(72, 50, [&](Rng& rng) {
    const auto vs = random_independent_vectors(Q, 5, pick(rng, 1, 5), rng);
    const ProjFlat f = span_of(vs);
    CHECK(meet(f, f) == f);
  });
}

TEST_CASE("meet of skew flats is null") {
  const ProjFlat a = span_of({vec(Q, {1, 0, 0, 0}), vec(Q, {0, 1, 0, 0})});
  const ProjFlat b = span_of({vec(Q, {0, 0, 1, 0}), vec(Q, {0, 0, 0, 1})});
  const ProjFlat m = meet(a, b);
  CHECK(m.is_null());
  CHECK(m.grade() == 0);
}

TEST_CASE("incidence") {
  const ProjPoint a = point(Q, {1, 0, 2});
  const ProjPoint b = point(Q, {0, 1, 1});
  const ProjFlat line = join(a.flat(), b.flat());
  CHECK(incident(a.flat(), line));
  CHECK(incident(line, b.flat()));
  CHECK_FALSE(incident(a.flat(), b.flat()));
  CHECK(incident(line, line));
  CHECK(collinear_proj(a, b, a));
  CHECK_FALSE(collinear_proj(point(Q, {1, 0, 0}), point(Q, {0, 1, 0}), point(Q, {0, 0, 1})));
  // Pappus proof triples: (1,1,a), (1,c,0) and the points built from them.
  const long av = 2, cv = 3;
  CHECK(collinear_proj(point(Q, {0, 1 - cv, 1}), point(Q, {1 - cv, 0, -cv * av}), point(Q, {1, av, av})));
  CHECK(collinear_proj(point(Q, {1, 0, 0}), point(Q, {0, 1, 0}), point(Q, {1, cv, 0})));
  CHECK(collinear_proj(point(Q, {1, 1, av}), point(Q, {1, 1, 1}), point(Q, {0, 0, 1})));
}

TEST_CASE("general position") {
  for (std::size_t d = 2; d <= 5; ++d) {
    std::vector<ProjPoint> eps;
    eps.push_back(ProjPoint(Vector(Q, std::vector<Scalar>(d, Scalar::one(Q)))));
    for (std::size_t i = 0; i < d; ++i) eps.push_back(ProjPoint(Vector::unit(Q, d, i)));
    CHECK(general_position(eps));
    std::vector<ProjPoint> repeated = eps;
    repeated.back() = eps[1];
    CHECK_FALSE(general_position(repeated));
  }
  const std::vector<ProjPoint> bad = {point(Q, {1, 1, 0}), point(Q, {1, 0, 0}), point(Q, {0, 1, 0}),
                                      point(Q, {0, 0, 1})};
  CHECK_FALSE(general_position(bad));
  const std::vector<ProjPoint> two = {point(Q, {1, 0, 0}), point(Q, {0, 1, 0})};
  CHECK(general_position(two));
  CHECK_ERROR(ProjFrame(bad), ErrorCode::NotAFrame);
}

TEST_CASE("standardized frames") {
  for (std::size_t d = 2; d <= 5; ++d) {
    std::vector<ProjPoint> eps;
    eps.push_back(ProjPoint(Vector(Q, std::vector<Scalar>(d, Scalar::one(Q)))));
    for (std::size_t i = 0; i < d; ++i) eps.push_back(ProjPoint(Vector::unit(Q, d, i)));
    const auto xs = standardize_frame(ProjFrame(eps));
    REQUIRE(xs.size() == d);
    for (std::size_t i = 0; i < d; ++i) CHECK(xs[i] == Vector::unit(Q, d, i));
  }
  // The Pappus frame B', A, B, C' with its points scaled arbitrarily.
  const ProjFrame pappus({point(Q, {3, 3, 3}), point(Q, {-2, 0, 0}), point(Q, {0, 5, 0}), point(Q, {0, 0, 7})});
  const auto xs = standardize_frame(pappus);
  CHECK(xs[0] == vec(Q, {1, 0, 0}));
  CHECK(xs[1] == vec(Q, {0, 1, 0}));
  CHECK(xs[2] == vec(Q, {0, 0, 1}));
  for (const FieldSpec& f : kFields) {
    for_trials(73, 80, [&](Rng& rng) {
      const std::size_t d = pick(rng, 2, 5);
      const ProjFrame frame = random_frame(f, d, rng);
      const auto std_basis = standardize_frame(frame);
      Vector sum(f, d);
      for (const Vector& x : std_basis) sum += x;
      CHECK(ProjPoint(sum) == frame.points()[0]);
      for (std::size_t i = 0; i < d; ++i) CHECK(ProjPoint(std_basis[i]) == frame.points()[i + 1]);
      CHECK_FALSE(wedge_vectors(std_basis).is_zero());
      std::vector<ProjPoint> rescaled;
      for (const ProjPoint& p : frame.points()) rescaled.push_back(ProjPoint(random_nonzero_scalar(f, rng) * p.vector()));
      CHECK(standardize_frame(ProjFrame(rescaled)) == std_basis);
    });
  }
}

TEST_CASE("projective transforms") {
  const Matrix t = Matrix::from_ints(Q, {{1, 2, 0}, {0, 1, 3}, {1, 0, 1}});
  const Matrix t5 = Matrix::from_ints(Q, {{5, 10, 0}, {0, 5, 15}, {5, 0, 5}});
  CHECK(transforms_equal(ProjTransform(t), ProjTransform(t5)));
  CHECK(ProjTransform(t) == ProjTransform(t5));
  CHECK_FALSE(transforms_equal(ProjTransform(Matrix::identity(Q, 3)),
                               ProjTransform(Matrix::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}))));
  CHECK(ProjTransform(t5).matrix()(0, 0).is_one());
  CHECK_ERROR(ProjTransform(Matrix::from_ints(Q, {{1, 2}, {2, 4}})), ErrorCode::SingularMatrix);
  CHECK_ERROR(ProjTransform(Matrix(Q, 2, 3)), ErrorCode::NotSquare);
  const ProjPoint p = point(Q, {1, 2, 3});
  CHECK(transform_apply(ProjTransform(Matrix::identity(Q, 3)), p) == p);
  CHECK(transform_apply(ProjTransform(Matrix::from_ints(Q, {{4, 0, 0}, {0, 4, 0}, {0, 0, 4}})), p) == p);
  const ProjTransform swap(Matrix::from_ints(Q, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  CHECK(transform_apply(swap, point(Q, {1, 0, 0})) == point(Q, {0, 1, 0}));
  CHECK_ERROR(transform_apply(swap, point(Q, {1, 0})), ErrorCode::DimMismatch);
  for (const FieldSpec& f : kFields) {
    for_trials(74, 60, [&](Rng& rng) {
      const std::size_t d = pick(rng, 2, 4);
      const ProjFrame src = random_frame(f, d, rng);
      const ProjFrame dst = random_frame(f, d, rng);
      const ProjTransform tr = transform_from_frames(src, dst);
      for (std::size_t i = 0; i <= d; ++i) CHECK(transform_apply(tr, src.points()[i]) == dst.points()[i]);
      CHECK(transforms_equal(transform_from_frames(src, src), ProjTransform(Matrix::identity(f, d))));
      std::vector<ProjPoint> rescaled;
      for (const ProjPoint& q : src.points()) rescaled.push_back(ProjPoint(random_nonzero_scalar(f, rng) * q.vector()));
      CHECK(transforms_equal(transform_from_frames(ProjFrame(rescaled), dst), tr));
    });
  }
  Rng rng = trial_rng(75, 0);
  CHECK_ERROR(transform_from_frames(random_frame(Q, 2, rng), random_frame(Q, 3, rng)), ErrorCode::DimMismatch);
}

TEST_CASE("central projection") {
  const ProjFlat center = point(Q, {0, 0, 1}).flat();
  const ProjFlat target = span_of({vec(Q, {1, 0, 0}), vec(Q, {0, 1, 0})});
  CHECK(central_project(center, target, point(Q, {1, 2, 5})).vector() == vec(Q, {1, 2, 0}));
  CHECK(central_project(center, target, point(Q, {3, 1, 0})) == point(Q, {3, 1, 0}));
  CHECK_ERROR(central_project(center, target, point(Q, {0, 0, 4})), ErrorCode::PointInCenter);
  CHECK_ERROR(central_project(point(Q, {1, 0, 0}).flat(), target, point(Q, {1, 2, 5})), ErrorCode::NotComplementary);
  for (const FieldSpec& f : kFields) {
    for_trials(76, 80, [&](Rng& rng) {
      const std::size_t d = pick(rng, 2, 5);
      const std::size_t k = pick(rng, 1, d - 1);
      const auto basis = random_independent_vectors(f, d, d, rng);
      const std::vector<Vector> cs(basis.begin(), basis.begin() + static_cast<long>(k));
      const std::vector<Vector> ts(basis.begin() + static_cast<long>(k), basis.end());
      const ProjFlat c = span_of(cs);
      const ProjFlat t = span_of(ts);
      const ProjPoint p(random_nonzero_vector(f, d, rng));
      if (incident(p.flat(), c)) {
        CHECK_ERROR(central_project(c, t, p), ErrorCode::PointInCenter);
        return;
      }
      const ProjPoint image = central_project(c, t, p);
      const ProjFlat via_meet = meet(join(c, p.flat()), t);
      REQUIRE(via_meet.grade() == 1);
      CHECK(image == ProjPoint(via_meet.blade().to_vector()));
      CHECK(incident(image.flat(), t));
      CHECK(central_project(c, t, image) == image);
    });
  }
}

TEST_CASE("Grassmann's relation against kernel intersections") {
  for (const FieldSpec& f : {Q, F5, F101}) {
    for_trials(77, 100, [&](Rng& rng) {
      const std::size_t d = pick(rng, 2, 6);
      // Shared vectors force intersections of varying dimension.
      const std::size_t shared = pick(rng, 0, d - 1);
      const auto common = random_independent_vectors(f, d, shared, rng);
      std::vector<Vector> xs = common, ys = common;
      for (std::size_t i = 0, n = pick(rng, 0, d - shared); i < n; ++i) xs.push_back(random_nonzero_vector(f, d, rng));
      for (std::size_t i = 0, n = pick(rng, 0, d - shared); i < n; ++i) ys.push_back(random_nonzero_vector(f, d, rng));
      if (xs.empty() || ys.empty()) return;
      const ProjFlat x = span_of(xs);
      const ProjFlat y = span_of(ys);
      if (x.is_null() || y.is_null()) return;
      const ProjFlat sum = join(x, y);
      const ProjFlat cap = meet(x, y);
      CHECK(x.grade() + y.grade() == sum.grade() + cap.grade());
      const auto inter = kernel_intersection(x.basis(), y.basis());
      CHECK(cap.grade() == inter.size());
      if (!inter.empty()) CHECK(cap == span_of(inter));
      const std::vector<Vector> both = [&] {
        std::vector<Vector> v = x.basis();
        for (const Vector& w : y.basis()) v.push_back(w);
        return v;
      }();
      CHECK(sum.grade() == rank(Matrix::from_columns(both)));
    });
  }
}

TEST_CASE("join and meet duality") {
  for (const FieldSpec& f : {Q, F101}) {
    for_trials(78, 100, [&](Rng& rng) {
      const std::size_t d = pick(rng, 2, 5);
      const ProjFlat a = span_of(random_independent_vectors(f, d, pick(rng, 1, d), rng));
      const ProjFlat b = span_of(random_independent_vectors(f, d, pick(rng, 1, d), rng));
      const Multivector ha_hb = wedge(annihilator_H(a.blade()), annihilator_H(b.blade()));
      const ProjFlat cap = meet(a, b);
      if (!ha_hb.is_zero()) CHECK(proportional(annihilator_H(cap.blade()), ha_hb));
      const Multivector ab = wedge(a.blade(), b.blade());
      CHECK(ab.is_zero() == !cap.is_null());
      if (!ab.is_zero()) CHECK(join(a, b) == ProjFlat(ab));
    });
  }
}

TEST_CASE("Pappus symbolic instance") {
  for_trials(79, 50, [&](Rng& rng) {
    const Scalar a = random_scalar(F101, rng);
    const Scalar c = random_scalar(F101, rng);
    if (a.is_zero() || a.is_one() || c.is_zero() || c.is_one()) return;
    const Scalar one = Scalar::one(F101), zero = Scalar::zero(F101);
    auto pt = [&](Scalar x, Scalar y, Scalar z) { return ProjPoint(Vector(F101, {x, y, z})); };
    const ProjPoint A = pt(one, zero, zero), B = pt(zero, one, zero), C = pt(one, c, zero);
    const ProjPoint A1 = pt(one, one, a), B1 = pt(one, one, one), C1 = pt(zero, zero, one);
    const ProjPoint A2 = line_cross(B, C1, B1, C);
    const ProjPoint B2 = line_cross(A, C1, A1, C);
    const ProjPoint C2 = line_cross(A, B1, A1, B);
    const Vector a2(F101, {zero, one - c, one});
    const Vector b2(F101, {one - c, zero, -(c * a)});
    const Vector c2(F101, {one, a, a});
    CHECK(A2 == ProjPoint(a2));
    CHECK(B2 == ProjPoint(b2));
    CHECK(C2 == ProjPoint(c2));
    CHECK((a * a2 + b2 + (c - one) * c2).is_zero());
    CHECK(collinear_proj(A2, B2, C2));
  });
}

TEST_CASE("Desargues with an intersection at infinity") {
  // Perspective from the origin; AB and A'B' are parallel.
  const ProjPoint A = embed_affine(vec(Q, {1, 0})), B = embed_affine(vec(Q, {0, 1})), C = embed_affine(vec(Q, {1, 1}));
  const ProjPoint A1 = embed_affine(vec(Q, {2, 0})), B1 = embed_affine(vec(Q, {0, 2})), C1 = embed_affine(vec(Q, {3, 3}));
  const ProjPoint A2 = line_cross(B, C, B1, C1);
  const ProjPoint B2 = line_cross(A, C, A1, C1);
  const ProjPoint C2 = line_cross(A, B, A1, B1);
  const auto c2 = dehomogenize(C2);
  CHECK(c2.at_infinity);
  CHECK(parallel_vectors(c2.coords, vec(Q, {1, -1})));
  CHECK(dehomogenize(A2).coords == vec(Q, {-3, 1}));
  CHECK(dehomogenize(B2).coords == vec(Q, {1, -3}));
  CHECK(collinear_proj(A2, B2, C2));
  CHECK(parallel_vectors(dehomogenize(B2).coords - dehomogenize(A2).coords, c2.coords));
}

TEST_CASE("projective theorems over several fields") {
  for (const FieldSpec& f : {Q, F5, F101}) {
    CAPTURE(f.to_string());
    for (const char* name : {"pappus", "desargues", "grassmann", "regressive-eq"}) {
      const TheoremReport report = verify_theorem(name, f, 200, 11);
      CHECK_MESSAGE(report.ok(), report.summary());
    }
  }
}
