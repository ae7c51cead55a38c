#include "exalg/harness.hpp"

#include <array>
#include <functional>
#include <optional>
#include <sstream>

#include "exalg/affine.hpp"
#include "exalg/duality.hpp"
#include "exalg/exterior.hpp"
#include "exalg/metric.hpp"
#include "exalg/projective.hpp"
#include "exalg/text.hpp"

namespace exalg {

namespace {

constexpr int kRetryCap = 1000;

template <typename Draw>
auto draw_until_valid(Draw draw, const char* what) -> typename std::invoke_result_t<Draw>::value_type {
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    auto config = draw();
    if (config) return std::move(*config);
  }
  fail(ErrorCode::GeneratorExhausted, what);
}

TrialOutcome verdict(bool ok, const std::string& detail) { return {ok, ok ? std::string() : detail}; }

long pick(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// ---- projective plane helpers ----

bool on_flat(const Vector& v, const Multivector& blade) {
  return wedge(Multivector::from_vector(v), blade).is_zero();
}

ProjFlat line_through(const Vector& p, const Vector& q) {
  return join(ProjPoint(p).flat(), ProjPoint(q).flat());
}

Vector point_on(const Vector& u, const Vector& w, const FieldSpec& field, Rng& rng) {
  return random_scalar(field, rng) * u + random_scalar(field, rng) * w;
}

bool distinct_points(std::initializer_list<const Vector*> pts) {
  std::vector<ProjPoint> seen;
  for (const Vector* p : pts) {
    if (p->is_zero()) return false;
    ProjPoint q(*p);
    for (const ProjPoint& s : seen) {
      if (s == q) return false;
    }
    seen.push_back(q);
  }
  return true;
}

std::string describe(std::initializer_list<const Vector*> pts) {
  std::string out;
  for (const Vector* p : pts) out += to_string(*p) + " ";
  return out;
}

// ---- affine plane helpers ----

bool on_line(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r) {
  const std::array<AffinePoint, 3> pts{p, q, r};
  return collinear(pts);
}

std::optional<AffinePoint> intersect(const AffinePoint& p1, const AffinePoint& q1, const AffinePoint& p2,
                                     const AffinePoint& q2) {
  if (p1 == q1 || p2 == q2) return std::nullopt;
  LineIntersection hit = lines_intersect_affine(p1, q1, p2, q2);
  if (hit.kind != LineIntersection::Kind::Point) return std::nullopt;
  return hit.point.front();
}

bool all_distinct(std::initializer_list<const AffinePoint*> pts) {
  for (auto i = pts.begin(); i != pts.end(); ++i)
    for (auto j = std::next(i); j != pts.end(); ++j) {
      if (**i == **j) return false;
    }
  return true;
}

struct Triangle {
  AffinePoint a, b, c;
};

Triangle random_triangle(const FieldSpec& field, Rng& rng) {
  return draw_until_valid(
      [&]() -> std::optional<Triangle> {
        Triangle t{random_vector(field, 2, rng), random_vector(field, 2, rng), random_vector(field, 2, rng)};
        if (on_line(t.a, t.b, t.c)) return std::nullopt;
        return t;
      },
      "triangle");
}

// A point of line pq other than p and q.
AffinePoint interior_of(const AffinePoint& p, const AffinePoint& q, const FieldSpec& field, Rng& rng) {
  return draw_until_valid(
      [&]() -> std::optional<AffinePoint> {
        const Scalar t = random_scalar(field, rng);
        if (t.is_zero() || t.is_one()) return std::nullopt;
        return p + t * (q - p);
      },
      "side point");
}

struct SidePoints {
  AffinePoint a1, b1, c1;
};

bool avoids_vertices(const Triangle& t, const SidePoints& s) {
  for (const AffinePoint* p : {&s.a1, &s.b1, &s.c1}) {
    if (*p == t.a || *p == t.b || *p == t.c) return false;
  }
  return true;
}

SidePoints random_side_points(const Triangle& t, const FieldSpec& field, Rng& rng) {
  return {interior_of(t.b, t.c, field, rng), interior_of(t.c, t.a, field, rng), interior_of(t.a, t.b, field, rng)};
}

}  // namespace

TrialOutcome check_pappus_proj(const FieldSpec& field, Rng& rng) {
  struct Config {
    Vector a, b, c, a1, b1, c1;
  };
  const Config cfg = draw_until_valid(
      [&]() -> std::optional<Config> {
        const Vector u1 = random_vector(field, 3, rng), u2 = random_vector(field, 3, rng);
        const Vector w1 = random_vector(field, 3, rng), w2 = random_vector(field, 3, rng);
        const std::array<Vector, 2> lu{u1, u2}, lw{w1, w2};
        const Multivector l = wedge_vectors(lu), l1 = wedge_vectors(lw);
        if (l.is_zero() || l1.is_zero() || proportional(l, l1)) return std::nullopt;
        Config c{point_on(u1, u2, field, rng), point_on(u1, u2, field, rng), point_on(u1, u2, field, rng),
                 point_on(w1, w2, field, rng), point_on(w1, w2, field, rng), point_on(w1, w2, field, rng)};
        if (!distinct_points({&c.a, &c.b, &c.c}) || !distinct_points({&c.a1, &c.b1, &c.c1})) return std::nullopt;
        for (const Vector* p : {&c.a, &c.b, &c.c}) {
          if (on_flat(*p, l1)) return std::nullopt;
        }
        for (const Vector* p : {&c.a1, &c.b1, &c.c1}) {
          if (on_flat(*p, l)) return std::nullopt;
        }
        return c;
      },
      "Pappus configuration");
  const ProjFlat a2 = meet(line_through(cfg.b, cfg.c1), line_through(cfg.b1, cfg.c));
  const ProjFlat b2 = meet(line_through(cfg.a, cfg.c1), line_through(cfg.a1, cfg.c));
  const ProjFlat c2 = meet(line_through(cfg.a, cfg.b1), line_through(cfg.a1, cfg.b));
  if (a2.grade() != 1 || b2.grade() != 1 || c2.grade() != 1) return {false, "an intersection is not a point"};
  const Vector x = a2.blade().to_vector(), y = b2.blade().to_vector(), z = c2.blade().to_vector();
  const bool ok = collinear_proj(ProjPoint(x), ProjPoint(y), ProjPoint(z)) && distinct_points({&x, &y, &z});
  return verdict(ok, "A'', B'', C'' = " + describe({&x, &y, &z}));
}

TrialOutcome check_pappus_affine(const FieldSpec& field, Rng& rng) {
  struct Config {
    AffinePoint a2, b2, c2;
  };
  const Config cfg = draw_until_valid(
      [&]() -> std::optional<Config> {
        const AffinePoint p = random_vector(field, 2, rng), q = random_vector(field, 2, rng);
        const AffinePoint r = random_vector(field, 2, rng), s = random_vector(field, 2, rng);
        if (p == q || r == s) return std::nullopt;
        if (on_line(p, q, r) && on_line(p, q, s)) return std::nullopt;
        const AffinePoint a = translate(p, random_scalar(field, rng), q, p);
        const AffinePoint b = translate(p, random_scalar(field, rng), q, p);
        const AffinePoint c = translate(p, random_scalar(field, rng), q, p);
        const AffinePoint a1 = translate(r, random_scalar(field, rng), s, r);
        const AffinePoint b1 = translate(r, random_scalar(field, rng), s, r);
        const AffinePoint c1 = translate(r, random_scalar(field, rng), s, r);
        if (!all_distinct({&a, &b, &c}) || !all_distinct({&a1, &b1, &c1})) return std::nullopt;
        for (const AffinePoint* x : {&a, &b, &c}) {
          if (on_line(r, s, *x)) return std::nullopt;
        }
        for (const AffinePoint* x : {&a1, &b1, &c1}) {
          if (on_line(p, q, *x)) return std::nullopt;
        }
        auto a2 = intersect(b, c1, b1, c);
        auto b2 = intersect(a, c1, a1, c);
        auto c2 = intersect(a, b1, a1, b);
        if (!a2 || !b2 || !c2) return std::nullopt;
        return Config{*a2, *b2, *c2};
      },
      "affine Pappus configuration");
  const std::array<AffinePoint, 3> pts{cfg.a2, cfg.b2, cfg.c2};
  const bool ok = collinear(pts) && all_distinct({&cfg.a2, &cfg.b2, &cfg.c2});
  return verdict(ok, "A'', B'', C'' = " + describe({&cfg.a2, &cfg.b2, &cfg.c2}));
}

TrialOutcome check_desargues_proj(const FieldSpec& field, Rng& rng) {
  struct Config {
    Vector a, b, c, a1, b1, c1;
  };
  const Config cfg = draw_until_valid(
      [&]() -> std::optional<Config> {
        const Vector p = random_vector(field, 3, rng);
        const Vector a = random_vector(field, 3, rng), b = random_vector(field, 3, rng), c = random_vector(field, 3, rng);
        auto toward = [&](const Vector& x) {
          return random_nonzero_scalar(field, rng) * p + random_nonzero_scalar(field, rng) * x;
        };
        const Vector a1 = toward(a), b1 = toward(b), c1 = toward(c);
        if (!distinct_points({&p, &a, &b, &c, &a1, &b1, &c1})) return std::nullopt;
        // Distinct lines through P, and two genuine triangles.
        if (line_through(p, a) == line_through(p, b) || line_through(p, b) == line_through(p, c) ||
            line_through(p, c) == line_through(p, a)) {
          return std::nullopt;
        }
        if (collinear_proj(ProjPoint(a), ProjPoint(b), ProjPoint(c)) ||
            collinear_proj(ProjPoint(a1), ProjPoint(b1), ProjPoint(c1))) {
          return std::nullopt;
        }
        return Config{a, b, c, a1, b1, c1};
      },
      "Desargues configuration");
  const ProjFlat c2 = meet(line_through(cfg.a, cfg.b), line_through(cfg.a1, cfg.b1));
  const ProjFlat a2 = meet(line_through(cfg.b, cfg.c), line_through(cfg.b1, cfg.c1));
  const ProjFlat b2 = meet(line_through(cfg.c, cfg.a), line_through(cfg.c1, cfg.a1));
  if (a2.grade() != 1 || b2.grade() != 1 || c2.grade() != 1) return {false, "an intersection is not a point"};
  const Vector x = a2.blade().to_vector(), y = b2.blade().to_vector(), z = c2.blade().to_vector();
  const bool ok = collinear_proj(ProjPoint(x), ProjPoint(y), ProjPoint(z)) && distinct_points({&x, &y, &z});
  return verdict(ok, "A'', B'', C'' = " + describe({&x, &y, &z}));
}

TrialOutcome check_desargues_affine(const FieldSpec& field, Rng& rng) {
  struct Config {
    AffinePoint a2, b2, c2;
  };
  const Config cfg = draw_until_valid(
      [&]() -> std::optional<Config> {
        const AffinePoint p = random_vector(field, 2, rng);
        const AffinePoint a = random_vector(field, 2, rng), b = random_vector(field, 2, rng), c = random_vector(field, 2, rng);
        const AffinePoint a1 = interior_of(p, a, field, rng);
        const AffinePoint b1 = interior_of(p, b, field, rng);
        const AffinePoint c1 = interior_of(p, c, field, rng);
        if (!all_distinct({&p, &a, &b, &c, &a1, &b1, &c1})) return std::nullopt;
        if (on_line(p, a, b) || on_line(p, b, c) || on_line(p, c, a)) return std::nullopt;
        auto c2 = intersect(a, b, a1, b1);
        auto a2 = intersect(b, c, b1, c1);
        auto b2 = intersect(c, a, c1, a1);
        if (!a2 || !b2 || !c2) return std::nullopt;
        return Config{*a2, *b2, *c2};
      },
      "affine Desargues configuration");
  const std::array<AffinePoint, 3> pts{cfg.a2, cfg.b2, cfg.c2};
  return verdict(collinear(pts), "A'', B'', C'' = " + describe({&cfg.a2, &cfg.b2, &cfg.c2}));
}

TrialOutcome check_menelaus(const FieldSpec& field, Rng& rng) {
  if (field.characteristic() == 2) fail(ErrorCode::PreconditionViolated, "Menelaus needs 1 + 1 ≠ 0");
  const bool transversal = pick(rng, 0, 1) == 0;
  struct Config {
    Triangle t;
    SidePoints s;
  };
  const Config cfg = draw_until_valid(
      [&]() -> std::optional<Config> {
        const Triangle t = random_triangle(field, rng);
        if (!transversal) return Config{t, random_side_points(t, field, rng)};
        const AffinePoint p = random_vector(field, 2, rng), q = random_vector(field, 2, rng);
        auto a1 = intersect(t.b, t.c, p, q);
        auto b1 = intersect(t.c, t.a, p, q);
        auto c1 = intersect(t.a, t.b, p, q);
        if (!a1 || !b1 || !c1) return std::nullopt;
        SidePoints s{*a1, *b1, *c1};
        if (!avoids_vertices(t, s)) return std::nullopt;
        return Config{t, s};
      },
      "Menelaus configuration");
  const Scalar product = menelaus_product(cfg.t.a, cfg.t.b, cfg.t.c, cfg.s.a1, cfg.s.b1, cfg.s.c1);
  const std::array<AffinePoint, 3> feet{cfg.s.a1, cfg.s.b1, cfg.s.c1};
  const bool is_collinear = collinear(feet);
  const bool ok = (product == Scalar(field, -1)) == is_collinear && (!transversal || is_collinear);
  return verdict(ok, "product " + product.to_string() + ", collinear " + (is_collinear ? "yes" : "no"));
}

TrialOutcome check_ceva(const FieldSpec& field, Rng& rng) {
  if (field.characteristic() == 2) fail(ErrorCode::PreconditionViolated, "Ceva needs 1 + 1 ≠ 0");
  const long mode = pick(rng, 0, 2);  // 0 concurrent, 1 parallel, 2 arbitrary
  struct Config {
    Triangle t;
    SidePoints s;
  };
  const Config cfg = draw_until_valid(
      [&]() -> std::optional<Config> {
        const Triangle t = random_triangle(field, rng);
        if (mode == 2) return Config{t, random_side_points(t, field, rng)};
        AffinePoint pa = t.a, pb = t.b, pc = t.c;  // second point on each cevian
        if (mode == 0) {
          const AffinePoint p = random_vector(field, 2, rng);
          if (on_line(t.a, t.b, p) || on_line(t.b, t.c, p) || on_line(t.c, t.a, p)) return std::nullopt;
          pa = pb = pc = p;
        } else {
          const Vector u = random_nonzero_vector(field, 2, rng);
          pa = t.a + u;
          pb = t.b + u;
          pc = t.c + u;
        }
        auto a1 = intersect(t.b, t.c, t.a, pa);
        auto b1 = intersect(t.c, t.a, t.b, pb);
        auto c1 = intersect(t.a, t.b, t.c, pc);
        if (!a1 || !b1 || !c1) return std::nullopt;
        SidePoints s{*a1, *b1, *c1};
        if (!avoids_vertices(t, s)) return std::nullopt;
        return Config{t, s};
      },
      "Ceva configuration");
  const Scalar product = ceva_product(cfg.t.a, cfg.t.b, cfg.t.c, cfg.s.a1, cfg.s.b1, cfg.s.c1);
  // Concurrency, with parallel cevians meeting at infinity.
  const ProjFlat la = join(embed_affine(cfg.t.a).flat(), embed_affine(cfg.s.a1).flat());
  const ProjFlat lb = join(embed_affine(cfg.t.b).flat(), embed_affine(cfg.s.b1).flat());
  const ProjFlat lc = join(embed_affine(cfg.t.c).flat(), embed_affine(cfg.s.c1).flat());
  const bool concurrent = incident(meet(la, lb), lc);
  const bool ok = (product.is_one() == concurrent) && (mode == 2 || concurrent);
  return verdict(ok, "product " + product.to_string() + ", concurrent " + (concurrent ? "yes" : "no"));
}

TrialOutcome check_similarity(const FieldSpec& field, Rng& rng) {
  const bool parallel_mode = pick(rng, 0, 1) == 0;
  const SimilarityResult result = draw_until_valid(
      [&]() -> std::optional<SimilarityResult> {
        const Triangle t = random_triangle(field, rng);
        const AffinePoint x = parallel_mode ? t.c + random_nonzero_scalar(field, rng) * (t.b - t.a)
                                            : random_vector(field, 2, rng);
        try {
          return similarity_check(t.a, t.b, t.c, x);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::PreconditionViolated) return std::nullopt;
          throw;
        }
      },
      "similarity configuration");
  const bool ok = result.parallel == result.ratios_equal && (!parallel_mode || result.parallel);
  return verdict(ok, std::string("parallel ") + (result.parallel ? "yes" : "no") + ", ratios equal " +
                         (result.ratios_equal ? "yes" : "no"));
}

TrialOutcome check_hodge_identities(const FieldSpec& field, Rng& rng) {
  const auto d = static_cast<std::size_t>(pick(rng, 2, 5));
  const auto p = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(d)));
  const auto q = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(d)));
  const GramForm g = random_gram(field, d, rng);
  const Multivector r = random_homogeneous(field, d, p, rng);
  const Multivector s = random_homogeneous(field, d, p, rng);
  const Multivector t = random_homogeneous(field, d, q, rng);
  const Scalar big_g = g.det();
  const Multivector star_r = hodge(g, r), star_s = hodge(g, s);
  std::string failed;
  if (!(sp_ext(g, r, s) == big_g * sp_ext(g, star_r, star_s))) failed += " star-iso";
  if (!(wedge(r, star_s) == wedge(s, star_r))) failed += " symmetry";
  const Scalar sign = (p * (d - p)) % 2 == 0 ? Scalar::one(field) : Scalar(field, -1);
  if (!(hodge(g, star_r) == (big_g.inverse() * sign) * r)) failed += " double-star";
  if (!(hodge_alt(g, r) == star_r)) failed += " alternative-definition";
  if (!(hodge_inv(g, wedge(star_s, hodge(g, t))) == regressive(s, t))) failed += " regressive";
  if (!(big_g * hodge(g, wedge(r, star_s)).coeff(0) == sp_ext(g, r, s))) failed += " recovery";
  return verdict(failed.empty(), "d=" + std::to_string(d) + " p=" + std::to_string(p) + ":" + failed);
}

TrialOutcome check_jacobi(const FieldSpec& field, Rng& rng) {
  const auto d = static_cast<std::size_t>(pick(rng, 1, 5));
  const auto n = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(d)));
  const Matrix m = random_invertible_matrix(field, d, rng);
  const auto [lhs, rhs] = jacobi_identity_check(m, n);
  return verdict(lhs == rhs, to_string(m) + " n=" + std::to_string(n));
}

TrialOutcome check_grassmann(const FieldSpec& field, Rng& rng) {
  const auto d = static_cast<std::size_t>(pick(rng, 2, 6));
  std::vector<Vector> shared, xs, ys;
  for (long i = pick(rng, 0, 2); i > 0; --i) shared.push_back(random_nonzero_vector(field, d, rng));
  xs = shared;
  ys = shared;
  for (long i = pick(rng, 1, static_cast<long>(d)); i > 0; --i) xs.push_back(random_nonzero_vector(field, d, rng));
  for (long i = pick(rng, 1, static_cast<long>(d)); i > 0; --i) ys.push_back(random_nonzero_vector(field, d, rng));
  const ProjFlat x = ProjFlat::span(xs);
  const ProjFlat y = ProjFlat::span(ys);
  const ProjFlat sum = join(x, y);
  const ProjFlat cap = meet(x, y);
  // Independent intersection dimension: solutions of Σ a_i x_i = Σ b_j y_j.
  std::vector<Vector> cols = x.basis();
  for (const Vector& v : y.basis()) cols.push_back(-v);
  const std::size_t nullity = kernel_basis(Matrix::from_columns(cols)).size();
  bool inside = true;
  if (!cap.is_null()) {
    for (const Vector& v : cap.basis()) inside = inside && on_flat(v, x.blade()) && on_flat(v, y.blade());
  }
  const bool ok = cap.grade() == nullity && x.grade() + y.grade() == sum.grade() + cap.grade() && inside;
  return verdict(ok, "dims " + std::to_string(x.grade()) + "+" + std::to_string(y.grade()) + " vs " +
                         std::to_string(sum.grade()) + "+" + std::to_string(cap.grade()) + ", kernel " +
                         std::to_string(nullity));
}

TrialOutcome check_regressive_eq(const FieldSpec& field, Rng& rng) {
  const auto d = static_cast<std::size_t>(pick(rng, 4, 5));
  const auto l = static_cast<std::size_t>(pick(rng, 1, static_cast<long>(d)));
  const auto m = static_cast<std::size_t>(pick(rng, std::max<long>(1, static_cast<long>(d - l)), static_cast<long>(d)));
  const std::vector<Vector> us = random_independent_vectors(field, d, l, rng);
  const std::vector<Vector> vs = random_independent_vectors(field, d, m, rng);
  const Multivector expected = regressive(wedge_vectors(us), wedge_vectors(vs));
  const Multivector u_side = regressive_coordfree(us, vs);
  const Multivector v_side = regressive_coordfree_vside(us, vs);
  const bool ok = u_side == expected && v_side == expected;
  return verdict(ok, "expected " + to_string(expected) + ", u-side " + to_string(u_side) + ", v-side " +
                         to_string(v_side));
}

std::string TheoremReport::summary() const {
  std::ostringstream out;
  out << name << " field=" << field << " trials=" << trials << " seed=" << seed << ": " << passed << '/' << trials;
  return out.str();
}

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names{"pappus", "desargues", "menelaus", "ceva", "similarity",
                                              "hodge-identities", "jacobi", "grassmann", "regressive-eq"};
  return names;
}

TheoremReport verify_theorem(std::string_view name, const FieldSpec& field, std::uint64_t trials,
                             std::uint64_t seed) {
  using Check = TrialOutcome (*)(const FieldSpec&, Rng&);
  // Two entries alternate by trial parity.
  std::array<Check, 2> checks{};
  if (name == "pappus") {
    checks = {check_pappus_proj, check_pappus_affine};
  } else if (name == "desargues") {
    checks = {check_desargues_proj, check_desargues_affine};
  } else if (name == "menelaus") {
    checks = {check_menelaus, check_menelaus};
  } else if (name == "ceva") {
    checks = {check_ceva, check_ceva};
  } else if (name == "similarity") {
    checks = {check_similarity, check_similarity};
  } else if (name == "hodge-identities") {
    checks = {check_hodge_identities, check_hodge_identities};
  } else if (name == "jacobi") {
    checks = {check_jacobi, check_jacobi};
  } else if (name == "grassmann") {
    checks = {check_grassmann, check_grassmann};
  } else if (name == "regressive-eq") {
    checks = {check_regressive_eq, check_regressive_eq};
  } else {
    fail(ErrorCode::MalformedInput, "unknown theorem '" + std::string(name) + "'");
  }
  TheoremReport report{std::string(name), field.to_string(), trials, seed, 0, {}};
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng = trial_rng(seed, i);
    TrialOutcome outcome;
    try {
      outcome = checks[i % 2](field, rng);
    } catch (const Error& e) {
      outcome = {false, e.what()};
    }
    if (outcome.ok) {
      ++report.passed;
    } else if (report.failures.size() < 5) {
      report.failures.push_back("trial " + std::to_string(i) + ": " + outcome.detail);
    }
  }
  return report;
}

}  // namespace exalg
