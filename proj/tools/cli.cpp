#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "exalg/duality.hpp"
#include "exalg/error.hpp"
#include "exalg/exterior.hpp"
#include "exalg/harness.hpp"
#include "exalg/metric.hpp"
#include "exalg/projective.hpp"
#include "exalg/text.hpp"

namespace exalg::cli {

namespace {

struct Options {
  std::string field = "q";
  std::optional<std::size_t> dim;
  std::string gram;
  std::uint64_t trials = 200;
  std::uint64_t seed = 0;
  bool reflect = false;
  std::vector<std::string> operands;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void expect_operands(const Options& opt, std::size_t lo, std::size_t hi) {
  const std::size_t n = opt.operands.size();
  if (n < lo || n > hi) {
    std::ostringstream msg;
    msg << "expected ";
    if (lo == hi) {
      msg << lo;
    } else if (hi == SIZE_MAX) {
      msg << "at least " << lo;
    } else {
      msg << lo << " to " << hi;
    }
    msg << " operand(s), got " << n;
    throw UsageError(msg.str());
  }
}

bool is_span(std::string_view text) {
  const auto start = text.find_first_not_of(" \t");
  return start != std::string_view::npos && text.substr(start, 4) == "span";
}

bool is_matrix(std::string_view text) {
  const auto start = text.find_first_not_of(" \t");
  if (start == std::string_view::npos || text[start] != '[') return false;
  const auto next = text.find_first_not_of(" \t", start + 1);
  return next != std::string_view::npos && text[next] == '[';
}

// Vector length of a `span{...}` or `[...]` operand, or the largest index of a
// multivector operand.
std::size_t implied_dim(const std::string& text, const FieldSpec& field) {
  if (is_span(text)) {
    auto vs = parse_vector_list(text, field);
    return vs.empty() ? 0 : vs.front().dim();
  }
  return max_index(text);
}

std::size_t resolve_dim(const Options& opt, const FieldSpec& field) {
  if (opt.dim) return *opt.dim;
  std::size_t d = 0;
  for (const auto& text : opt.operands) d = std::max(d, implied_dim(text, field));
  if (d == 0) throw UsageError("cannot infer the dimension; pass --dim");
  return d;
}

ProjFlat parse_flat(const std::string& text, const FieldSpec& field, std::size_t dim) {
  if (is_span(text)) {
    auto vs = parse_vector_list(text, field);
    for (const Vector& v : vs) {
      if (v.dim() != dim) fail(ErrorCode::DimMismatch, "vector length differs from the dimension");
    }
    return ProjFlat::span(vs);
  }
  return ProjFlat(parse_multivector(text, field, dim));
}

GramForm resolve_gram(const Options& opt, const FieldSpec& field, std::size_t dim) {
  if (opt.gram.empty()) return standard_form(field, std::vector<int>(dim, 1));
  GramForm g = parse_gram(opt.gram, field);
  if (g.dim() != dim) fail(ErrorCode::DimMismatch, "Gram form size differs from the dimension");
  return g;
}

// Columns of a matrix operand; `span{...}` lists the columns directly.
Matrix parse_columns(const std::string& text, const FieldSpec& field) {
  if (is_span(text)) {
    auto vs = parse_vector_list(text, field);
    if (vs.empty()) fail(ErrorCode::TooFewVectors, "empty span");
    return Matrix::from_columns(vs);
  }
  return parse_matrix(text, field);
}

int cmd_wedge(const Options& opt, std::ostream& out) {
  expect_operands(opt, 1, SIZE_MAX);
  const FieldSpec field = FieldSpec::parse(opt.field);
  const std::size_t dim = resolve_dim(opt, field);
  Multivector acc = parse_multivector(opt.operands.front(), field, dim);
  for (std::size_t i = 1; i < opt.operands.size(); ++i) {
    acc = wedge(acc, parse_multivector(opt.operands[i], field, dim));
  }
  out << to_string(acc) << '\n';
  return 0;
}

int cmd_meet(const Options& opt, std::ostream& out) {
  expect_operands(opt, 2, 2);
  const FieldSpec field = FieldSpec::parse(opt.field);
  const std::size_t dim = resolve_dim(opt, field);
  const ProjFlat a = parse_flat(opt.operands[0], field, dim);
  const ProjFlat b = parse_flat(opt.operands[1], field, dim);
  out << to_string(meet(a, b).blade()) << '\n';
  return 0;
}

int cmd_join(const Options& opt, std::ostream& out) {
  expect_operands(opt, 1, SIZE_MAX);
  const FieldSpec field = FieldSpec::parse(opt.field);
  const std::size_t dim = resolve_dim(opt, field);
  std::vector<ProjFlat> flats;
  for (const auto& text : opt.operands) flats.push_back(parse_flat(text, field, dim));
  out << to_string(join(flats).blade()) << '\n';
  return 0;
}

int cmd_factor(const Options& opt, std::ostream& out) {
  expect_operands(opt, 1, 1);
  const FieldSpec field = FieldSpec::parse(opt.field);
  const std::size_t dim = resolve_dim(opt, field);
  out << to_string(factor_blade(parse_multivector(opt.operands[0], field, dim))) << '\n';
  return 0;
}

int cmd_hodge(const Options& opt, std::ostream& out) {
  expect_operands(opt, 1, 1);
  const FieldSpec field = FieldSpec::parse(opt.field);
  std::optional<GramForm> given;
  if (!opt.gram.empty()) given = parse_gram(opt.gram, field);
  const std::size_t dim = given && !opt.dim ? given->dim() : resolve_dim(opt, field);
  const Multivector m = parse_multivector(opt.operands[0], field, dim);
  const GramForm g = given ? *given : resolve_gram(opt, field, dim);
  if (g.dim() != dim) fail(ErrorCode::DimMismatch, "Gram form size differs from the dimension");
  out << to_string(m.is_dual() ? star_dual(g, m) : hodge(g, m)) << '\n';
  return 0;
}

int cmd_plucker(const Options& opt, std::ostream& out) {
  expect_operands(opt, 1, 1);
  const FieldSpec field = FieldSpec::parse(opt.field);
  out << to_string(plucker_from_matrix(parse_columns(opt.operands[0], field))) << '\n';
  return 0;
}

int cmd_det(const Options& opt, std::ostream& out) {
  expect_operands(opt, 1, 1);
  const FieldSpec field = FieldSpec::parse(opt.field);
  out << det(parse_matrix(opt.operands[0], field)) << '\n';
  return 0;
}

int cmd_solve(const Options& opt, std::ostream& out) {
  expect_operands(opt, 2, 2);
  const FieldSpec field = FieldSpec::parse(opt.field);
  out << to_string(solve(parse_matrix(opt.operands[0], field), parse_vector(opt.operands[1], field))) << '\n';
  return 0;
}

int cmd_project(const Options& opt, std::ostream& out) {
  expect_operands(opt, 3, 3);
  const FieldSpec field = FieldSpec::parse(opt.field);
  const auto w = parse_vector_list(opt.operands[0], field);
  const auto x = parse_vector_list(opt.operands[1], field);
  const Vector v = parse_vector(opt.operands[2], field);
  out << to_string(opt.reflect ? reflect_along(w, x, v) : project_along(w, x, v)) << '\n';
  return 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  expect_operands(opt, 1, 1);
  const FieldSpec field = FieldSpec::parse(opt.field);
  const TheoremReport report = verify_theorem(opt.operands[0], field, opt.trials, opt.seed);
  out << report.summary() << '\n';
  for (const auto& f : report.failures) out << "  " << f << '\n';
  return report.ok() ? 0 : 1;
}

int cmd_examples(std::ostream& out) {
  const auto results = worked_examples();
  std::size_t good = 0;
  for (const auto& r : results) {
    if (r.ok()) {
      ++good;
      out << "ok       " << r.label << " = " << r.got << '\n';
    } else {
      out << "MISMATCH " << r.label << " = " << r.got << " (expected " << r.expected << ")\n";
    }
  }
  out << "examples: " << good << '/' << results.size() << " ok\n";
  return good == results.size() ? 0 : 1;
}

// CLI11 reads "-1*e{1,4}" as an option and splits "[1,2]" into a list. A
// leading space keeps either one a single operand; every operand grammar
// skips spaces.
std::vector<std::string> protect_operands(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  out.reserve(args.size());
  for (const auto& a : args) {
    if ((a.size() >= 2 && a[0] == '-' && a[1] != '-' && a != "-h") || (!a.empty() && a[0] == '[')) {
      out.push_back(" " + a);
    } else {
      out.push_back(a);
    }
  }
  return out;
}

// Replay helpers. All worked computations live in F^4 over Q unless noted.
const FieldSpec kQ = FieldSpec::rationals();

Multivector mv(std::string_view text, std::size_t dim = 4) { return parse_multivector(text, kQ, dim); }

// The coordinate plane ī, the blade of all basis vectors but e_i.
Multivector bar(std::size_t i) {
  return Multivector::basis(kQ, 4, full_index(4) & ~(MultiIndex{1} << (i - 1)));
}

Multivector regressive_chain(const std::vector<std::size_t>& bars) {
  Multivector acc = bar(bars.front());
  for (std::size_t k = 1; k < bars.size(); ++k) acc = regressive(acc, bar(bars[k]));
  return acc;
}

std::string bar_label(const std::vector<std::size_t>& bars) {
  std::string s;
  for (std::size_t k = 0; k < bars.size(); ++k) {
    if (k) s += '.';
    s += std::to_string(bars[k]) + "bar";
  }
  return s;
}

// Representative of a point scaled to agree with `like` at its first nonzero
// coordinate.
Vector scaled_like(const Vector& v, const Vector& like) {
  for (std::size_t i = 0; i < like.dim(); ++i) {
    if (!like[i].is_zero()) {
      if (v[i].is_zero()) return v;
      return (like[i] * v[i].inverse()) * v;
    }
  }
  return v;
}

void add(std::vector<ExampleResult>& out, std::string label, const std::string& got, std::string expected) {
  out.push_back({std::move(label), got, std::move(expected)});
}

void h_table(std::vector<ExampleResult>& out) {
  static const char* const expected[] = {
      "1*E{1,2,3,4}",                                                   // {}
      "1*E{2,3,4}",  "-1*E{1,3,4}", "1*E{1,2,4}", "-1*E{1,2,3}",       // grade 1
      "1*E{3,4}",    "-1*E{2,4}",   "1*E{2,3}",   "1*E{1,4}", "-1*E{1,3}", "1*E{1,2}",
      "1*E{4}",      "-1*E{3}",     "1*E{2}",     "-1*E{1}",           // grade 3
      "1*E{}",
  };
  std::size_t row = 0;
  for (std::size_t g = 0; g <= 4; ++g) {
    for (MultiIndex index : indices_of_grade(4, g)) {
      const Multivector e = Multivector::basis(kQ, 4, index);
      add(out, "H(" + to_string(e) + ")", to_string(annihilator_H(e)), expected[row++]);
    }
  }
}

void bar_table(std::vector<ExampleResult>& out) {
  add(out, "0bar", to_string(annihilator_H_inv(Multivector::basis(kQ, 4, 0, true))), "1*e{1,2,3,4}");
  const std::vector<std::pair<std::vector<std::size_t>, std::string>> rows = {
      {{1, 2}, "-1*e{3,4}"},    {{1, 3}, "-1*e{2,4}"},    {{1, 4}, "-1*e{2,3}"},
      {{2, 3}, "-1*e{1,4}"},    {{2, 4}, "-1*e{1,3}"},    {{3, 4}, "-1*e{1,2}"},
      {{1, 2, 3}, "-1*e{4}"},   {{1, 2, 4}, "-1*e{3}"},   {{1, 3, 4}, "-1*e{2}"},
      {{2, 3, 4}, "-1*e{1}"},   {{1, 2, 3, 4}, "1*e{}"},
  };
  for (const auto& [bars, value] : rows) add(out, bar_label(bars), to_string(regressive_chain(bars)), value);
  add(out, "e{2,3,4}.e{1,2,3}", to_string(regressive(mv("e{2,3,4}"), mv("e{1,2,3}"))), "-1*e{2,3}");
}

void plane_plane(std::vector<ExampleResult>& out) {
  const std::vector<Vector> factors = {Vector::from_ints(kQ, {1, 1, 0, 0}), Vector::from_ints(kQ, {1, 0, 1, 0}),
                                       Vector::from_ints(kQ, {1, 0, 0, 1})};
  const Multivector plane = wedge_vectors(factors);
  add(out, "(1+2)(1+3)(1+4)", to_string(plane), "1*e{1,2,3}-1*e{1,2,4}+1*e{1,3,4}+1*e{2,3,4}");
  const Multivector line = meet(ProjFlat(plane), ProjFlat(bar(2))).blade();
  add(out, "meet(plane, 2bar)", to_string(line), "1*e{1,3}-1*e{1,4}-1*e{3,4}");
  // The expansion of the first product with the table above gives 3-4; as a
  // point this is the printed 4-3.
  const char* const pierce[] = {"1*e{3}-1*e{4}", "0", "-1*e{1}-1*e{4}", "-1*e{1}-1*e{3}"};
  for (std::size_t i = 1; i <= 4; ++i) {
    add(out, "line." + std::to_string(i) + "bar", to_string(regressive(line, bar(i))), pierce[i - 1]);
  }
}

void line_line(std::vector<ExampleResult>& out) {
  const Vector e1 = Vector::from_ints(kQ, {1, 0, 0, 0});
  const Vector all = Vector::from_ints(kQ, {1, 1, 1, 1});
  const std::vector<Vector> lambda_f = {e1, all};
  const std::vector<Vector> mu_f = {Vector::from_ints(kQ, {1, 1, 0, 0}), Vector::from_ints(kQ, {1, 0, 1, 1})};
  const Multivector lambda = wedge_vectors(lambda_f);
  const Multivector mu = wedge_vectors(mu_f);
  add(out, "lambda", to_string(lambda), "1*e{1,2}+1*e{1,3}+1*e{1,4}");
  add(out, "mu", to_string(mu), "-1*e{1,2}+1*e{1,3}+1*e{1,4}+1*e{2,3}+1*e{2,4}");
  add(out, "lambda^mu", to_string(wedge(lambda, mu)), "0");
  add(out, "1^mu", to_string(wedge(Multivector::from_vector(e1), mu)), "1*e{1,2,3}+1*e{1,2,4}");
  // The same plane as 1^mu, with the opposite orientation.
  add(out, "(1+2+3+4)^mu", to_string(wedge(Multivector::from_vector(all), mu)), "-1*e{1,2,3}-1*e{1,2,4}");
  add(out, "join(mu, lambda)", to_string(join(ProjFlat(mu), ProjFlat(lambda)).blade()), "1*e{1,2,3}+1*e{1,2,4}");
  add(out, "lambda.mu", to_string(regressive(lambda, mu)), "0");
  const Multivector p32 = bar(3) + bar(2);
  const Multivector p34 = bar(3) + bar(4);
  add(out, "-(3bar+2bar).(3bar+4bar)", to_string(-regressive(p32, p34)), "1*e{1,2}+1*e{1,3}+1*e{1,4}");
  // The plane-blade expansion of mu as printed; by the table above it is -mu.
  const Multivector mu_bars = regressive_chain({2, 4}) + regressive_chain({2, 3}) - regressive_chain({3, 4}) +
                              regressive_chain({1, 4}) + regressive_chain({1, 3});
  add(out, "2bar.4bar+2bar.3bar-3bar.4bar+1bar.4bar+1bar.3bar", to_string(mu_bars), to_string(-mu));
  add(out, "mu_bars.(3bar+2bar)", to_string(regressive(mu_bars, p32)), "2*e{1}+1*e{2}+1*e{3}+1*e{4}");
  add(out, "mu_bars.(3bar+4bar)", to_string(regressive(mu_bars, p34)), "0");
  add(out, "meet(lambda, mu)", to_string(meet(ProjFlat(lambda), ProjFlat(mu)).blade()), "2*e{1}+1*e{2}+1*e{3}+1*e{4}");
}

void pappus_instance(std::vector<ExampleResult>& out, const FieldSpec& field, long a_value, long c_value) {
  const Scalar a(field, a_value);
  const Scalar c(field, c_value);
  const Scalar one = Scalar::one(field);
  const Scalar zero = Scalar::zero(field);
  auto point = [&](Scalar x, Scalar y, Scalar z) { return ProjPoint(Vector(field, {x, y, z})); };
  const ProjPoint A = point(one, zero, zero);
  const ProjPoint B = point(zero, one, zero);
  const ProjPoint C = point(one, c, zero);
  const ProjPoint A1 = point(one, one, a);
  const ProjPoint B1 = point(one, one, one);
  const ProjPoint C1 = point(zero, zero, one);
  auto line = [](const ProjPoint& p, const ProjPoint& q) { return join(p.flat(), q.flat()); };
  auto cross = [&](const ProjPoint& p, const ProjPoint& q, const ProjPoint& r, const ProjPoint& s) {
    return meet(line(p, q), line(r, s)).blade().to_vector();
  };
  const Vector a2_expected(field, {zero, one - c, one});
  const Vector b2_expected(field, {one - c, zero, -(c * a)});
  const Vector c2_expected(field, {one, a, a});
  const Vector a2 = scaled_like(cross(B, C1, B1, C), a2_expected);
  const Vector b2 = scaled_like(cross(A, C1, A1, C), b2_expected);
  const Vector c2 = scaled_like(cross(A, B1, A1, B), c2_expected);
  std::ostringstream tag;
  tag << "pappus[" << field.to_string() << " a=" << a << " c=" << c << "]";
  add(out, tag.str() + " A''", to_string(a2), to_string(a2_expected));
  add(out, tag.str() + " B''", to_string(b2), to_string(b2_expected));
  add(out, tag.str() + " C''", to_string(c2), to_string(c2_expected));
  add(out, tag.str() + " a*A''+B''+(c-1)*C''", to_string(a * a2 + b2 + (c - one) * c2), to_string(Vector(field, 3)));
}

void non_blade(std::vector<ExampleResult>& out) {
  std::string got;
  try {
    got = to_string(factor_blade(mv("e{1,2}+e{3,4}")));
  } catch (const Error& e) {
    got = std::string(error_name(e.code()));
  }
  add(out, "factor(e{1,2}+e{3,4})", got, "NotABlade");
}

}  // namespace

std::vector<ExampleResult> worked_examples() {
  std::vector<ExampleResult> out;
  h_table(out);
  bar_table(out);
  plane_plane(out);
  line_line(out);
  pappus_instance(out, kQ, 2, 3);
  pappus_instance(out, FieldSpec::prime(101), 17, 40);
  non_blade(out);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact exterior algebra and projective geometry", "exalg"};
  app.require_subcommand(1);
  Options opt;

  struct Spec {
    const char* name;
    const char* help;
    const char* operands;
  };
  const Spec specs[] = {
      {"wedge", "progressive product of multivectors", "multivectors"},
      {"meet", "intersection of two flats (multivector or span{...})", "flats"},
      {"join", "sum of flats (multivector or span{...})", "flats"},
      {"factor", "vectors whose product is the given blade", "blade"},
      {"hodge", "Hodge star for the --gram form", "multivector"},
      {"plucker", "Plücker coordinates of the columns of a matrix", "matrix"},
      {"det", "determinant", "matrix"},
      {"solve", "solve A x = b", "matrix and vector"},
      {"project", "project v onto span W along span X", "W X v"},
      {"verify", "randomized theorem check", "theorem"},
      {"examples", "replay the worked computations", ""},
  };
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    if (std::string_view(s.name) == "examples") continue;
    sub->add_option("operands", opt.operands, s.operands);
    sub->add_option("--field", opt.field, "q or gf:<p>")->capture_default_str();
    sub->add_option("--dim", opt.dim, "dimension of the underlying space");
    sub->add_option("--gram", opt.gram, "diag:+1,-1,... or matrix:[[..],..]");
    sub->add_option("--trials", opt.trials, "trial count for verify")->capture_default_str();
    sub->add_option("--seed", opt.seed, "seed for verify")->capture_default_str();
    if (std::string_view(s.name) == "project") sub->add_flag("--reflect", opt.reflect, "reflect instead");
  }

  std::vector<std::string> reversed = protect_operands(args);
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "wedge") return cmd_wedge(opt, out);
    if (name == "meet") return cmd_meet(opt, out);
    if (name == "join") return cmd_join(opt, out);
    if (name == "factor") return cmd_factor(opt, out);
    if (name == "hodge") return cmd_hodge(opt, out);
    if (name == "plucker") return cmd_plucker(opt, out);
    if (name == "det") return cmd_det(opt, out);
    if (name == "solve") return cmd_solve(opt, out);
    if (name == "project") return cmd_project(opt, out);
    if (name == "verify") return cmd_verify(opt, out);
    return cmd_examples(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << e.what() << '\n';
  }
  return 2;
}

}  // namespace exalg::cli
