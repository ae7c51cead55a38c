#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "exalg/text.hpp"

using namespace exalg;
using namespace testing;

TEST_CASE("canonical printing") {
  CHECK(to_string(Multivector(Q, 3)) == "0");
  CHECK(to_string(mv("e{2}+e{1}", 3)) == "1*e{1}+1*e{2}");
  CHECK(to_string(mv("e{1,2}+3+e{3}", 3)) == "3*e{}+1*e{3}+1*e{1,2}");
  CHECK(to_string(mv("-e{1,4}+e{1,3}-e{3,4}", 4)) == "1*e{1,3}-1*e{1,4}-1*e{3,4}");
  CHECK(to_string(mv("1/2*e{1}-2/3*e{2}", 2)) == "1/2*e{1}-2/3*e{2}");
  CHECK(to_string(mv("E{1,2}", 3)) == "1*E{1,2}");
  CHECK(to_string(mv("9*e{1}", 2, F7)) == "2*e{1}");
}

TEST_CASE("parsing normalizes indices") {
  CHECK(mv("e{2,1}", 2) == mv("-e{1,2}", 2));
  CHECK(mv("e{3,1,2}", 3) == mv("e{1,2,3}", 3));
  CHECK(mv("e{1,1}", 2).is_zero());
  CHECK(mv("e{1}-e{1}", 2).is_zero());
  CHECK(mv(" 2 * e{ 1 , 2 } ", 2) == mv("2*e{1,2}", 2));
  CHECK(mv("e{}", 2) == Multivector::scalar(Q, 2, Scalar::one(Q)));
  CHECK(mv("0", 2).is_zero());
  CHECK(mv("-2/-4*e{1}", 2) == mv("1/2*e{1}", 2));
}

TEST_CASE("round trips") {
  for (const FieldSpec& f : kFields) {
    for_trials(101, 200, [&](Rng& rng) {
      const std::size_t d = pick(rng, 1, 6);
      Multivector m = random_homogeneous(f, d, pick(rng, 0, d), rng);
      m += random_homogeneous(f, d, pick(rng, 0, d), rng);
      const std::string text = to_string(m);
      CHECK(parse_multivector(text, f, d) == m);
      CHECK(to_string(parse_multivector(text, f, d)) == text);
      const Vector v = random_vector(f, d, rng);
      CHECK(parse_vector(to_string(v), f) == v);
      const Matrix a = random_matrix(f, d, pick(rng, 1, 4), rng);
      CHECK(parse_matrix(to_string(a), f) == a);
      const std::vector<Vector> vs = {random_vector(f, d, rng), random_vector(f, d, rng)};
      CHECK(parse_vector_list(to_string(vs), f) == vs);
    });
  }
}

TEST_CASE("grammar errors") {
  CHECK_ERROR(parse_multivector("e{1,", Q, 3), ErrorCode::MalformedInput);
  CHECK_ERROR(parse_multivector("e{1}+", Q, 3), ErrorCode::MalformedInput);
  CHECK_ERROR(parse_multivector("x{1}", Q, 3), ErrorCode::MalformedInput);
  CHECK_ERROR(parse_multivector("", Q, 3), ErrorCode::MalformedInput);
  CHECK_ERROR(parse_multivector("e{0}", Q, 3), ErrorCode::DimMismatch);
  CHECK_ERROR(parse_multivector("e{4}", Q, 3), ErrorCode::DimMismatch);
  CHECK_ERROR(parse_multivector("e{1}+E{2}", Q, 3), ErrorCode::DualMismatch);
  CHECK_ERROR(parse_multivector("1/0*e{1}", Q, 3), ErrorCode::ZeroDenominator);
  CHECK_ERROR(parse_multivector("1/2/3*e{1}", Q, 3), ErrorCode::MalformedScalar);
  CHECK_ERROR(parse_multivector("3/7*e{1}", F7, 3), ErrorCode::ZeroDenominator);
  CHECK(max_index("e{1,7}+e{3}") == 7);
  CHECK(max_index("5") == 0);
}

TEST_CASE("vector, list and matrix grammars") {
  CHECK(parse_vector("[1, -2, 3/4]", Q) == Vector(Q, {sc(Q, 1), sc(Q, -2), sc(Q, 3, 4)}));
  CHECK(to_string(vec(Q, {1, -2})) == "[1,-2]");
  CHECK_ERROR(parse_vector("[1,2", Q), ErrorCode::MalformedInput);
  CHECK_ERROR(parse_vector("[]", Q), ErrorCode::MalformedInput);
  CHECK(parse_vector_list("span{[1,0],[0,1]}", Q).size() == 2);
  CHECK(to_string(std::vector<Vector>{vec(Q, {1, 0}), vec(Q, {0, 1})}) == "span{[1,0],[0,1]}");
  CHECK_ERROR(parse_vector_list("span{[1,0],[0,1,2]}", Q), ErrorCode::DimMismatch);
  CHECK(parse_matrix("[[1,2],[3,4]]", Q) == Matrix::from_ints(Q, {{1, 2}, {3, 4}}));
  CHECK(to_string(Matrix::from_ints(Q, {{1, 2}, {3, 4}})) == "[[1,2],[3,4]]");
  CHECK_ERROR(parse_matrix("[[1,2],[3]]", Q), ErrorCode::DimMismatch);
}

TEST_CASE("Gram form grammar") {
  CHECK(parse_gram("diag:+1,-1,1", Q).matrix() == Matrix::from_ints(Q, {{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}));
  CHECK(parse_gram("matrix:[[0,1],[1,0]]", Q).det() == Scalar(Q, -1));
  CHECK_ERROR(parse_gram("diag:+2", Q), ErrorCode::BadSign);
  CHECK_ERROR(parse_gram("matrix:[[1,1],[1,1]]", Q), ErrorCode::Degenerate);
  CHECK_ERROR(parse_gram("eye:3", Q), ErrorCode::MalformedInput);
}
