#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <sstream>

#include "cli.hpp"
#include "exalg/harness.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = exalg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("meet of the plane with a coordinate plane") {
  const Run r = run({"meet", "--field", "q", "--dim", "4", "1*e{1,3,4}-1*e{1,2,4}+1*e{1,2,3}+1*e{2,3,4}", "1*e{1,3,4}"});
  CHECK(r.code == 0);
  CHECK(r.out == "1*e{1,3}-1*e{1,4}-1*e{3,4}\n");
}

TEST_CASE("verify pappus over GF(101)") {
  const Run r = run({"verify", "pappus", "--field", "gf:101", "--trials", "1000", "--seed", "42"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1000/1000") != std::string::npos);
  CHECK(r.out.find("seed=42") != std::string::npos);
}

TEST_CASE("factor rejects a non-blade") {
  const Run r = run({"factor", "--field", "q", "--dim", "4", "1*e{1,2}+1*e{3,4}"});
  CHECK(r.code == 2);
  CHECK(r.err.find("NotABlade") != std::string::npos);
}

TEST_CASE("worked examples replay") {
  const Run a = run({"examples"});
  CHECK(a.code == 0);
  CHECK(a.out.find("MISMATCH") == std::string::npos);
  const Run b = run({"examples"});
  CHECK(a.out == b.out);
  for (const auto& ex : exalg::cli::worked_examples()) {
    CAPTURE(ex.label);
    CHECK(ex.ok());
  }
}

TEST_CASE("algebra subcommands") {
  CHECK(run({"wedge", "--dim", "3", "e{1}", "e{2}"}).out == "1*e{1,2}\n");
  CHECK(run({"wedge", "e{1}+e{2}", "e{1}+e{3}", "e{1}+e{4}"}).out ==
        "1*e{1,2,3}-1*e{1,2,4}+1*e{1,3,4}+1*e{2,3,4}\n");
  CHECK(run({"join", "e{1}", "span{[1,1,0,0],[1,0,1,1]}"}).out == "1*e{1,2,3}+1*e{1,2,4}\n");
  CHECK(run({"meet", "span{[1,0,0,0],[1,1,1,1]}", "span{[1,1,0,0],[1,0,1,1]}"}).out == "2*e{1}+1*e{2}+1*e{3}+1*e{4}\n");
  CHECK(run({"plucker", "[[1,1],[0,1],[0,1],[0,1]]"}).out == "1*e{1,2}+1*e{1,3}+1*e{1,4}\n");
  CHECK(run({"det", "[[1,2],[3,4]]"}).out == "-2\n");
  CHECK(run({"det", "--field", "gf:7", "[[1,2],[2,4]]"}).out == "0\n");
  CHECK(run({"solve", "--field", "gf:7", "[[2,0],[0,5]]", "[1,1]"}).out == "[4,3]\n");
  CHECK(run({"project", "span{[1,0]}", "span{[0,1]}", "[3,5]"}).out == "[3,0]\n");
  CHECK(run({"project", "--reflect", "span{[1,0]}", "span{[0,1]}", "[3,5]"}).out == "[3,-5]\n");
  CHECK(run({"hodge", "--gram", "diag:+1,+1,+1,+1", "e{1,2}"}).out == "1*e{3,4}\n");
  CHECK(run({"hodge", "--gram", "diag:+1,-1", "e{1}"}).out == "-1*e{2}\n");
  // Without --gram the form is Euclidean.
  CHECK(run({"hodge", "--dim", "3", "e{1}"}).out == "1*e{2,3}\n");
  CHECK(run({"hodge", "--gram", "diag:+1,+1,+1,+1", "E{1,2}"}).out == "1*E{3,4}\n");
  const Run f = run({"factor", "--dim", "4", "-e{1,4}+e{1,3}-e{3,4}"});
  CHECK(f.code == 0);
  CHECK(f.out.rfind("span{", 0) == 0);
}

TEST_CASE("verify reports every theorem deterministically") {
  for (const std::string& name : exalg::theorem_names()) {
    CAPTURE(name);
    const Run a = run({"verify", name, "--trials", "20", "--seed", "3"});
    CHECK(a.code == 0);
    CHECK(a.out.find("20/20") != std::string::npos);
    CHECK(run({"verify", name, "--trials", "20", "--seed", "3"}).out == a.out);
  }
  const Run gf2 = run({"verify", "menelaus", "--field", "gf:2", "--trials", "5"});
  CHECK(gf2.code == 1);
  CHECK(gf2.out.find("0/5") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"wedge", "e{1,"}).code == 2);
  CHECK(run({"wedge", "--dim", "2", "e{3}"}).code == 2);
  CHECK(run({"wedge", "--field", "gf:6", "e{1}"}).code == 2);
  CHECK(run({"det", "[[1,2,3],[4,5,6]]"}).code == 2);
  CHECK(run({"solve", "[[1,2],[2,4]]", "[1,1]"}).code == 2);
  CHECK(run({"hodge", "--gram", "diag:+1,+1", "e{3}"}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"meet", "e{1,2}+e{3,4}", "e{1}"}).code == 2);
  CHECK(run({"wedge", "5"}).code == 2);
}
