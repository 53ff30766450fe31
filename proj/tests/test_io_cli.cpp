#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "homnambu/cli.hpp"
#include "homnambu/io.hpp"
#include "homnambu/nuplet.hpp"
#include "test_support.hpp"

using namespace homnambu;
using testsupport::S;

#ifndef DATA_DIR
#define DATA_DIR "data"
#endif

namespace {

std::string data_path(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("algebra files round-trip") {
  for (const HomAlgebra& a :
       {build_sl2(S("1")), build_sl2(S("2")), build_sl2(S("3/5")), build_heisenberg(3),
        build_heisenberg(4), build_heisenberg(5)}) {
    std::string text = serialize_algebra(a);
    HomAlgebra back = parse_algebra(text);
    CHECK(back == a);
    CHECK(serialize_algebra(back) == text);
  }
}

TEST_CASE("non-skew tables round-trip with full tuples") {
  BracketTable t;
  t[{0, 0}] = Vec{S("0"), S("1")};
  t[{1, 0}] = Vec{S("1/3"), S("0")};
  HomAlgebra a("lopsided", 2, 2, {EndoMap::diagonal({S("1"), S("2")})}, t, false, false);
  HomAlgebra back = parse_algebra(serialize_algebra(a));
  CHECK(back == a);
}

TEST_CASE("cochain files round-trip") {
  HomAlgebra h5 = build_heisenberg(5);
  Cochain w = Cochain::dual_wedge(5, {3, 4});
  NamedCochain back = parse_cochain(serialize_cochain("w", w, h5.labels()), 5, h5.labels());
  CHECK(back.name == "w");
  CHECK(back.cochain == w);

  Cochain c0(3, 0);
  c0.set({}, S("2/3"));
  NamedCochain back0 =
      parse_cochain(serialize_cochain("c0", c0, {"a", "b", "c"}), 3, {"a", "b", "c"});
  CHECK(back0.cochain == c0);
}

TEST_CASE("parser diagnostics") {
  auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_algebra(text);
      FAIL("expected a FormatError for: " << needle);
    } catch (const FormatError& e) {
      INFO(e.what());
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_error("arity 2\ndim 3\n", "algebra");
  expect_error("algebra a\ndim 3\nbracket [e1, e2] = e3\n", "arity");
  expect_error("algebra a\narity 2\nbracket [e1, e2] = e3\n", "dim");
  expect_error("algebra a\narity 2\ndim 3\nbracket [e1, e5] = e3\n", "unknown basis label 'e5'");
  expect_error("algebra a\narity 2\ndim 3\nbracket [e1] = e3\n", "arity is 2");
  expect_error("algebra a\narity 2\ndim 3\nbracket [e1, e2] = e3\nbracket [e1, e2] = e1\n",
               "duplicate");
  expect_error("algebra a\narity 2\ndim 3\nflags skew\nbracket [e2, e1] = e3\n",
               "strictly increasing");
  expect_error("algebra a\narity 2\ndim 3\nalpha e1 -> e1\n", "alpha section incomplete");
  expect_error("algebra a\narity 2\ndim 3\nalpha e1 -> e1\nalpha e1 -> e2\n", "duplicate alpha");
  expect_error("algebra a\narity 2\ndim 3\nbracket [e1, e2] = 1/0 e3\n", "zero denominator");
  expect_error("algebra a\narity 2\ndim 3\nwibble\n", "unknown keyword");
  expect_error("algebra a\narity 2\ndim 2\nbasis x y z\n", "does not match dim");

  // line numbers are carried in the message
  try {
    parse_algebra("algebra a\narity 2\ndim 3\n\nbracket [e1, e9] = e3\n");
    FAIL("expected a FormatError");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
}

TEST_CASE("empty bracket section parses to the zero algebra") {
  HomAlgebra a = parse_algebra("algebra nil\narity 2\ndim 3\nflags skew\n");
  CHECK(a.table().empty());
  CHECK(a.alpha() == EndoMap::identity(3));  // missing alpha section defaults to the identity
}

TEST_CASE("cli check") {
  CliRun ok = cli({"check", data_path("sl2_l2.alg")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("skew: PASS") != std::string::npos);
  CHECK(ok.out.find("multiplicative: PASS") != std::string::npos);
  CHECK(ok.out.find("hom_nambu: PASS") != std::string::npos);

  CliRun bad = cli({"check", data_path("mutated.alg")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("result: fail") != std::string::npos);
  CHECK(bad.out.find("tuples:") != std::string::npos);

  CliRun missing = cli({"check", data_path("no_such_file.alg")});
  CHECK(missing.code == 2);

  CliRun garbage = cli({"check", data_path("e4star.coc")});
  CHECK(garbage.code == 2);  // cochain file is not an algebra file
}

TEST_CASE("cli der") {
  CliRun r = cli({"der", data_path("heis3.alg"), "--k", "0", "--kind", "der"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dim: 6") != std::string::npos);
  CHECK(r.out.find("basis element 6") != std::string::npos);

  CliRun inner = cli({"der", data_path("heis3.alg"), "--kind", "inner"});
  CHECK(inner.out.find("dim: 2") != std::string::npos);

  CliRun cent = cli({"der", data_path("heis3.alg"), "--kind", "cent"});
  CHECK(cent.out.find("dim: 3") != std::string::npos);

  CliRun qder = cli({"der", data_path("heis3.alg"), "--kind", "qder"});
  CHECK(qder.out.find("note: no commutation") != std::string::npos);

  // non-multiplicative input is refused
  CliRun refuse = cli({"der", data_path("mutated.alg"), "--kind", "der"});
  CHECK(refuse.code == 1);
  CHECK(refuse.err.find("not multiplicative") != std::string::npos);
}

TEST_CASE("cli induce") {
  const std::string out_path = "cli_induced_tmp.alg";
  CliRun r = cli({"induce", data_path("heis4.alg"), "--cochain", data_path("e4star.coc"),
                  "--n", "3", "--verify-theorem", "-o", out_path});
  CHECK(r.code == 0);
  CHECK(r.out.find("trace: PASS") != std::string::npos);
  CHECK(r.out.find("wedge_condition: PASS") != std::string::npos);
  CHECK(r.out.find("alpha_invariance: PASS") != std::string::npos);
  CHECK(r.out.find("hom_nambu: PASS") != std::string::npos);

  HomAlgebra written = parse_algebra(detail::read_file(out_path));
  HomAlgebra expect = induce_nbracket(build_heisenberg(4), Cochain::dual_basis(4, 3)).algebra;
  CHECK(written == expect);
  std::remove(out_path.c_str());

  // arity disagreeing with the cochain degree is a semantic error
  CliRun mismatch = cli({"induce", data_path("heis4.alg"), "--cochain", data_path("e4star.coc"),
                         "--n", "4"});
  CHECK(mismatch.code == 2);
}

TEST_CASE("cli nuplet") {
  const std::string out_path = "cli_nuplet_tmp.alg";
  CliRun r = cli({"nuplet", data_path("sl2_l2.alg"), "--n", "3", "-o", out_path});
  CHECK(r.code == 0);
  CHECK(r.out.find("nuplet_axioms: PASS") != std::string::npos);
  CHECK(r.out.find("lts_axioms: PASS") != std::string::npos);
  CHECK(r.out.find("note: the untwisted recursion reading differs") != std::string::npos);

  HomAlgebra written = parse_algebra(detail::read_file(out_path));
  NupletSystem expect = build_nuplet(build_sl2(S("2")), 3);
  CHECK(written.table() == expect.algebra.table());
  CHECK(written.twist(0) == expect.algebra.twist(0));
  std::remove(out_path.c_str());

  CliRun refuse = cli({"nuplet", data_path("mutated.alg"), "--n", "3"});
  CHECK(refuse.code == 1);
}

TEST_CASE("cli qhv") {
  CliRun r = cli({"qhv", "--q", "2", "--window", "-4..4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("graded_identities: PASS") != std::string::npos);
  CHECK(r.out.find("non-multiplicative") != std::string::npos);

  CliRun r23 = cli({"qhv", "--q", "2/3"});
  CHECK(r23.code == 0);

  CHECK(cli({"qhv", "--q", "1"}).code == 2);
  CHECK(cli({"qhv", "--q", "2", "--window", "4..1"}).code == 2);
  CHECK(cli({"qhv", "--q", "2", "--window", "nope"}).code == 2);
}

TEST_CASE("cli usage errors and help") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"der", data_path("heis3.alg"), "--kind", "bogus"}).code == 2);
  CliRun help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("check") != std::string::npos);
}

TEST_CASE("cli output is byte-identical across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"check", data_path("sl2_l2.alg")},
        std::vector<std::string>{"check", data_path("mutated.alg")},
        std::vector<std::string>{"der", data_path("heis3.alg"), "--kind", "der"},
        std::vector<std::string>{"qhv", "--q", "2", "--window", "-3..3"}}) {
    CliRun a = cli(args);
    CliRun b = cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}
