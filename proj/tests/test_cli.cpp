#include <doctest.h>

#include <fstream>
#include <sstream>

#include "enumkit/cli.hpp"
#include "enumkit/io.hpp"
#include "support.hpp"

using namespace enumkit;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "cli_test_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kClosure7 = "4 4\n1 2\n2 3\n1 4\n1 3 4\n";
const char* kPaperDnf = "p dnf 3 2\n1 -2 0\n2 3 0\n";

}  // namespace

TEST_CASE("set system parsing") {
  SUBCASE("the worked instance") {
    std::istringstream in(kClosure7);
    const SetSystem x = parse_set_system(in);
    CHECK(x.n == 4);
    REQUIRE(x.m() == 4);
    CHECK(x.sets[3] == BitVec::from_elements(4, {1, 3, 4}));
  }
  SUBCASE("an empty line is the empty set") {
    std::istringstream in("3 2\n1 2\n\n");
    const SetSystem x = parse_set_system(in);
    REQUIRE(x.m() == 2);
    CHECK(x.sets[1].none());
  }
  SUBCASE("malformed line names its number") {
    std::istringstream in("3 1\n1 two\n");
    try {
      parse_set_system(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
    }
  }
  SUBCASE("out-of-range element is a validation error") {
    std::istringstream in("3 1\n4\n");
    CHECK_THROWS_AS(parse_set_system(in), ValidationError);
  }
  SUBCASE("truncated file") {
    std::istringstream in("3 2\n1\n");
    CHECK_THROWS_AS(parse_set_system(in), ParseError);
  }
}

TEST_CASE("dnf parsing") {
  std::istringstream in(kPaperDnf);
  const DnfFormula d = parse_dnf(in);
  CHECK(d.n == 3);
  REQUIRE(d.m() == 2);
  CHECK(d.terms[0][1].variable == 2);
  CHECK_FALSE(d.terms[0][1].positive);

  std::istringstream bad("p dnf 3 1\n1 2\n");
  CHECK_THROWS_AS(parse_dnf(bad), ParseError);  // missing terminator
}

TEST_CASE("dag parsing validates acyclicity") {
  std::istringstream ok("3 2 1 3\n1 2\n2 3\n");
  const Dag g = parse_dag(ok);
  CHECK(g.vertex_count == 3);

  std::istringstream cyclic("2 2 1 2\n1 2\n2 1\n");
  CHECK_THROWS_AS(parse_dag(cyclic), ValidationError);
}

TEST_CASE("gf2 parsing accepts spaced and compact bits") {
  std::istringstream spaced("1 2\n1 1 0\n");
  const Gf2System a = parse_gf2(spaced);
  CHECK(a.row_coeffs[0].to_string() == "11");
  std::istringstream compact("1 2\n110\n");
  const Gf2System b = parse_gf2(compact);
  CHECK(b.row_coeffs[0] == a.row_coeffs[0]);
}

TEST_CASE("cli union run with stats and verification") {
  const std::string path = write_temp("c7.ss", kClosure7);
  for (const std::string method : {"flashlight", "supergraph", "reverse", "saturate"}) {
    CliResult r = cli({"union", path, "--method", method, "--stats", "--verify"});
    CHECK(r.code == 0);
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 7);
    CHECK(r.err.find("count=7") != std::string::npos);
    CHECK(r.err.find("verify_missing=0") != std::string::npos);
  }
  CliResult lex = cli({"union", path, "--method", "flashlight", "--order-check"});
  CHECK(lex.code == 0);
  CHECK(lex.err.find("order_check=ok") != std::string::npos);
}

TEST_CASE("cli output is byte-identical across runs") {
  const std::string path = write_temp("c7b.ss", kClosure7);
  CliResult a = cli({"union", path, "--method", "flashlight", "--stats"});
  CliResult b = cli({"union", path, "--method", "flashlight", "--stats"});
  CHECK(a.out == b.out);
  CHECK(a.err == b.err);
}

TEST_CASE("cli gray") {
  CliResult r = cli({"gray", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 4) == "000\n");
  CHECK(r.out.substr(r.out.size() - 4) == "100\n");
}

TEST_CASE("cli dnf with limit") {
  const std::string path = write_temp("d.dnf", kPaperDnf);
  CliResult r = cli({"dnf", path, "--limit", "2", "--stats"});
  CHECK(r.code == 0);
  CHECK(r.out == "011\n100\n");
  CHECK(r.err.find("count=2") != std::string::npos);
}

TEST_CASE("cli gf2 rank, random access and samples") {
  const std::string path = write_temp("s.gf2", "1 2\n1 1 0\n");
  CliResult r = cli({"gf2", path, "--rank", "--index", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "11\n");
  CHECK(r.err.find("rank=1") != std::string::npos);
  CHECK(r.err.find("kernel_dim=1") != std::string::npos);
  CHECK(r.err.find("count=2") != std::string::npos);

  CliResult oor = cli({"gf2", path, "--index", "2"});
  CHECK(oor.code == kExitValidation);

  CliResult samples = cli({"gf2", path, "--sample", "5", "--seed", "9"});
  CHECK(samples.code == 0);
  int lines = 0;
  for (char c : samples.out) lines += c == '\n';
  CHECK(lines == 5);
  CliResult samples2 = cli({"gf2", path, "--sample", "5", "--seed", "9"});
  CHECK(samples2.out == samples.out);
}

TEST_CASE("cli amortizers run end to end") {
  const std::string path = write_temp("c7c.ss", kClosure7);
  for (const std::string am : {"queue", "geometric", "adaptive", "epsilon"}) {
    CliResult r = cli({"union", path, "--amortize", am, "--verify"});
    CHECK(r.code == 0);
    CHECK(r.err.find("verify_missing=0") != std::string::npos);
  }
}

TEST_CASE("cli exit codes") {
  SUBCASE("parse error is 2") {
    const std::string path = write_temp("bad.ss", "3 1\nnope\n");
    CHECK(cli({"union", path}).code == kExitParse);
  }
  SUBCASE("missing file is 2") {
    CHECK(cli({"union", "does_not_exist.ss"}).code == kExitParse);
  }
  SUBCASE("validation error is 3") {
    const std::string path = write_temp("cyc.dag", "2 2 1 2\n1 2\n2 1\n");
    CHECK(cli({"dagpaths", path}).code == kExitValidation);
  }
  SUBCASE("bad method is 3") {
    const std::string path = write_temp("c7d.ss", kClosure7);
    CHECK(cli({"union", path, "--method", "supergraphx"}).code == kExitValidation);
    CHECK(cli({"dnf", path, "--method", "supergraph"}).code != 0);
  }
  SUBCASE("verification mismatch is 4") {
    const std::string path = write_temp("c7e.ss", kClosure7);
    CliResult r = cli({"union", path, "--limit", "3", "--verify"});
    CHECK(r.code == kExitVerifyMismatch);
  }
  SUBCASE("budget exhaustion is 5 via the environment ceiling") {
    const std::string path = write_temp("c7f.ss", kClosure7);
    setenv("ENUM_STEP_BUDGET", "3", 1);
    CliResult r = cli({"union", path});
    unsetenv("ENUM_STEP_BUDGET");
    CHECK(r.code == kExitBudget);
  }
  SUBCASE("unknown flags are 2") {
    CHECK(cli({"union", "x.ss", "--nonsense"}).code == kExitParse);
  }
}
