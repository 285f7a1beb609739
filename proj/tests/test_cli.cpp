#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "quiverkit/cli.hpp"

using namespace quiverkit;

namespace {

std::string write_file(const std::string& name, const std::string& content) {
  std::ofstream out(name, std::ios::binary | std::ios::trunc);
  out << content;
  return name;
}

std::string a2_file() { return write_file("cli_a2.quiver", "vertices 2\narrow 1 2\n"); }
std::string a3_file() {
  return write_file("cli_a3.quiver", "vertices 3\narrow 1 2\narrow 2 3\n");
}
std::string k2_file() {
  return write_file("cli_k2.quiver", "vertices 2\narrow 1 2\narrow 1 2\n");
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: euler and tits") {
  RunResult r = run({"euler", "--quiver", k2_file(), "--roots", "2,3;1,2"});
  CHECK(r.code == 0);
  CHECK(r.out == "<(2,3),(1,2)> = 0\n");

  r = run({"tits", "--quiver", k2_file(), "--dim", "1,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "q(1,1) = 0 [isotropic]\n");

  r = run({"tits", "--quiver", a2_file(), "--dim", "1,1"});
  CHECK(r.out == "q(1,1) = 1 [real]\n");
}

TEST_CASE("cli: decomp and lss text output") {
  RunResult r = run({"decomp", "--quiver", a2_file(), "--dim", "2,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 x (1,0) [real]\n1 x (1,1) [real]\n");

  r = run({"lss", "--quiver", a2_file(), "--dim", "2,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 x (0,1) [real]\n2 x (1,0) [real]\n");

  r = run({"decomp", "--quiver", k2_file(), "--dim", "3,3"});
  CHECK(r.out == "3 x (1,1) [isotropic]\n");
}

TEST_CASE("cli: verification flag") {
  RunResult r = run({"decomp", "--quiver", a2_file(), "--dim", "2,1", "--verify"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[ ok ]"));
  CHECK(contains(r.out, "PASSED"));

  r = run({"lss", "--quiver", k2_file(), "--dim", "3,3", "--verify", "--trials", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASSED"));
}

TEST_CASE("cli: perpendicular categories") {
  RunResult r = run({"perp-root", "--quiver", k2_file(), "--dim", "2,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "(3,2)\n");

  r = run({"perp-root", "--quiver", k2_file(), "--dim", "3,2", "--side", "left"});
  CHECK(r.code == 0);
  CHECK(r.out == "(2,1)\n");

  r = run({"perp-seq", "--quiver", a3_file(), "--roots", "1,1,0;0,1,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1,1,1)\n");

  r = run({"perp-seq", "--quiver", a3_file()});
  CHECK(r.code == 0);
  CHECK(r.out == "(0,0,1)\n(0,1,0)\n(1,0,0)\n");
}

TEST_CASE("cli: strata and generators") {
  RunResult r = run({"strata", "--quiver", k2_file(), "--dim", "2,1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "perp basis: (3,2)\n"
        "stratum {}: 1 x (0,1) [real] + 2 x (1,0) [real]\n"
        "stratum {1}: 1 x (2,1) [real]\n");

  r = run({"generators", "--quiver", k2_file(), "--dim", "4,2"});
  CHECK(r.code == 0);
  CHECK(r.out == "root (3,2)  weight (1,-2)\n");

  r = run({"generators", "--quiver", a2_file(), "--dim", "2,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "no generators\n");
}

TEST_CASE("cli: check subcommand") {
  RunResult r = run({"check", "--quiver", a2_file(), "--dim", "2,1", "--roots",
                     "1,0;1,1", "--kind", "generic", "--trials", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASSED"));

  r = run({"check", "--quiver", a2_file(), "--dim", "2,2", "--roots", "1,0;0,1",
           "--mults", "2,2", "--trials", "3"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "[FAIL]"));
  CHECK(contains(r.out, "FAILED"));

  r = run({"check", "--quiver", a2_file(), "--dim", "2,1", "--roots", "1,0;1,1",
           "--mults", "1", "--trials", "3"});
  CHECK(r.code == 2);
}

TEST_CASE("cli: json envelope") {
  RunResult r = run({"decomp", "--quiver", a2_file(), "--dim", "2,1", "--json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("v") == 1);
  CHECK(doc.at("command") == "decomp");
  CHECK(doc.at("quiver").at("n") == 2);
  CHECK(doc.at("quiver").at("arrows") == nlohmann::json::array({{1, 2}}));
  CHECK(doc.at("result").at("total") == nlohmann::json::array({2, 1}));
  CHECK(doc.at("result").at("terms").size() == 2);
  CHECK(doc.at("result").at("terms")[0].at("root") == nlohmann::json::array({1, 0}));
  CHECK(doc.at("result").at("terms")[0].at("mult") == 1);
  CHECK(doc.at("result").at("terms")[0].at("class") == "real");
  CHECK_FALSE(doc.contains("checks"));

  RunResult again = run({"decomp", "--quiver", a2_file(), "--dim", "2,1", "--json"});
  CHECK(again.out == r.out);

  r = run({"euler", "--quiver", k2_file(), "--roots", "2,3;1,2", "--json"});
  doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("result").at("value") == 0);

  r = run({"lss", "--quiver", k2_file(), "--dim", "3,3", "--json", "--verify",
           "--trials", "3"});
  REQUIRE(r.code == 0);
  doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("result").at("almost_loopless") == true);
  CHECK(doc.at("checks").at("pass") == true);

  r = run({"strata", "--quiver", k2_file(), "--dim", "2,1", "--json"});
  doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.at("result").at("strata").size() == 2);
  CHECK(doc.at("result").at("strata")[1].at("members") ==
        nlohmann::json::array({1}));
}

TEST_CASE("cli: usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"decomp", "--dim", "2,1"}).code == 2);  // missing --quiver
  CHECK(run({"euler", "--quiver", k2_file(), "--roots", "1,1"}).code == 2);
  CHECK(run({"decomp", "--quiver", a2_file(), "--dim", "2,x"}).code == 2);
  CHECK(run({"perp-root", "--quiver", k2_file(), "--dim", "2,1", "--side", "up"})
            .code == 2);
  RunResult r = run({"decomp", "--dim", "2,1"});
  CHECK(contains(r.err, "usage error"));
}

TEST_CASE("cli: domain errors exit with 1") {
  RunResult r = run({"decomp", "--quiver", "no_such_file.quiver", "--dim", "2,1"});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "error: "));

  r = run({"decomp", "--quiver", a2_file(), "--dim", "0,0"});
  CHECK(r.code == 1);

  r = run({"perp-root", "--quiver", k2_file(), "--dim", "1,1"});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "not a real Schur root"));

  std::string bad = write_file("cli_bad.quiver", "vertices 2\narrow 1 1\n");
  r = run({"decomp", "--quiver", bad, "--dim", "1,1"});
  CHECK(r.code == 1);
}

TEST_CASE("cli: help") {
  RunResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "decomp"));
  CHECK(contains(r.out, "lss"));
}
