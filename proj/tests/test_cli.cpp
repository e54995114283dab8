#include <sstream>

#include "catch_amalgamated.hpp"

#include "altgt_cli.hpp"

using namespace altgt;

namespace {

struct outcome {
  int code;
  std::string out;
  std::string err;
};

outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gt prints the basis", "[cli]") {
  const auto r = run({"gt", "2,1^+"});
  CHECK(r.code == 0);
  CHECK(r.out == "u[1,1;2,1^+] = -i v[12/3] + v[13/2]\n");

  const auto j = run({"gt", "2,1^+", "--format", "json"});
  REQUIRE(j.code == 0);
  const json parsed = json::parse(j.out);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0]["terms"].size() == 2);
  CHECK(scalar_from_json(parsed[0]["terms"][0]["coeff"]) == -scalar::i());
  CHECK(scalar_from_json(parsed[0]["terms"][1]["coeff"]) == scalar(1));

  const auto latex = run({"gt", "4,1,1", "--format", "latex"});
  CHECK(latex.code == 0);
  CHECK(latex.out.find("\\begin{align*}") != std::string::npos);

  const auto norm = run({"gt", "2,1^+", "--normalize"});
  CHECK(norm.out.find("sqrt(2)") != std::string::npos);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  CHECK(run({"assoc", "4,1"}).code == 2);
  const auto bad = run({"syt", "3,x"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("x") != std::string::npos);
  CHECK(run({"gt", "2,1"}).code == 2);
  CHECK(run({"yor", "3,1", "--gen", "4"}).code == 2);
  CHECK(run({"verify", "--max-n", "20"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("syt, yor and assoc", "[cli]") {
  CHECK(run({"syt", "2,1"}).out == "12/3\n13/2\n");
  CHECK(json::parse(run({"syt", "4,1,1", "--format", "json"}).out)["count"] == 10);
  const auto yor = run({"yor", "2,1", "--gen", "2"});
  CHECK(yor.code == 0);
  CHECK(yor.out.find("1/2*sqrt(3)") != std::string::npos);
  CHECK(run({"yor", "2,1", "--gen", "2", "--format", "latex"}).out.find("pmatrix") != std::string::npos);
  const auto assoc = run({"assoc", "3,1,1"});
  CHECK(assoc.code == 0);
  CHECK(assoc.out.find("reference 123/4/5") != std::string::npos);
  CHECK(json::parse(run({"assoc", "2,1", "--format", "json"}).out)["entries"].size() == 2);
}

TEST_CASE("bratteli and paths", "[cli]") {
  const auto dot = run({"bratteli", "--chain", "alternating", "--max-n", "5", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("graph alternating", 0) == 0);
  const auto young = run({"bratteli", "--chain", "symmetric", "--max-n", "4", "--format", "json"});
  CHECK(json::parse(young.out)["nodes"].size() == 1 + 2 + 3 + 5);
  const auto paths = run({"paths", "4,1,1", "--format", "json"});
  CHECK(paths.code == 0);
  CHECK(json::parse(paths.out)["representatives"].size() == 10);
}

TEST_CASE("verify", "[cli]") {
  const auto r = run({"verify", "--suite", "all", "--max-n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 failed") != std::string::npos);
  const auto j = run({"verify", "--suite", "assoc", "--max-n", "5", "--format", "json"});
  CHECK(json::parse(j.out).size() == 3);
}
