#include <sstream>

#include "catch_amalgamated.hpp"

#include "altgt/altgt.hpp"

using namespace altgt;

namespace {
irrep_vector v(const char* text) { return irrep_vector::basis(parse_tableau(text)); }
}  // namespace

TEST_CASE("label text form", "[io]") {
  CHECK(parse_label("2,1^+") == alt_label(partition{2, 1}, sign::plus));
  CHECK(parse_label("3,1") == alt_label(partition{3, 1}));
  CHECK(to_string(parse_label("3,1,1^-")) == "3,1,1^-");
  CHECK(to_latex(parse_label("3,1,1^-")) == "(3,1,1)^-");
  CHECK(to_json(parse_label("2,1^+")) == json::parse(R"({"partition":[2,1],"sign":"+"})"));
  CHECK(to_json(parse_label("3")) == json::parse(R"({"partition":[3],"sign":null})"));
  CHECK_THROWS_AS(parse_label("2,1"), parse_error);
  CHECK_THROWS_AS(parse_label("3,1^+"), parse_error);
  CHECK_THROWS_AS(parse_label("2,1^*"), parse_error);
  CHECK_THROWS_AS(parse_label("2,1\xc2\xb2"), parse_error);
}

TEST_CASE("path text form", "[io]") {
  const alt_path p = parse_path("2; 2,1^+ ;3,1");
  CHECK(to_string(p) == "2;2,1^+;3,1");
  CHECK(to_json(p).size() == 3);
  CHECK_THROWS_AS(parse_path("2;;3"), parse_error);
}

TEST_CASE("vector text forms", "[io]") {
  const irrep_vector u = v("124/3/5") + scalar::i() * v("134/2/5") - v("135/2/4");
  CHECK(to_string(u) == "v[124/3/5] + i v[134/2/5] - v[135/2/4]");
  CHECK(to_string(-scalar::i() * v("12/3")) == "-i v[12/3]");
  CHECK(to_string(irrep_vector(partition{2})) == "0");
  CHECK(to_latex(v("12/3") - scalar::i() * v("13/2")) == "v_{\\ytableaushort{12,3}} - i v_{\\ytableaushort{13,2}}");
  const json j = to_json(v("12/3"));
  CHECK(j["shape"] == json::parse("[2,1]"));
  CHECK(j["terms"][0]["tableau"] == json::parse("[[1,2],[3]]"));
  CHECK(scalar_from_json(j["terms"][0]["coeff"]) == scalar(1));
}

TEST_CASE("matrix forms", "[io]") {
  const scalar_matrix m = rep_matrix(partition{2, 1}, 2);
  CHECK(to_json(m).size() == 2);
  CHECK(to_latex(m).find("\\begin{pmatrix}") != std::string::npos);
  CHECK(to_latex(m).find("\\sqrt{3}") != std::string::npos);
  CHECK(to_string(m).find("1/2*sqrt(3)") != std::string::npos);
}

TEST_CASE("Bratteli DOT and JSON", "[io]") {
  std::ostringstream dot;
  write_dot(dot, bratteli(4), "alternating");
  const std::string s = dot.str();
  CHECK(s.rfind("graph alternating {", 0) == 0);
  CHECK(s.find("color=red") != std::string::npos);
  CHECK(s.find("color=green") != std::string::npos);
  CHECK(s.find("rank=same") != std::string::npos);

  const json j = to_json(bratteli(4));
  CHECK(j["edge_count"] == bratteli(4).edges.size());
  CHECK(j["nodes"].size() == bratteli(4).nodes.size());
}
