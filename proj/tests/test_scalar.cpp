#include <random>

#include "catch_amalgamated.hpp"

#include "altgt/io.hpp"
#include "altgt/scalar.hpp"

using namespace altgt;

namespace {

scalar root(std::uint64_t q, rational c = 1, rational im = 0) { return scalar::radical(gaussian_rational(c, im), q); }

/// Random scalar with up to four terms over small radicands.
scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 4);
  std::uniform_int_distribution<int> rad(1, 30);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<scalar::term> t;
  for (int k = terms(rng); k > 0; --k)
    t.emplace_back(rad(rng), gaussian_rational(rational(num(rng), den(rng)), rational(num(rng), den(rng))));
  return scalar::from_terms(t);
}

}  // namespace

TEST_CASE("addition combines like radicals", "[scalar]") {
  CHECK(root(3, rational(1, 2)) + root(3, rational(1, 2)) == root(3));
  CHECK((root(3) + (-root(3))).is_zero());
  CHECK((root(3) + (-root(3))).terms().empty());
  // (i + sqrt2) + (1 - sqrt2) = 1 + i
  const scalar lhs = (scalar::i() + root(2)) + (scalar(1) - root(2));
  CHECK(lhs == scalar(gaussian_rational(1, 1)));
}

TEST_CASE("multiplication reduces radicands", "[scalar]") {
  CHECK(root(3) * root(3) == scalar(3));
  CHECK(root(6) * root(10) == root(15, 2));
  CHECK(scalar::i() * scalar::i() == scalar(-1));
  CHECK(root(12) == root(3, 2));
  CHECK(root(2) * root(3) == root(6));
}

TEST_CASE("conjugation flips only the imaginary part", "[scalar]") {
  CHECK(scalar::i().conj() == -scalar::i());
  const scalar x = scalar(1) + root(2, 0, 1);  // 1 + i sqrt2
  CHECK(x.conj() == scalar(1) - root(2, 0, 1));
  CHECK(scalar(rational(3, 5)).conj() == scalar(rational(3, 5)));
}

TEST_CASE("sqrt_rational is exact", "[scalar]") {
  CHECK(sqrt_rational(rational(3, 4)) == root(3, rational(1, 2)));
  CHECK(sqrt_rational(1) == scalar(1));
  CHECK(sqrt_rational(0).is_zero());
  CHECK(sqrt_rational(rational(8, 9)) == root(2, rational(2, 3)));
  CHECK_THROWS_AS(sqrt_rational(rational(-1, 2)), std::domain_error);
}

TEST_CASE("fourth roots of unity are recognised", "[scalar]") {
  CHECK(scalar(-scalar::i()).as_fourth_root() == fourth_root::minus_i);
  CHECK(scalar(1).as_fourth_root() == fourth_root::plus_one);
  CHECK(scalar(-1).as_fourth_root() == fourth_root::minus_one);
  CHECK(scalar::i().as_fourth_root() == fourth_root::plus_i);
  CHECK_FALSE(root(3, rational(1, 2)).as_fourth_root());
  CHECK_FALSE(scalar(gaussian_rational(1, 1)).as_fourth_root());
  CHECK_FALSE(scalar().as_fourth_root());
  for (int k = -4; k < 8; ++k) CHECK(i_power(k).as_fourth_root());
  CHECK(i_power(3) == -scalar::i());
}

TEST_CASE("inverse is limited to single terms", "[scalar]") {
  CHECK(root(3, 2).inverse() * root(3, 2) == scalar(1));
  CHECK(scalar(gaussian_rational(1, 2)).inverse() * scalar(gaussian_rational(1, 2)) == scalar(1));
  CHECK_THROWS_AS((scalar(1) + root(2)).inverse(), std::domain_error);
  CHECK_THROWS_AS(scalar().inverse(), std::domain_error);
}

TEST_CASE("ring axioms hold exactly on random scalars", "[scalar][property]") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const scalar a = random_scalar(rng);
    const scalar b = random_scalar(rng);
    const scalar c = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + (-a)).terms().empty());
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK(scalar_from_json(to_json(a)) == a);
  }
}

TEST_CASE("square of sqrt_rational recovers the rational", "[scalar][property]") {
  for (int num = 0; num <= 40; ++num) {
    for (int den = 1; den <= 12; ++den) {
      const rational q(num, den);
      const scalar s = sqrt_rational(q);
      CHECK(s * s == scalar(q));
      CHECK(s.is_real());
    }
  }
}

TEST_CASE("scalar text and JSON forms", "[scalar][io]") {
  CHECK(to_string(scalar()) == "0");
  CHECK(to_string(root(3, rational(1, 2))) == "1/2*sqrt(3)");
  CHECK(to_string(root(3, rational(-1, 2))) == "-1/2*sqrt(3)");
  CHECK(to_string(-scalar::i()) == "-i");
  CHECK(to_string(scalar(1) + root(2, 0, 1)) == "1 + i*sqrt(2)");
  CHECK(to_string(scalar(gaussian_rational(rational(1, 2), -1))) == "(1/2-i)");
  CHECK(to_latex(root(3, rational(1, 2))) == "\\frac{1}{2}\\sqrt{3}");

  const json j = to_json(root(3, rational(-1, 2)) + scalar::i());
  CHECK(j == json::parse(R"([{"radicand":1,"re":"0","im":"1"},{"radicand":3,"re":"-1/2","im":"0"}])"));
  CHECK_THROWS(scalar_from_json(json::parse(R"([{"radicand":0,"re":"1","im":"0"}])")));
  CHECK_THROWS(rational_from_string("1/0"));
  CHECK_THROWS(rational_from_string("x"));
  CHECK(rational_from_string("3/-6") == rational(-1, 2));
}
