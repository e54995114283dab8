#include "catch_amalgamated.hpp"

#include "altgt/io.hpp"
#include "altgt/associator.hpp"
#include "oracles.hpp"

using namespace altgt;

namespace {
standard_tableau tab(const char* text) { return parse_tableau(text); }
}  // namespace

TEST_CASE("associator coefficients at reference tableaux", "[associator]") {
  CHECK(assoc_coeff(partition{2, 1}, tab("12/3")) == scalar::i());
  CHECK(assoc_coeff(partition{3, 1, 1}, tab("123/4/5")) == scalar(-1));
  CHECK(assoc_coeff(partition{3, 3, 3}, reference_tableau(partition{3, 3, 3})) == -scalar::i());
  CHECK_THROWS_AS(assoc_coeff(partition{3, 1}, tab("123/4")), std::domain_error);
}

TEST_CASE("associator on basis vectors", "[associator]") {
  CHECK(apply_phi(partition{2, 1}, irrep_vector::basis(tab("12/3"))) == scalar::i() * irrep_vector::basis(tab("13/2")));
  CHECK(apply_phi(partition{3, 1, 1}, irrep_vector::basis(tab("124/3/5"))) == irrep_vector::basis(tab("135/2/4")));
  CHECK(apply_phi(partition{3, 1, 1}, irrep_vector::basis(tab("134/2/5"))) == -irrep_vector::basis(tab("125/3/4")));
  CHECK_THROWS_AS(apply_phi(partition{3, 1}, irrep_vector::basis(tab("123/4"))), std::domain_error);
}

TEST_CASE("associator matrices", "[associator]") {
  scalar_matrix expected(2, 2);
  expected(1, 0) = scalar::i();
  expected(0, 1) = -scalar::i();
  CHECK(phi_matrix(partition{2, 1}) == expected);

  const scalar_matrix m = phi_matrix(partition{2, 2});
  CHECK(m * m == scalar_matrix::identity(2));
  CHECK(m(1, 0).as_fourth_root());
  CHECK(m(0, 1).as_fourth_root());
  CHECK(m(0, 0).is_zero());
}

TEST_CASE("associator identities up to n = 7", "[associator][property]") {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      if (!is_self_conjugate(lambda)) continue;
      const auto basis = enumerate_syt(lambda);
      const scalar_matrix phi = oracle::dense_matrix(basis, [&](const standard_tableau& t) {
        irrep_vector v(lambda);
        v.add(conjugate_tableau(t), assoc_coeff(lambda, t));
        return v;
      });
      CHECK(phi == phi_matrix(lambda));
      CHECK(phi * phi == scalar_matrix::identity(basis.size()));
      for (int i = 1; i < n; ++i) {
        const scalar_matrix s = rep_matrix(lambda, i);
        CHECK((phi * s + s * phi).is_zero());
      }
      // eigenvalue +1 and -1 each with multiplicity f/2
      const auto id = scalar_matrix::identity(basis.size());
      CHECK(gaussian_rank(phi - id) == basis.size() / 2);
      CHECK(gaussian_rank(phi + id) == basis.size() / 2);
    }
  }
}

TEST_CASE("associator restricts across self-conjugate covers", "[associator][property]") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      if (!is_self_conjugate(lambda)) continue;
      const auto [mu, role] = self_conjugate_cover_partner(lambda);
      if (role != cover_role::larger) continue;
      for (const auto& t : enumerate_syt(mu)) {
        const irrep_vector v = irrep_vector::basis(t);
        CHECK(apply_phi(lambda, embed(v, lambda)) == embed(apply_phi(mu, v), lambda));
      }
    }
  }
}
