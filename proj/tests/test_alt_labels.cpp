#include <set>

#include "catch_amalgamated.hpp"

#include "altgt/alt_labels.hpp"
#include "altgt/io.hpp"
#include "oracles.hpp"

using namespace altgt;

namespace {

alt_label lab(const char* text) { return parse_label(text); }

std::vector<alt_label> labs(std::initializer_list<const char*> texts) {
  std::vector<alt_label> out;
  for (const char* t : texts) out.push_back(lab(t));
  return out;
}

std::set<std::string> as_set(const std::vector<alt_label>& v) {
  std::set<std::string> out;
  for (const auto& a : v) out.insert(to_string(a));
  return out;
}

}  // namespace

TEST_CASE("labels of small n", "[alt_labels]") {
  CHECK(labels(2) == labs({"2", "1,1"}));
  CHECK(labels(3) == labs({"3", "2,1^+", "2,1^-", "1,1,1"}));
  CHECK(as_set(labels(4)) == as_set(labs({"4", "3,1", "2,1,1", "1,1,1,1", "2,2^+", "2,2^-"})));
  CHECK_THROWS_AS(labels(1), std::domain_error);
  CHECK_THROWS_AS(alt_label(partition{2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(alt_label(partition{3}, sign::plus), std::invalid_argument);
}

TEST_CASE("label equivalence", "[alt_labels]") {
  CHECK(equivalent(lab("3,1"), lab("2,1,1")));
  CHECK_FALSE(equivalent(lab("2,1^+"), lab("2,1^-")));
  CHECK(equivalent(lab("4"), lab("4")));
  CHECK_FALSE(equivalent(lab("4"), lab("3,1")));
  CHECK_THROWS_AS(equivalent(lab("4"), lab("3")), std::domain_error);
  CHECK(equivalence_class(lab("2,1^-")) == labs({"2,1^-"}));
  CHECK(as_set(equivalence_class(lab("3,1"))) == as_set(labs({"3,1", "2,1,1"})));
}

TEST_CASE("dagger branching", "[alt_labels]") {
  CHECK(as_set(dagger_down_set(lab("3,1"))) == as_set(labs({"3", "2,1^+", "2,1^-"})));
  CHECK(as_set(dagger_down_set(lab("3,2,1^+"))) == as_set(labs({"3,1,1^+", "3,2", "2,2,1"})));
  CHECK(as_set(dagger_down_set(lab("2,1^-"))) == as_set(labs({"2", "1,1"})));
  CHECK(as_set(dagger_down_set(lab("3,2,1^-"))) == as_set(labs({"3,1,1^-", "3,2", "2,2,1"})));
  CHECK_THROWS_AS(dagger_down_set(lab("2")), std::domain_error);
  CHECK(in_dagger(lab("2,1^+"), lab("3,1")));
  CHECK_FALSE(in_dagger(lab("3,1,1^-"), lab("3,2,1^+")));
}

TEST_CASE("alternating dimensions", "[alt_labels]") {
  CHECK(dim_alt(lab("2,1^+")) == 1);
  CHECK(dim_alt(lab("4,1,1")) == 10);
  CHECK(dim_alt(lab("7")) == 1);
  CHECK(dim_alt(lab("3,1,1^-")) == 3);
}

TEST_CASE("dimensions against exhaustive enumeration", "[alt_labels][oracle]") {
  for (int n = 2; n <= 8; ++n) {
    long long sum = 0;
    for (const auto& alpha : labels(n)) {
      const long long f = oracle::exhaustive_syt_count(alpha.shape());
      const long long d = alpha.is_signed() ? f / 2 : f;
      CHECK(dim_alt(alpha) == d);
      if (canonical_label(alpha) == alpha) sum += d * d;
    }
    CHECK(sum == oracle::factorial(n) / 2);
  }
}

TEST_CASE("branching rule dimension count", "[alt_labels][property]") {
  // Restriction from A_n to A_{n-1}: dim alpha = sum over alpha-dagger, after
  // identifying conjugate pairs.
  for (int n = 3; n <= 9; ++n) {
    for (const auto& alpha : labels(n)) {
      long long total = 0;
      for (const auto& beta : dagger_down_set(alpha)) total += dim_alt(beta);
      std::set<std::string> classes;
      for (const auto& beta : dagger_down_set(alpha)) classes.insert(to_string(canonical_label(beta)));
      long long restricted = 0;
      for (const auto& c : classes) restricted += dim_alt(lab(c.c_str()));
      CHECK(restricted == dim_alt(alpha));
      if (!alpha.is_signed()) CHECK(total == restricted);
    }
  }
}

TEST_CASE("Bratteli diagram", "[alt_labels]") {
  const auto g = bratteli(8);
  auto node = [&](const char* text) {
    const auto a = lab(text);
    for (const auto& v : g.nodes)
      if (v.shape == a.shape() && v.sign == a.sign()) return static_cast<std::size_t>(&v - g.nodes.data());
    FAIL("node missing: " << text);
    return std::size_t{0};
  };
  const auto has_edge = [&](std::size_t lo, std::size_t hi) {
    return std::find(g.edges.begin(), g.edges.end(), std::pair{lo, hi}) != g.edges.end();
  };
  CHECK(has_edge(node("3,3,1"), node("4,2,2")));
  CHECK(has_edge(node("2,1^+"), node("3,1")));
  CHECK(has_edge(node("2,1^-"), node("2,2^-")));
  CHECK(has_edge(node("3,1,1^+"), node("3,2,1^+")));
  CHECK_FALSE(has_edge(node("2,1^+"), node("2,2^-")));

  std::map<int, long long> per_level;
  for (const auto& v : g.nodes) {
    ++per_level[v.level];
    CHECK(canonical_label(alt_label(v.shape, v.sign)) == alt_label(v.shape, v.sign));
  }
  for (int n = 2; n <= 8; ++n) {
    std::set<std::string> canon;
    for (const auto& a : labels(n)) canon.insert(to_string(canonical_label(a)));
    CHECK(per_level[n] == static_cast<long long>(canon.size()));
  }
  CHECK_THROWS_AS(bratteli(1), std::domain_error);
}

TEST_CASE("Young's graph", "[alt_labels]") {
  const auto g = young_graph(6);
  CHECK(g.nodes.size() == 1 + 2 + 3 + 5 + 7 + 11);
  std::size_t edges = 0;
  for (int n = 2; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) edges += down_set(lambda).size();
  CHECK(g.edges.size() == edges);
}
