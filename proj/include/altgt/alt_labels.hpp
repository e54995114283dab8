#pragma once

/// Index set for irreducible representations of A_n: every partition that is
/// not self-conjugate, and every self-conjugate partition twice, tagged + or
/// -. Also the branching relation between consecutive levels and the
/// Bratteli diagram of the alternating tower.

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"
#include "tableau.hpp"

namespace altgt {

enum class sign { plus, minus };

inline std::string to_string(const partition& lambda) {
  std::string s;
  for (int p : lambda.parts()) {
    if (!s.empty()) s += ',';
    s += std::to_string(p);
  }
  return s;
}

/// A partition, tagged with a sign exactly when it is self-conjugate.
class alt_label {
 public:
  alt_label() = default;

  explicit alt_label(partition lambda, std::optional<altgt::sign> s = std::nullopt)
      : partition_(std::move(lambda)), sign_(s) {
    if (is_self_conjugate(partition_) != sign_.has_value())
      throw std::invalid_argument("a sign is required exactly for self-conjugate partitions: " +
                                  altgt::to_string(partition_));
  }

  [[nodiscard]] const altgt::partition& shape() const { return partition_; }
  [[nodiscard]] std::optional<altgt::sign> sign() const { return sign_; }
  [[nodiscard]] bool is_signed() const { return sign_.has_value(); }
  [[nodiscard]] int size() const { return partition_.size(); }

  friend bool operator==(const alt_label&, const alt_label&) = default;

 private:
  altgt::partition partition_;
  std::optional<altgt::sign> sign_;
};

inline std::string to_string(const alt_label& a) {
  std::string s = to_string(a.shape());
  if (a.sign()) s += (*a.sign() == sign::plus) ? "^+" : "^-";
  return s;
}

/// Total order used for path representatives and listings: partitions in
/// ordinary lexicographic order, then unsigned < + < -.
inline std::strong_ordering label_order(const alt_label& a, const alt_label& b) {
  if (auto c = a.shape() <=> b.shape(); c != 0) return c;
  auto rank = [](const alt_label& x) { return x.sign() ? (*x.sign() == sign::plus ? 1 : 2) : 0; };
  return rank(a) <=> rank(b);
}

/// All labels of size n: partitions in reverse lexicographic order, with
/// self-conjugate ones emitted as + then -.
inline std::vector<alt_label> labels(int n) {
  if (n < 2) throw std::domain_error("alternating labels need n >= 2");
  std::vector<alt_label> out;
  for (const auto& lambda : partitions_of(n)) {
    if (is_self_conjugate(lambda)) {
      out.emplace_back(lambda, sign::plus);
      out.emplace_back(lambda, sign::minus);
    } else {
      out.emplace_back(lambda);
    }
  }
  return out;
}

/// alpha ~ beta: equal, or an unsigned conjugate pair.
inline bool equivalent(const alt_label& a, const alt_label& b) {
  if (a.size() != b.size()) throw std::domain_error("labels have different sizes");
  if (a == b) return true;
  return !a.is_signed() && !b.is_signed() && b.shape() == conjugate(a.shape());
}

/// Labels equivalent to a (a itself first).
inline std::vector<alt_label> equivalence_class(const alt_label& a) {
  std::vector<alt_label> out{a};
  if (!a.is_signed()) out.emplace_back(conjugate(a.shape()));
  return out;
}

/// The labels beta of size n-1 with beta in alpha-dagger. Every member has a
/// partition genuinely contained in alpha's; signs pass unchanged between
/// self-conjugate levels, and a self-conjugate partition below an unsigned
/// label contributes both signs.
inline std::vector<alt_label> dagger_down_set(const alt_label& alpha) {
  if (alpha.size() < 3) throw std::domain_error("branching needs n >= 3");
  std::vector<alt_label> out;
  for (const auto& mu : down_set(alpha.shape())) {
    if (!is_self_conjugate(mu)) {
      out.emplace_back(mu);
    } else if (alpha.is_signed()) {
      out.emplace_back(mu, alpha.sign());
    } else {
      out.emplace_back(mu, sign::plus);
      out.emplace_back(mu, sign::minus);
    }
  }
  return out;
}

inline bool in_dagger(const alt_label& beta, const alt_label& alpha) {
  if (alpha.size() < 3 || beta.size() + 1 != alpha.size()) return false;
  const auto down = dagger_down_set(alpha);
  return std::find(down.begin(), down.end(), beta) != down.end();
}

inline long long syt_count(const partition& lambda) {
  return static_cast<long long>(enumerate_syt(lambda).size());
}

inline long long dim_alt(const alt_label& alpha) {
  const long long f = syt_count(alpha.shape());
  return alpha.is_signed() ? f / 2 : f;
}

/// Replaces an unsigned label by the reverse-lex first of itself and its
/// conjugate; signed labels are returned unchanged.
inline alt_label canonical_label(const alt_label& a) {
  if (a.is_signed()) return a;
  return alt_label(canonical_pair_rep(a.shape()));
}

struct bratteli_node {
  std::string id;
  int level = 0;
  partition shape;
  std::optional<altgt::sign> sign;
};

/// Graded graph; edges are (lower node, upper node) indices into nodes.
struct bratteli_diagram {
  std::vector<bratteli_node> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Young's graph on partitions of 1..max_n.
inline bratteli_diagram young_graph(int max_n) {
  if (max_n < 1) throw std::domain_error("Young's graph needs max_n >= 1");
  bratteli_diagram g;
  std::map<partition, std::size_t> index;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      index.emplace(lambda, g.nodes.size());
      g.nodes.push_back({to_string(lambda), n, lambda, std::nullopt});
      if (n == 1) continue;
      for (const auto& mu : down_set(lambda)) g.edges.emplace_back(index.at(mu), index.at(lambda));
    }
  }
  return g;
}

/// Bratteli diagram of A_2 < A_3 < ... < A_max_n. Nodes are canonical
/// labels; an edge joins beta to alpha when some label equivalent to beta
/// lies in the dagger set of some label equivalent to alpha, which is how
/// conjugate-mediated edges such as (4,2,2) -- (3,3,1) arise.
inline bratteli_diagram bratteli(int max_n) {
  if (max_n < 2) throw std::domain_error("alternating Bratteli diagram needs max_n >= 2");
  bratteli_diagram g;
  std::map<std::string, std::size_t> index;
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& alpha : labels(n)) {
      if (canonical_label(alpha) != alpha) continue;
      const std::string id = to_string(alpha);
      index.emplace(id, g.nodes.size());
      g.nodes.push_back({id, n, alpha.shape(), alpha.sign()});
      if (n == 2) continue;
      std::vector<std::size_t> lower;
      for (const auto& member : equivalence_class(alpha)) {
        for (const auto& beta : dagger_down_set(member)) lower.push_back(index.at(to_string(canonical_label(beta))));
      }
      std::sort(lower.begin(), lower.end());
      lower.erase(std::unique(lower.begin(), lower.end()), lower.end());
      for (std::size_t b : lower) g.edges.emplace_back(b, index.at(id));
    }
  }
  return g;
}

}  // namespace altgt
