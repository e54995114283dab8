#pragma once

/// Exhaustive exact checks of the representation-theoretic identities.
///
/// Each suite walks shapes (or labels) in a fixed order. Checks for one
/// subject stop at the first failure, which becomes the witness; the suite
/// then moves on to the next subject. Suites are templated on the
/// simple-transposition action and the associator so that the harness can
/// be pointed at a deliberately broken implementation.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alt_labels.hpp"
#include "associator.hpp"
#include "geodesics.hpp"
#include "gt_basis.hpp"
#include "io.hpp"
#include "yor.hpp"

namespace altgt {

struct check_result {
  std::string suite;
  std::string subject;
  bool passed = true;
  std::string witness;
};

struct report {
  std::vector<check_result> results;

  [[nodiscard]] bool passed() const {
    return std::all_of(results.begin(), results.end(), [](const check_result& r) { return r.passed; });
  }
  [[nodiscard]] std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const check_result& r) { return !r.passed; }));
  }
  void append(const report& other) { results.insert(results.end(), other.results.begin(), other.results.end()); }
};

inline std::string to_string(const report& r) {
  std::string s;
  for (const auto& c : r.results) {
    s += (c.passed ? "PASS  " : "FAIL  ") + c.suite + "  " + c.subject;
    if (!c.passed) s += "  -- " + c.witness;
    s += '\n';
  }
  return s;
}

inline json to_json(const report& r) {
  json arr = json::array();
  for (const auto& c : r.results) {
    json j{{"suite", c.suite}, {"subject", c.subject}, {"status", c.passed ? "pass" : "fail"}};
    j["witness"] = c.passed ? json(nullptr) : json(c.witness);
    arr.push_back(std::move(j));
  }
  return arr;
}

namespace detail {

using witness = std::optional<std::string>;

/// Runs the checks of one subject; the first failure (or exception) wins.
inline check_result run_subject(const std::string& suite, const std::string& subject,
                                const std::vector<std::function<witness()>>& checks) {
  check_result out{suite, subject, true, {}};
  for (const auto& check : checks) {
    try {
      if (auto w = check()) {
        out.passed = false;
        out.witness = *w;
        break;
      }
    } catch (const std::exception& e) {
      out.passed = false;
      out.witness = std::string("exception: ") + e.what();
      break;
    }
  }
  return out;
}

inline witness compare_matrices(const scalar_matrix& lhs, const scalar_matrix& rhs, const std::string& what) {
  const scalar_matrix diff = lhs - rhs;
  if (auto at = diff.first_nonzero()) {
    return what + " fails at (" + std::to_string(at->first) + "," + std::to_string(at->second) +
           "), difference " + to_string(diff(at->first, at->second));
  }
  return std::nullopt;
}

inline witness compare_vectors(const irrep_vector& lhs, const irrep_vector& rhs, const std::string& what) {
  if (lhs == rhs) return std::nullopt;
  return what + ": " + to_string(lhs) + " != " + to_string(rhs);
}

/// The c_{T_lambda} values tabulated for self-conjugate partitions of n < 10.
inline const std::vector<std::pair<partition, fourth_root>>& reference_factor_table() {
  static const std::vector<std::pair<partition, fourth_root>> table{
      {partition{2, 1}, fourth_root::plus_i},          {partition{2, 2}, fourth_root::plus_i},
      {partition{3, 1, 1}, fourth_root::minus_one},    {partition{3, 2, 1}, fourth_root::minus_one},
      {partition{4, 1, 1, 1}, fourth_root::minus_i},   {partition{4, 2, 1, 1}, fourth_root::minus_i},
      {partition{3, 3, 2}, fourth_root::minus_i},      {partition{3, 3, 3}, fourth_root::minus_i},
      {partition{5, 1, 1, 1, 1}, fourth_root::plus_one},
  };
  return table;
}

}  // namespace detail

/// Coxeter relations and symmetry of Young's matrices, plus compatibility
/// with the embeddings V_mu -> V_lambda, for every partition of 2..max_n.
template <class Rep = young_orthogonal>
report verify_yor(int max_n) {
  using detail::witness;
  report out;
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      std::vector<scalar_matrix> m(static_cast<std::size_t>(n));
      auto gen = [&](int i) -> const scalar_matrix& {
        if (m[i].rows() == 0) m[i] = rep_matrix<Rep>(lambda, i);
        return m[i];
      };
      const auto id = scalar_matrix::identity(enumerate_syt(lambda).size());
      std::vector<std::function<witness()>> checks;
      checks.emplace_back([&]() -> witness {
        for (int i = 1; i < n; ++i) {
          if (auto w = detail::compare_matrices(gen(i) * gen(i), id, "s_" + std::to_string(i) + "^2 = 1")) return w;
        }
        return std::nullopt;
      });
      checks.emplace_back([&]() -> witness {
        for (int i = 1; i < n; ++i) {
          if (!gen(i).is_real()) return "s_" + std::to_string(i) + " has a non-real entry";
          if (auto w = detail::compare_matrices(gen(i), gen(i).transpose(), "s_" + std::to_string(i) + " symmetric"))
            return w;
        }
        return std::nullopt;
      });
      checks.emplace_back([&]() -> witness {
        for (int i = 1; i + 1 < n; ++i) {
          const auto& a = gen(i);
          const auto& b = gen(i + 1);
          if (auto w = detail::compare_matrices(a * b * a, b * a * b, "braid relation at " + std::to_string(i)))
            return w;
        }
        return std::nullopt;
      });
      checks.emplace_back([&]() -> witness {
        for (int i = 1; i < n; ++i) {
          for (int j = i + 2; j < n; ++j) {
            if (auto w = detail::compare_matrices(gen(i) * gen(j), gen(j) * gen(i),
                                                  "s_" + std::to_string(i) + " s_" + std::to_string(j) + " commute"))
              return w;
          }
        }
        return std::nullopt;
      });
      checks.emplace_back([&]() -> witness {
        for (const auto& mu : down_set(lambda)) {
          for (const auto& t : enumerate_syt(mu)) {
            const irrep_vector v = irrep_vector::basis(t);
            for (int i = 1; i + 1 < n; ++i) {
              if (auto w = detail::compare_vectors(embed(act_simple<Rep>(mu, i, v), lambda),
                                                   act_simple<Rep>(lambda, i, embed(v, lambda)),
                                                   "embedding of " + to_string(mu) + " intertwines s_" +
                                                       std::to_string(i) + " at " + to_string(t)))
                return w;
            }
          }
        }
        return std::nullopt;
      });
      out.results.push_back(detail::run_subject("yor", to_string(lambda), checks));
    }
  }
  return out;
}

/// Identities of the normalized associator for every self-conjugate
/// partition of 3..max_n.
template <class Rep = young_orthogonal, class Phi = normalized_associator>
report verify_associator(int max_n) {
  using detail::witness;
  report out;
  for (int n = 3; n <= max_n; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      if (!is_self_conjugate(lambda)) continue;
      const auto basis = enumerate_syt(lambda);
      const std::size_t f = basis.size();
      const scalar_matrix phi = phi_matrix<Phi>(lambda);
      const auto id = scalar_matrix::identity(f);
      std::vector<std::function<witness()>> checks;
      checks.emplace_back([&]() -> witness {
        for (const auto& [shape, value] : detail::reference_factor_table()) {
          if (shape != lambda) continue;
          const scalar c = Phi::coeff(lambda, reference_tableau(lambda));
          if (c != from_fourth_root(value))
            return "c at the reference tableau is " + to_string(c) + ", table value " + to_string(value);
        }
        return std::nullopt;
      });
      checks.emplace_back([&]() -> witness {
        for (std::size_t c = 0; c < f; ++c) {
          const std::size_t expected_row = static_cast<std::size_t>(
              std::find(basis.begin(), basis.end(), conjugate_tableau(basis[c])) - basis.begin());
          for (std::size_t r = 0; r < f; ++r) {
            const scalar& x = phi(r, c);
            if (r == expected_row && !x.as_fourth_root()) return "phi entry at " + to_string(basis[c]) + " is not a unit";
            if (r != expected_row && !x.is_zero()) return "phi is not the transpose pairing at column " + to_string(basis[c]);
          }
        }
        return std::nullopt;
      });
      checks.emplace_back([&]() -> witness { return detail::compare_matrices(phi * phi, id, "phi^2 = 1"); });
      checks.emplace_back([&]() -> witness {
        for (int i = 1; i < n; ++i) {
          const scalar_matrix s = rep_matrix<Rep>(lambda, i);
          if (auto w = detail::compare_matrices(s * phi + phi * s, scalar_matrix(f, f),
                                                "anti-commutation with s_" + std::to_string(i)))
            return w;
        }
        return std::nullopt;
      });
      checks.emplace_back([&]() -> witness {
        for (const auto& t : basis) {
          for (int i = 1; i < n; ++i) {
            const cell a = t.position(i);
            const cell b = t.position(i + 1);
            if (a.row == b.row || a.col == b.col) continue;
            if (Phi::coeff(lambda, swap_adjacent(t, i)) != -Phi::coeff(lambda, t))
              return "c(s_" + std::to_string(i) + "T) != -c(T) at T = " + to_string(t);
          }
        }
        return std::nullopt;
      });
      checks.emplace_back([&]() -> witness {
        const std::size_t plus = f - gaussian_rank(phi - id);
        const std::size_t minus = f - gaussian_rank(phi + id);
        if (2 * plus != f || 2 * minus != f)
          return "eigenspace dimensions " + std::to_string(plus) + " (+1) and " + std::to_string(minus) +
                 " (-1), expected " + std::to_string(f / 2) + " each";
        return std::nullopt;
      });
      checks.emplace_back([&]() -> witness {
        const auto [mu, role] = self_conjugate_cover_partner(lambda);
        if (role != cover_role::larger) return std::nullopt;
        for (const auto& t : enumerate_syt(mu)) {
          const irrep_vector v = irrep_vector::basis(t);
          if (auto w = detail::compare_vectors(apply_phi<Phi>(lambda, embed(v, lambda)), embed(apply_phi<Phi>(mu, v), lambda),
                                               "phi restricts to phi of " + to_string(mu) + " at " + to_string(t)))
            return w;
        }
        return std::nullopt;
      });
      out.results.push_back(detail::run_subject("assoc", to_string(lambda), checks));
    }
  }
  return out;
}

/// Checks the Gelfand-Tsetlin basis of V_alpha.
///
/// Beyond the basic shape of the answer (count, unit coefficients,
/// orthogonality), membership in the right Gelfand-Tsetlin line is tested
/// level by level: for each k, the terms of u sharing a chain of prefix
/// shapes (lambda^(k), ..., lambda^(n)) form a copy of a vector of
/// V_{lambda^(k)}; if alpha^(k) is signed that vector must be a
/// phi-eigenvector with the matching eigenvalue, and otherwise lambda^(k)
/// must be alpha^(k) or its conjugate.
template <class Rep = young_orthogonal, class Phi = normalized_associator>
report verify_gt(const alt_label& alpha) {
  using detail::witness;
  const int n = alpha.size();
  const auto basis = gt_basis<Phi>(alpha);
  const partition& lambda = alpha.shape();
  std::vector<std::function<witness()>> checks;

  checks.emplace_back([&]() -> witness {
    if (static_cast<long long>(basis.size()) != dim_alt(alpha))
      return std::to_string(basis.size()) + " vectors, dimension " + std::to_string(dim_alt(alpha));
    for (const auto& e : basis) {
      if (e.path.back() != alpha) return "representative " + to_string(e.path) + " does not end at the label";
      if (e.vector.is_zero()) return "zero vector for " + to_string(e.path);
    }
    return std::nullopt;
  });
  checks.emplace_back([&]() -> witness {
    for (const auto& e : basis)
      for (const auto& [t, c] : e.vector.terms())
        if (!c.as_fourth_root()) return "coefficient " + to_string(c) + " of " + to_string(t) + " in " + to_string(e.path);
    return std::nullopt;
  });
  checks.emplace_back([&]() -> witness {
    for (const auto& e : basis) {
      for (const auto& [t, c] : e.vector.terms()) {
        for (int k = 2; k <= n; ++k) {
          const partition p = prefix_shape(t, k);
          const partition& want = e.path.at_level(k).shape();
          if (p != want && p != conjugate(want))
            return "prefix shape " + to_string(p) + " at level " + std::to_string(k) + " of " + to_string(t) + " in " +
                   to_string(e.path);
        }
      }
    }
    return std::nullopt;
  });
  checks.emplace_back([&]() -> witness {
    if (!alpha.is_signed()) return std::nullopt;
    const scalar s = *alpha.sign() == sign::plus ? scalar(1) : scalar(-1);
    for (const auto& e : basis)
      if (auto w = detail::compare_vectors(apply_phi<Phi>(lambda, e.vector), s * e.vector,
                                           "phi eigenvector for " + to_string(e.path)))
        return w;
    return std::nullopt;
  });
  checks.emplace_back([&]() -> witness {
    for (const auto& e : basis) {
      for (int k = 2; k < n; ++k) {
        const alt_label& label = e.path.at_level(k);
        if (!label.is_signed()) continue;
        std::map<std::vector<partition>, irrep_vector> blocks;
        for (const auto& [t, c] : e.vector.terms()) {
          std::vector<partition> chain;
          for (int j = k; j <= n; ++j) chain.push_back(prefix_shape(t, j));
          auto it = blocks.try_emplace(chain, irrep_vector(chain.front())).first;
          it->second.add(truncate(t, k), c);
        }
        const scalar s = *label.sign() == sign::plus ? scalar(1) : scalar(-1);
        for (const auto& [chain, w] : blocks) {
          if (chain.front() != label.shape())
            return "level " + std::to_string(k) + " block has shape " + to_string(chain.front()) + " in " +
                   to_string(e.path);
          if (auto bad = detail::compare_vectors(apply_phi<Phi>(label.shape(), w), s * w,
                                                 "level " + std::to_string(k) + " block eigenvector in " +
                                                     to_string(e.path)))
            return bad;
        }
      }
    }
    return std::nullopt;
  });
  checks.emplace_back([&]() -> witness {
    if (n < 3) return std::nullopt;
    for (const auto& e : basis) {
      const alt_path prev = e.path.truncated();
      if (auto w = detail::compare_vectors(restrict(e.vector, prev.back().shape()), gt_vector<Phi>(prev),
                                           "restriction to " + to_string(prev.back().shape()) + " of " +
                                               to_string(e.path)))
        return w;
    }
    return std::nullopt;
  });
  checks.emplace_back([&]() -> witness {
    // V_lambda^+ and V_lambda^- are A_n-stable; A_n is generated by s_1 s_j.
    if (!alpha.is_signed() || n < 3) return std::nullopt;
    const scalar s = *alpha.sign() == sign::plus ? scalar(1) : scalar(-1);
    for (const auto& e : basis) {
      for (int j = 2; j < n; ++j) {
        const std::vector<int> word{1, j};
        const irrep_vector moved = act_word<Rep>(lambda, word, e.vector);
        if (auto w = detail::compare_vectors(apply_phi<Phi>(lambda, moved), s * moved,
                                             "s_1 s_" + std::to_string(j) + " keeps " + to_string(e.path) +
                                                 " in its eigenspace"))
          return w;
      }
    }
    return std::nullopt;
  });
  checks.emplace_back([&]() -> witness {
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a + 1; b < basis.size(); ++b)
        if (const scalar ip = inner_product(basis[a].vector, basis[b].vector); !ip.is_zero())
          return "<" + to_string(basis[a].path) + ", " + to_string(basis[b].path) + "> = " + to_string(ip);
    return std::nullopt;
  });
  checks.emplace_back([&]() -> witness {
    for (const auto& e : basis) {
      for (const auto& other : class_members(e.path)) {
        if (other.back() != alpha || other == e.path) continue;
        const irrep_vector u = gt_vector<Phi>(other);
        if (u.support_size() != e.vector.support_size()) return "support sizes differ for " + to_string(other);
        std::optional<scalar> zeta;
        for (const auto& [t, c] : e.vector.terms()) {
          const scalar ratio = u.coefficient(t) * c.inverse();
          if (!ratio.as_fourth_root()) return "ratio " + to_string(ratio) + " is not a unit for " + to_string(other);
          if (zeta && *zeta != ratio) return "ratio is not constant for " + to_string(other);
          zeta = ratio;
        }
      }
    }
    return std::nullopt;
  });

  report out;
  out.results.push_back(detail::run_subject("gt", to_string(alpha), checks));
  return out;
}

/// verify_gt over every label of size 2..max_n, plus one entry per level
/// checking that the squared dimensions of inequivalent labels sum to n!/2.
template <class Rep = young_orthogonal, class Phi = normalized_associator>
report verify_gt_levels(int max_n) {
  report out;
  for (int n = 2; n <= max_n; ++n) {
    long long sum = 0;
    for (const auto& alpha : labels(n)) {
      out.append(verify_gt<Rep, Phi>(alpha));
      if (canonical_label(alpha) == alpha) sum += dim_alt(alpha) * dim_alt(alpha);
    }
    long long half_factorial = 1;
    for (int k = 3; k <= n; ++k) half_factorial *= k;
    check_result level{"gt", "level " + std::to_string(n), sum == half_factorial, {}};
    if (!level.passed) level.witness = "sum of squared dimensions " + std::to_string(sum) + " != " + std::to_string(half_factorial);
    out.results.push_back(std::move(level));
  }
  return out;
}

}  // namespace altgt
