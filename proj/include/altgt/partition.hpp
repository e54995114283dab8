#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace altgt {

/// A partition of n: weakly decreasing positive parts. The default value is
/// the empty partition of 0.
class partition {
 public:
  partition() = default;

  explicit partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (k > 0 && parts_[k] > parts_[k - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
      n_ += parts_[k];
    }
  }

  partition(std::initializer_list<int> parts) : partition(std::vector<int>(parts)) {}

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] std::span<const int> parts() const { return parts_; }

  /// Row length of 0-based row k, zero past the last row.
  [[nodiscard]] int row(int k) const {
    return (k >= 0 && k < length()) ? parts_[static_cast<std::size_t>(k)] : 0;
  }

  [[nodiscard]] bool contains_cell(int r, int c) const { return r >= 0 && c >= 0 && c < row(r); }

  /// Ordinary lexicographic order on the part sequence.
  friend auto operator<=>(const partition& a, const partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const partition& a, const partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Reverse lexicographic order: a precedes b when, at the first index where
/// the zero-padded parts differ, a has the larger part.
inline bool reverse_lex_less(const partition& a, const partition& b) {
  const int len = std::max(a.length(), b.length());
  for (int k = 0; k < len; ++k) {
    if (a.row(k) != b.row(k)) return a.row(k) > b.row(k);
  }
  return false;
}

inline partition conjugate(const partition& lambda) {
  std::vector<int> out;
  for (int j = 0; j < lambda.row(0); ++j) {
    int count = 0;
    while (lambda.row(count) > j) ++count;
    out.push_back(count);
  }
  return partition(std::move(out));
}

inline bool is_self_conjugate(const partition& lambda) { return conjugate(lambda) == lambda; }

/// max{i : i <= lambda_i}, i.e. the number of cells on the main diagonal.
inline int diagonal_length(const partition& lambda) {
  if (lambda.empty()) throw std::domain_error("diagonal length of the empty partition");
  int d = 0;
  while (lambda.row(d) >= d + 1) ++d;
  return d;
}

/// 0-based rows whose last cell is a removable corner.
inline std::vector<int> removable_rows(const partition& lambda) {
  std::vector<int> rows;
  for (int r = 0; r < lambda.length(); ++r) {
    if (lambda.row(r) > lambda.row(r + 1)) rows.push_back(r);
  }
  return rows;
}

/// 0-based rows where a cell can be added at the end.
inline std::vector<int> addable_rows(const partition& lambda) {
  std::vector<int> rows;
  for (int r = 0; r <= lambda.length(); ++r) {
    if (r == 0 || lambda.row(r) < lambda.row(r - 1)) rows.push_back(r);
  }
  return rows;
}

inline partition remove_cell(const partition& lambda, int r) {
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  if (r < 0 || r >= lambda.length() || lambda.row(r) <= lambda.row(r + 1))
    throw std::domain_error("row has no removable cell");
  if (--parts[static_cast<std::size_t>(r)] == 0) parts.pop_back();
  return partition(std::move(parts));
}

inline partition add_cell(const partition& lambda, int r) {
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  if (r < 0 || r > lambda.length() || (r > 0 && lambda.row(r) >= lambda.row(r - 1)))
    throw std::domain_error("row has no addable cell");
  if (r == lambda.length()) {
    parts.push_back(1);
  } else {
    ++parts[static_cast<std::size_t>(r)];
  }
  return partition(std::move(parts));
}

/// Partitions obtained by removing one box, in reverse lexicographic order.
inline std::vector<partition> down_set(const partition& lambda) {
  if (lambda.size() < 2) throw std::domain_error("down set needs n >= 2");
  std::vector<partition> out;
  for (int r : removable_rows(lambda)) out.push_back(remove_cell(lambda, r));
  std::sort(out.begin(), out.end(), reverse_lex_less);
  return out;
}

inline std::vector<partition> up_set(const partition& lambda) {
  std::vector<partition> out;
  for (int r : addable_rows(lambda)) out.push_back(add_cell(lambda, r));
  std::sort(out.begin(), out.end(), reverse_lex_less);
  return out;
}

/// True when mu is obtained from lambda by removing one box.
inline bool covers(const partition& lambda, const partition& mu) {
  if (mu.size() + 1 != lambda.size()) return false;
  int diff = 0;
  for (int k = 0; k < lambda.length(); ++k) {
    const int d = lambda.row(k) - mu.row(k);
    if (d < 0 || d > 1) return false;
    diff += d;
  }
  return diff == 1 && mu.length() <= lambda.length();
}

/// All partitions of n in reverse lexicographic order, starting with (n).
inline std::vector<partition> partitions_of(int n) {
  if (n < 0) throw std::domain_error("negative partition size");
  std::vector<partition> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
  return out;
}

enum class cover_role { smaller, larger };

/// The other member of the unique self-conjugate cover containing lambda.
/// (1) is paired with (2,1) as the smaller member.
inline std::pair<partition, cover_role> self_conjugate_cover_partner(const partition& lambda) {
  if (!is_self_conjugate(lambda)) throw std::domain_error("partition is not self-conjugate");
  if (lambda.size() == 1) return {partition{2, 1}, cover_role::smaller};
  const int d = diagonal_length(lambda);
  // cell (d,d) is removable iff row d ends there and row d+1 is shorter
  if (lambda.row(d - 1) == d && lambda.row(d) < d) return {remove_cell(lambda, d - 1), cover_role::larger};
  return {add_cell(lambda, d), cover_role::smaller};
}

/// The reverse-lexicographically first of {lambda, lambda'}.
inline partition canonical_pair_rep(const partition& lambda) {
  partition c = conjugate(lambda);
  return reverse_lex_less(c, lambda) ? c : lambda;
}

}  // namespace altgt
