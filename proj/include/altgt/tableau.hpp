#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <utility>
#include <vector>

#include "partition.hpp"

namespace altgt {

/// 0-based (row, column) of a box.
struct cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const cell&, const cell&) = default;
};

/// A standard Young tableau. Rows are stored top to bottom; the position of
/// every entry is cached for O(1) lookups of i and i+1.
class standard_tableau {
 public:
  standard_tableau() = default;

  explicit standard_tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> parts;
    for (const auto& r : rows_) {
      if (r.empty()) throw std::invalid_argument("tableau rows must be nonempty");
      parts.push_back(static_cast<int>(r.size()));
    }
    shape_ = partition(std::move(parts));
    const int n = shape_.size();
    pos_.assign(static_cast<std::size_t>(n), cell{-1, -1});
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      for (int c = 0; c < static_cast<int>(rows_[r].size()); ++c) {
        const int v = rows_[r][c];
        if (v < 1 || v > n || pos_[v - 1].row != -1) throw std::invalid_argument("tableau entries must be 1..n once each");
        pos_[v - 1] = {r, c};
        if (c > 0 && rows_[r][c - 1] >= v) throw std::invalid_argument("tableau rows must increase");
        if (r > 0 && rows_[r - 1][c] >= v) throw std::invalid_argument("tableau columns must increase");
      }
    }
  }

  standard_tableau(std::initializer_list<std::vector<int>> rows)
      : standard_tableau(std::vector<std::vector<int>>(rows)) {}

  [[nodiscard]] const partition& shape() const { return shape_; }
  [[nodiscard]] int size() const { return shape_.size(); }
  [[nodiscard]] const std::vector<std::vector<int>>& rows() const { return rows_; }
  [[nodiscard]] cell position(int entry) const { return pos_.at(static_cast<std::size_t>(entry - 1)); }
  [[nodiscard]] int at(cell c) const { return rows_.at(c.row).at(c.col); }

  /// Rows concatenated top to bottom.
  [[nodiscard]] std::vector<int> reading_word() const {
    std::vector<int> w;
    for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
    return w;
  }

  // Within a shape, comparing rows in turn is lexicographic order on the
  // reading word, since corresponding rows have equal length.
  friend std::strong_ordering operator<=>(const standard_tableau& a, const standard_tableau& b) {
    if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }
  friend bool operator==(const standard_tableau& a, const standard_tableau& b) { return a.rows_ == b.rows_; }

 private:
  partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<cell> pos_;
};

/// T with a box containing n placed in the unique cell of lambda outside shape(T).
inline standard_tableau append_box(const standard_tableau& t, const partition& lambda) {
  if (!covers(lambda, t.shape())) throw std::domain_error("tableau shape is not covered by the target shape");
  auto rows = t.rows();
  const int n = lambda.size();
  for (int r = 0; r < lambda.length(); ++r) {
    if (r == static_cast<int>(rows.size())) rows.emplace_back();
    if (static_cast<int>(rows[r].size()) < lambda.row(r)) {
      rows[r].push_back(n);
      break;
    }
  }
  return standard_tableau(std::move(rows));
}

/// T with the cells holding entries greater than k removed.
inline standard_tableau truncate(const standard_tableau& t, int k) {
  if (k < 1 || k > t.size()) throw std::domain_error("truncation level out of range");
  std::vector<std::vector<int>> rows;
  for (const auto& r : t.rows()) {
    std::vector<int> kept;
    for (int v : r) {
      if (v <= k) kept.push_back(v);
    }
    if (kept.empty()) break;
    rows.push_back(std::move(kept));
  }
  return standard_tableau(std::move(rows));
}

/// Shape of the cells holding 1..k.
inline partition prefix_shape(const standard_tableau& t, int k) {
  if (k < 1 || k > t.size()) throw std::domain_error("prefix level out of range");
  std::vector<int> parts;
  for (const auto& r : t.rows()) {
    const auto len = std::count_if(r.begin(), r.end(), [k](int v) { return v <= k; });
    if (len == 0) break;
    parts.push_back(static_cast<int>(len));
  }
  return partition(std::move(parts));
}

/// All standard tableaux of shape lambda, sorted by reading word.
inline std::vector<standard_tableau> enumerate_syt(const partition& lambda) {
  std::vector<standard_tableau> out;
  if (lambda.empty()) return out;
  if (lambda.size() == 1) {
    out.push_back(standard_tableau{{1}});
    return out;
  }
  for (const auto& mu : down_set(lambda)) {
    for (const auto& t : enumerate_syt(mu)) out.push_back(append_box(t, lambda));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline standard_tableau conjugate_tableau(const standard_tableau& t) {
  const partition c = conjugate(t.shape());
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(c.length()));
  for (int r = 0; r < c.length(); ++r) {
    for (int k = 0; k < c.row(r); ++k) rows[r].push_back(t.at({k, r}));
  }
  return standard_tableau(std::move(rows));
}

inline standard_tableau row_superstandard(const partition& lambda) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int len : lambda.parts()) {
    std::vector<int> row;
    for (int k = 0; k < len; ++k) row.push_back(next++);
    rows.push_back(std::move(row));
  }
  return standard_tableau(std::move(rows));
}

/// The tableau T_lambda fixing the associator normalization: row
/// superstandard for the smaller member of a self-conjugate cover, and the
/// partner's tableau plus a diagonal box holding n for the larger member.
inline standard_tableau reference_tableau(const partition& lambda) {
  auto [partner, role] = self_conjugate_cover_partner(lambda);
  if (role == cover_role::smaller) return row_superstandard(lambda);
  return append_box(row_superstandard(partner), lambda);
}

/// Sign of a permutation of 1..n given as a map (index k-1 holds w(k)).
inline int permutation_sign(const std::vector<int>& w) {
  std::vector<bool> seen(w.size(), false);
  int sign = 1;
  for (std::size_t start = 0; start < w.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t k = start; !seen[k]; k = static_cast<std::size_t>(w[k] - 1)) {
      seen[k] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// epsilon(w_T), where w_T sends each entry of the reference tableau to the
/// entry of T in the same cell.
inline int permutation_sign(const partition& lambda, const standard_tableau& t) {
  if (t.shape() != lambda) throw std::domain_error("tableau shape does not match partition");
  const standard_tableau ref = reference_tableau(lambda);
  std::vector<int> w(static_cast<std::size_t>(lambda.size()));
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda.row(r); ++c) w[ref.at({r, c}) - 1] = t.at({r, c});
  }
  return permutation_sign(w);
}

/// Content of the box of i+1 minus content of the box of i (content = col - row).
inline int axial_distance(const standard_tableau& t, int i) {
  if (i < 1 || i >= t.size()) throw std::domain_error("simple transposition index out of range");
  const cell a = t.position(i);
  const cell b = t.position(i + 1);
  return (b.col - b.row) - (a.col - a.row);
}

/// s_i T: exchange i and i+1, which must lie in different rows and columns.
inline standard_tableau swap_adjacent(const standard_tableau& t, int i) {
  if (i < 1 || i >= t.size()) throw std::domain_error("simple transposition index out of range");
  const cell a = t.position(i);
  const cell b = t.position(i + 1);
  if (a.row == b.row || a.col == b.col) throw std::invalid_argument("i and i+1 share a row or column");
  auto rows = t.rows();
  std::swap(rows[a.row][a.col], rows[b.row][b.col]);
  return standard_tableau(std::move(rows));
}

}  // namespace altgt
