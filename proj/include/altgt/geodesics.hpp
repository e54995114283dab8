#pragma once

/// Label sequences (alpha^(2), ..., alpha^(n)) descending through the
/// dagger relation, their equivalence, and the choice of one representative
/// per geodesic of the alternating Bratteli diagram.

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alt_labels.hpp"

namespace altgt {

inline bool is_valid_path(const std::vector<alt_label>& labels) {
  if (labels.empty() || labels.front().size() != 2) return false;
  for (std::size_t k = 1; k < labels.size(); ++k) {
    if (!in_dagger(labels[k - 1], labels[k])) return false;
  }
  return true;
}

/// A path in the alternating branching graph; labels[k] has size k + 2.
class alt_path {
 public:
  explicit alt_path(std::vector<alt_label> labels) : labels_(std::move(labels)) {
    if (!is_valid_path(labels_)) throw std::invalid_argument("label sequence is not a valid alternating path");
  }

  [[nodiscard]] const std::vector<alt_label>& labels() const { return labels_; }
  [[nodiscard]] int size() const { return labels_.back().size(); }
  [[nodiscard]] const alt_label& back() const { return labels_.back(); }
  [[nodiscard]] const alt_label& at_level(int k) const { return labels_.at(static_cast<std::size_t>(k - 2)); }

  /// The path with its last label dropped; needs n >= 3.
  [[nodiscard]] alt_path truncated() const {
    if (labels_.size() < 2) throw std::domain_error("cannot truncate a path of size 2");
    return alt_path(std::vector<alt_label>(labels_.begin(), labels_.end() - 1));
  }

  [[nodiscard]] alt_path extended(const alt_label& next) const {
    auto labels = labels_;
    labels.push_back(next);
    return alt_path(std::move(labels));
  }

  friend bool operator==(const alt_path&, const alt_path&) = default;

 private:
  std::vector<alt_label> labels_;
};

inline std::string to_string(const alt_path& p) {
  std::string s;
  for (const auto& a : p.labels()) {
    if (!s.empty()) s += ';';
    s += to_string(a);
  }
  return s;
}

/// Paths are compared from the top level down, each level by label_order.
inline std::strong_ordering path_order(const alt_path& a, const alt_path& b) {
  const auto& x = a.labels();
  const auto& y = b.labels();
  if (auto c = x.size() <=> y.size(); c != 0) return c;
  for (std::size_t k = x.size(); k-- > 0;) {
    if (auto c = label_order(x[k], y[k]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

inline bool path_less(const alt_path& a, const alt_path& b) { return path_order(a, b) < 0; }

inline std::vector<alt_path> enumerate_paths(const alt_label& alpha) {
  if (alpha.size() < 2) throw std::domain_error("paths need n >= 2");
  std::vector<alt_path> out;
  if (alpha.size() == 2) {
    out.emplace_back(std::vector<alt_label>{alpha});
    return out;
  }
  for (const auto& beta : dagger_down_set(alpha)) {
    for (const auto& p : enumerate_paths(beta)) out.push_back(p.extended(alpha));
  }
  std::sort(out.begin(), out.end(), path_less);
  return out;
}

inline bool path_equivalent(const alt_path& a, const alt_path& b) {
  if (a.size() != b.size()) throw std::domain_error("paths have different sizes");
  for (std::size_t k = 0; k < a.labels().size(); ++k) {
    if (!equivalent(a.labels()[k], b.labels()[k])) return false;
  }
  return true;
}

/// Number of steps from a signed label to an unsigned one.
inline int branch_count_r(const alt_path& a) {
  int r = 0;
  const auto& l = a.labels();
  for (std::size_t k = 0; k + 1 < l.size(); ++k) {
    if (l[k].is_signed() && !l[k + 1].is_signed()) ++r;
  }
  return r;
}

/// All valid paths equivalent to a, including those ending at the conjugate
/// of a's final label.
inline std::vector<alt_path> class_members(const alt_path& a) {
  std::vector<alt_path> out;
  std::vector<alt_label> current;
  const auto& l = a.labels();
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == l.size()) {
      out.emplace_back(current);
      return;
    }
    for (const auto& choice : equivalence_class(l[k])) {
      if (k > 0 && !in_dagger(current.back(), choice)) continue;
      current.push_back(choice);
      self(self, k + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), path_less);
  return out;
}

/// One path per equivalence class among the paths ending exactly at alpha:
/// the least one under path_order. Returned in path_order.
inline std::vector<alt_path> geodesic_representatives(const alt_label& alpha) {
  std::map<std::vector<std::string>, alt_path> best;
  for (const auto& p : enumerate_paths(alpha)) {
    std::vector<std::string> key;
    for (const auto& label : p.labels()) key.push_back(to_string(canonical_label(label)));
    auto [it, inserted] = best.emplace(std::move(key), p);
    if (!inserted && path_less(p, it->second)) it->second = p;
  }
  std::vector<alt_path> out;
  for (auto& [key, p] : best) out.push_back(std::move(p));
  std::sort(out.begin(), out.end(), path_less);
  return out;
}

}  // namespace altgt
