#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "scalar.hpp"
#include "tableau.hpp"

namespace altgt {

/// An element of V_lambda written in Young's orthogonal basis {v_T}. Only
/// nonzero coefficients are stored, keyed in reading-word order.
class irrep_vector {
 public:
  using container = std::map<standard_tableau, scalar>;

  irrep_vector() = default;
  explicit irrep_vector(partition shape) : shape_(std::move(shape)) {}

  /// The basis vector v_T.
  static irrep_vector basis(const standard_tableau& t) {
    irrep_vector v(t.shape());
    v.terms_.emplace(t, scalar(1));
    return v;
  }

  [[nodiscard]] const partition& shape() const { return shape_; }
  [[nodiscard]] const container& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t support_size() const { return terms_.size(); }

  [[nodiscard]] scalar coefficient(const standard_tableau& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? scalar() : it->second;
  }

  /// Adds c * v_T.
  void add(const standard_tableau& t, const scalar& c) {
    if (t.shape() != shape_) throw std::domain_error("tableau shape does not match vector shape");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  irrep_vector& operator+=(const irrep_vector& other) {
    check_shape(other);
    for (const auto& [t, c] : other.terms_) add(t, c);
    return *this;
  }

  friend irrep_vector operator+(irrep_vector a, const irrep_vector& b) { return a += b; }
  friend irrep_vector operator-(const irrep_vector& a) { return scalar(-1) * a; }
  friend irrep_vector operator-(const irrep_vector& a, const irrep_vector& b) { return a + (-b); }

  friend irrep_vector operator*(const scalar& c, const irrep_vector& v) {
    irrep_vector out(v.shape_);
    if (c.is_zero()) return out;
    for (const auto& [t, x] : v.terms_) out.terms_.emplace(t, c * x);
    return out;
  }

  friend bool operator==(const irrep_vector& a, const irrep_vector& b) {
    return a.shape_ == b.shape_ && a.terms_ == b.terms_;
  }

 private:
  void check_shape(const irrep_vector& other) const {
    if (other.shape_ != shape_) throw std::domain_error("vector shapes differ");
  }

  partition shape_;
  container terms_;
};

/// Hermitian inner product, conjugate-linear in the first argument, with
/// {v_T} orthonormal.
inline scalar inner_product(const irrep_vector& a, const irrep_vector& b) {
  if (a.shape() != b.shape()) throw std::domain_error("vector shapes differ");
  scalar out;
  for (const auto& [t, x] : a.terms()) {
    auto it = b.terms().find(t);
    if (it != b.terms().end()) out += x.conj() * it->second;
  }
  return out;
}

}  // namespace altgt
