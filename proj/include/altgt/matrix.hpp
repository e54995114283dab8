#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace altgt {

/// Dense row-major matrix of exact scalars. Products skip zero entries, so
/// the monomial-like matrices of Young's form multiply cheaply.
class scalar_matrix {
 public:
  scalar_matrix() = default;
  scalar_matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static scalar_matrix identity(std::size_t n) {
    scalar_matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = scalar(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend scalar_matrix operator*(const scalar_matrix& a, const scalar_matrix& b) {
    if (a.cols_ != b.rows_) throw std::domain_error("matrix dimensions do not agree");
    scalar_matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const scalar& x = a(r, k);
        if (x.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) {
          const scalar& y = b(k, c);
          if (!y.is_zero()) out(r, c) += x * y;
        }
      }
    }
    return out;
  }

  friend scalar_matrix operator+(const scalar_matrix& a, const scalar_matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::domain_error("matrix dimensions do not agree");
    scalar_matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
    return out;
  }

  friend scalar_matrix operator-(const scalar_matrix& a, const scalar_matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::domain_error("matrix dimensions do not agree");
    scalar_matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
    return out;
  }

  [[nodiscard]] scalar_matrix transpose() const {
    scalar_matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  [[nodiscard]] bool is_real() const {
    for (const auto& x : data_)
      if (!x.is_real()) return false;
    return true;
  }

  /// First (row, col) with a nonzero entry.
  [[nodiscard]] std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const {
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!(*this)(r, c).is_zero()) return std::pair{r, c};
    return std::nullopt;
  }

  friend bool operator==(const scalar_matrix&, const scalar_matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<scalar> data_;
};

/// Rank over Q(i). Every entry must be a Gaussian rational.
inline std::size_t gaussian_rank(const scalar_matrix& m) {
  std::vector<std::vector<gaussian_rational>> a(m.rows(), std::vector<gaussian_rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_gaussian_rational()) throw std::domain_error("entry is not a Gaussian rational");
      a[r][c] = m(r, c).gaussian_part();
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][c].is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    const gaussian_rational inv = a[rank][c].inverse();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      const gaussian_rational f = a[r][c] * inv;
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] = a[r][k] - f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace altgt
